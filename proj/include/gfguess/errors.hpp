#pragma once

#include <stdexcept>
#include <string>

namespace gfguess {

struct error : std::runtime_error {
    std::string code;
    error(std::string c, const std::string& what)
        : std::runtime_error(what), code(std::move(c)) {}
};

struct insufficient_data_error : error {
    explicit insufficient_data_error(const std::string& w = "insufficient data")
        : error("insufficient-data", w) {}
};

struct singular_index_error : error {
    long index;
    explicit singular_index_error(long n)
        : error("singular-index",
                "leading coefficient vanishes at index " + std::to_string(n)),
          index(n) {}
};

struct divergence_error : error {
    explicit divergence_error(const std::string& w)
        : error("divergence-suspected", w) {}
};

struct duplicate_abscissa_error : error {
    duplicate_abscissa_error() : error("duplicate-abscissa", "duplicate interpolation abscissa") {}
};

struct degree_mismatch_error : error {
    explicit degree_mismatch_error(const std::string& w)
        : error("degree-mismatch", w) {}
};

struct unstable_interpolation_error : error {
    explicit unstable_interpolation_error(const std::string& w)
        : error("unstable-interpolation", w) {}
};

struct dependent_rows_error : error {
    dependent_rows_error() : error("dependent-rows", "lattice basis rows are dependent") {}
};

struct parse_error : error {
    long line;
    parse_error(long ln, const std::string& w)
        : error("malformed-line", "line " + std::to_string(ln) + ": " + w), line(ln) {}
};

}  // namespace gfguess
