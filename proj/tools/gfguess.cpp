// Command-line front end: guess an algebraic equation for the generating
// function of an integer (or rational) sequence.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gfguess/pipeline.hpp"

namespace {

int exit_code_for(const std::string& status) {
    if (status == "conjecture-found") return 0;
    if (status == "input-error") return 2;
    return 1;  // clean negative: no-recurrence / no-relation / ...
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Guess an algebraic equation satisfied by a sequence's generating function"};

    std::string sequence_arg, file_arg, format_arg = "list", mode_arg = "auto",
                output_arg = "text";
    bool batch = false;
    gfguess::PipelineConfig cfg;

    app.add_option("--sequence", sequence_arg, "comma-separated terms (integers or num/den)");
    app.add_option("--file", file_arg, "read the sequence from a file");
    app.add_option("--format", format_arg, "input format: list | bfile")
        ->check(CLI::IsMember({"list", "bfile"}));
    app.add_option("--m0", cfg.m0, "first evaluation point m (z = 1/m)");
    app.add_option("--points", cfg.points, "number of evaluation points");
    app.add_option("--deg-y", cfg.deg_y, "initial degree bound in y");
    app.add_option("--deg-z-bound", cfg.deg_z_bound, "degree bound in z");
    app.add_option("--precision", cfg.precision, "decimal digits for evaluation");
    app.add_option("--max-order", cfg.max_order, "max recurrence order");
    app.add_option("--max-degree", cfg.max_degree, "max recurrence coefficient degree");
    app.add_option("--guard", cfg.guard, "overdetermination guard for fitting");
    app.add_option("--slack", cfg.slack, "verification slack (terms)");
    app.add_option("--mode", mode_arg,
                   "auto | recurrence-only | direct-only | lattice-only")
        ->check(CLI::IsMember({"auto", "recurrence-only", "direct-only", "lattice-only"}));
    app.add_option("--output", output_arg, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--batch", batch, "treat each input line as its own sequence");

    CLI11_PARSE(app, argc, argv);

    cfg.mode = *gfguess::parse_mode(mode_arg);
    gfguess::ReportFormat rfmt =
        output_arg == "json" ? gfguess::ReportFormat::json : gfguess::ReportFormat::text;

    try {
        std::string text;
        if (!sequence_arg.empty()) {
            text = sequence_arg;
        } else if (!file_arg.empty()) {
            text = slurp(file_arg);
        } else {
            std::cerr << "error: provide --sequence or --file\n";
            return 2;
        }

        if (batch) {
            auto reports = gfguess::run_batch(cfg, text);
            int worst = 0;
            for (const auto& rep : reports) {
                std::cout << gfguess::emit_report(rep, rfmt);
                if (rfmt == gfguess::ReportFormat::text) std::cout << "\n";
                worst = std::max(worst, exit_code_for(rep.status));
            }
            return worst;
        }

        gfguess::SequenceFormat sfmt = format_arg == "bfile" ? gfguess::SequenceFormat::bfile
                                                             : gfguess::SequenceFormat::list;
        gfguess::Sequence seq;
        try {
            seq = gfguess::parse_sequence(text, sfmt);
        } catch (const gfguess::error& e) {
            std::cerr << "input error [" << e.code << "]: " << e.what() << "\n";
            return 2;
        }
        if (seq.terms.empty()) {
            std::cerr << "input error: no terms\n";
            return 2;
        }
        auto rep = gfguess::run_pipeline(cfg, seq);
        std::cout << gfguess::emit_report(rep, rfmt);
        return exit_code_for(rep.status);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
