// End-to-end orchestration: fit a recurrence, evaluate the generating
// function at z = 1/m for a fan of m values, detect each value's minimal
// polynomial, interpolate the coefficient families back into one bivariate
// equation, solve for a radical closed form, and verify the conjecture
// against the input terms. Also: sequence-file parsing, batch mode, and
// text/json report emission.
#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfguess/errors.hpp"
#include "gfguess/lattice.hpp"
#include "gfguess/numerics.hpp"
#include "gfguess/reconstruct.hpp"
#include "gfguess/recurrence.hpp"
#include "gfguess/series.hpp"

namespace gfguess {

enum class PipelineMode { auto_mode, recurrence_only, direct_only, lattice_only };

inline std::optional<PipelineMode> parse_mode(const std::string& s) {
    if (s == "auto") return PipelineMode::auto_mode;
    if (s == "recurrence-only") return PipelineMode::recurrence_only;
    if (s == "direct-only") return PipelineMode::direct_only;
    if (s == "lattice-only") return PipelineMode::lattice_only;
    return std::nullopt;
}

inline std::string mode_name(PipelineMode m) {
    switch (m) {
        case PipelineMode::auto_mode: return "auto";
        case PipelineMode::recurrence_only: return "recurrence-only";
        case PipelineMode::direct_only: return "direct-only";
        case PipelineMode::lattice_only: return "lattice-only";
    }
    return "?";
}

struct PipelineConfig {
    long m0 = 100;
    long points = -1;       // -1: use deg_z_bound + 4
    long deg_y = 2;
    long deg_y_cap = 6;
    long deg_z_bound = 12;
    long precision = 200;
    long max_order = 6;
    long max_degree = 6;
    long guard = 3;
    long slack = 2;
    PipelineMode mode = PipelineMode::auto_mode;

    long effective_points() const { return points > 0 ? points : deg_z_bound + 4; }

    void validate() const {
        if (m0 < 2) throw std::invalid_argument("config: m0 must be >= 2");
        if (effective_points() < 2) throw std::invalid_argument("config: points must be >= 2");
        if (precision < 50) throw std::invalid_argument("config: precision must be >= 50");
        if (deg_y < 1 || deg_y_cap < deg_y || deg_z_bound < 1 || max_order < 1 ||
            max_degree < 0 || guard < 0 || slack < 0)
            throw std::invalid_argument("config: bounds must be positive");
    }
};

// One m in the evaluation fan: the rounded digits of S(1/m) and the minimal
// polynomial candidate found for that value.
struct EvalPoint {
    long m = 0;
    Fixed value;
    long terms_used = 0;
    std::optional<IntPoly> poly;
};

struct StageTiming {
    std::string stage;
    double millis = 0;
};

struct Report {
    Sequence input;
    std::string status;  // conjecture-found | no-recurrence | no-relation |
                         // verification-failed | divergence-suspected |
                         // unstable-interpolation | input-error
    std::string detail;  // stage of failure or a human-readable note
    std::string route;   // lattice | direct | recurrence
    std::optional<PRecurrence> recurrence;
    std::vector<EvalPoint> points;
    std::optional<BivariatePoly> equation;
    std::optional<ClosedFormResult> closed_form;
    std::optional<VerifyReport> verification;
    std::vector<StageTiming> timings;
};

namespace detail {

class StageClock {
  public:
    explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}
    template <class F>
    auto time(const std::string& stage, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto done = [&] {
            auto t1 = std::chrono::steady_clock::now();
            sink_.push_back({stage, std::chrono::duration<double, std::milli>(t1 - t0).count()});
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            done();
        } else {
            auto r = f();
            done();
            return r;
        }
    }

  private:
    std::vector<StageTiming>& sink_;
};

// The per-coefficient prediction q-hat_j(m) from a subset of points must
// describe every remaining point up to one rational scale factor per point
// (contents of the primitive per-m polynomials need not agree across m).
inline bool consistent_up_to_scale(const std::vector<PolyQ>& families, long m,
                                   const IntPoly& actual) {
    std::vector<Rat> pred;
    pred.reserve(families.size());
    for (const auto& f : families) pred.push_back(poly_eval(f, Rat(m)));
    Rat lambda;
    bool have = false;
    for (size_t j = 0; j < pred.size(); ++j) {
        Rat a = actual.coeff(j) == 0 ? Rat(0) : Rat(actual.coeff(j));
        if (!have) {
            if ((a == 0) != (pred[j] == 0)) return false;
            if (a != 0) {
                lambda = pred[j] / a;
                if (lambda == 0) return false;
                have = true;
            }
        } else if (pred[j] != lambda * a) {
            return false;
        }
    }
    return have;
}

// Assembles an equation from per-m minimal polynomials, tolerating points
// whose primitive polynomial is a rescaled member of the family (contents
// can collide with a coefficient family's common factor at some m). First
// the full set is tried; then arithmetic-progression subsets of the m's,
// validating every left-out point up to scale.
inline std::optional<AssembleResult> assemble_with_repair(const std::vector<IntPoly>& polys,
                                                          const std::vector<Int>& ms) {
    auto try_subset = [&](const std::vector<size_t>& idx) -> std::optional<AssembleResult> {
        std::vector<IntPoly> sp;
        std::vector<Int> sm;
        for (size_t i : idx) {
            sp.push_back(polys[i]);
            sm.push_back(ms[i]);
        }
        AssembleResult res;
        try {
            res = assemble_bivariate_detail(sp, sm);
        } catch (const unstable_interpolation_error&) {
            return std::nullopt;
        }
        if (idx.size() < polys.size()) {
            std::vector<bool> in(polys.size(), false);
            for (size_t i : idx) in[i] = true;
            for (size_t i = 0; i < polys.size(); ++i)
                if (!in[i] && !consistent_up_to_scale(res.coeff_polys, ms[i].get_si(), polys[i]))
                    return std::nullopt;
        }
        return res;
    };

    std::vector<size_t> all(polys.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (auto r = try_subset(all)) return r;

    for (size_t step = 2; step <= 4; ++step)
        for (size_t off = 0; off < step; ++off) {
            std::vector<size_t> idx;
            for (size_t i = off; i < polys.size(); i += step) idx.push_back(i);
            if (idx.size() < 4) continue;
            if (auto r = try_subset(idx)) return r;
        }
    return std::nullopt;
}

struct LatticeOutcome {
    bool ok = false;
    std::string fail_status;  // divergence-suspected | no-relation | unstable-interpolation
    std::string fail_detail;
};

}  // namespace detail

// Runs evaluate + algdep for each m concurrently, then interpolates the
// coefficient families; grows the m pool when stabilization needs more
// points, and escalates the algdep degree bound when no polynomial is found.
inline detail::LatticeOutcome run_lattice_route(const PRecurrence& rec,
                                                const PipelineConfig& cfg, Report& rep) {
    detail::StageClock clock(rep.timings);
    const long pool_cap = cfg.effective_points() + 16;
    long want = cfg.effective_points();
    long deg = cfg.deg_y;
    rep.points.clear();

    while (true) {
        // evaluate any m not yet in the pool (concurrently; inputs immutable)
        try {
            clock.time("evaluate", [&] {
                std::vector<std::future<EvalPoint>> futs;
                for (long i = static_cast<long>(rep.points.size()); i < want; ++i) {
                    long m = cfg.m0 + i;
                    futs.push_back(std::async(std::launch::async, [&, m] {
                        EvalPoint pt;
                        pt.m = m;
                        auto ev = eval_at_inverse_int_detail(rec, m, cfg.precision);
                        pt.value = ev.value;
                        pt.terms_used = ev.terms_used;
                        return pt;
                    }));
                }
                for (auto& f : futs) rep.points.push_back(f.get());
            });
        } catch (const divergence_error& e) {
            return {false, "divergence-suspected", e.what()};
        } catch (const singular_index_error& e) {
            return {false, "divergence-suspected", e.what()};
        }

        // minimal polynomial per m at the current degree bound
        bool all_found = clock.time("algdep", [&] {
            std::vector<std::future<std::optional<IntPoly>>> futs;
            for (auto& pt : rep.points)
                futs.push_back(std::async(std::launch::async,
                                          [&pt, deg] { return algdep(pt.value, deg); }));
            bool ok = true;
            for (size_t i = 0; i < futs.size(); ++i) {
                rep.points[i].poly = futs[i].get();
                if (!rep.points[i].poly) ok = false;
            }
            return ok;
        });
        if (!all_found) {
            if (deg < cfg.deg_y_cap) {
                ++deg;
                continue;
            }
            return {false, "no-relation",
                    "algdep found no minimal polynomial up to degree " + std::to_string(deg)};
        }

        // keep the modal y-degree; a stray lower-degree hit is an outlier
        std::vector<long> degs;
        for (const auto& pt : rep.points) degs.push_back(pt.poly->degree());
        long modal = degs[0];
        {
            std::vector<long> uniq = degs;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            size_t best_count = 0;
            for (long d : uniq) {
                size_t c = static_cast<size_t>(std::count(degs.begin(), degs.end(), d));
                if (c > best_count) {
                    best_count = c;
                    modal = d;
                }
            }
        }
        std::vector<IntPoly> polys;
        std::vector<Int> ms;
        for (const auto& pt : rep.points)
            if (pt.poly->degree() == modal) {
                polys.push_back(*pt.poly);
                ms.push_back(pt.m);
            }
        if (polys.size() >= 4) {
            auto assembled = clock.time("assemble", [&] { return detail::assemble_with_repair(polys, ms); });
            if (assembled) {
                rep.equation = assembled->equation;
                return {true, "", ""};
            }
        }

        if (want >= pool_cap)
            return {false, "unstable-interpolation",
                    "coefficient families did not stabilize with " + std::to_string(want) +
                        " evaluation points"};
        want = std::min(pool_cap, want + 4);
    }
}

namespace detail {

// Closed form + verification; sets status and returns true on a verified
// conjecture.
inline bool finish_candidate(const BivariatePoly& eq, const Sequence& seq,
                             const PipelineConfig& cfg, Report& rep) {
    StageClock clock(rep.timings);
    rep.equation = eq;
    rep.closed_form.reset();
    if (eq.y_degree() >= 1 && eq.y_degree() <= 2 && !seq.terms.empty()) {
        clock.time("closed-form", [&] {
            try {
                rep.closed_form = solve_closed_form(eq, seq.terms[0]);
            } catch (const error&) {
                rep.closed_form = ClosedFormResult{ClosedFormKind::equation_only, std::nullopt};
            }
        });
    }
    auto ver = clock.time("verify", [&] { return verify_candidate(eq, seq, cfg.slack); });
    rep.verification = ver;
    if (ver.pass) {
        rep.status = "conjecture-found";
        rep.detail.clear();
        return true;
    }
    rep.status = "verification-failed";
    rep.detail = "residual valuation " + std::to_string(ver.valuation) + " of " +
                 std::to_string(ver.term_count) + " terms";
    return false;
}

// Scans (degY, degZ) for the direct linear-system guesser; every candidate
// is verified before being accepted.
inline bool direct_route(const Sequence& seq, const PipelineConfig& cfg, long guard,
                         Report& rep) {
    StageClock clock(rep.timings);
    for (long dy = 1; dy <= cfg.deg_y_cap; ++dy)
        for (long dz = 1; dz <= cfg.deg_z_bound; ++dz) {
            std::optional<BivariatePoly> cand;
            try {
                cand = clock.time("direct-algeq", [&] { return direct_algeq(seq, dy, dz, guard); });
            } catch (const insufficient_data_error&) {
                break;  // larger dz only needs more terms
            }
            if (!cand) continue;
            rep.route = "direct";
            if (finish_candidate(*cand, seq, cfg, rep)) return true;
        }
    return false;
}

}  // namespace detail

inline Report run_pipeline(const PipelineConfig& cfg, const Sequence& seq) {
    cfg.validate();
    if (seq.terms.empty()) throw std::invalid_argument("run_pipeline: empty sequence");

    Report rep;
    rep.input = seq;
    rep.status = "no-recurrence";
    detail::StageClock clock(rep.timings);

    const bool auto_mode = cfg.mode == PipelineMode::auto_mode;

    if (cfg.mode == PipelineMode::direct_only) {
        if (!detail::direct_route(seq, cfg, cfg.guard, rep)) {
            if (rep.status == "no-recurrence") {
                rep.status = "no-relation";
                rep.detail = "direct search exhausted degree bounds";
            }
        }
        return rep;
    }

    // Recurrence fitting, relaxing the overdetermination guard only when the
    // stricter fit fails end to end; every conjecture is verified regardless.
    std::vector<long> guards{cfg.guard};
    if (auto_mode)
        for (long g = cfg.guard - 1; g >= 0; --g) guards.push_back(g);

    std::optional<PRecurrence> last_fit;
    for (long g : guards) {
        std::optional<PRecurrence> rec;
        try {
            rec = clock.time("fit-recurrence",
                             [&] { return fit_recurrence(seq, cfg.max_order, cfg.max_degree, g); });
        } catch (const insufficient_data_error&) {
            continue;
        }
        if (!rec) continue;
        if (last_fit && rec->coeffs == last_fit->coeffs && rec->inhom == last_fit->inhom &&
            rec->order == last_fit->order)
            continue;  // the relaxed guard found the same recurrence again
        last_fit = rec;
        rep.recurrence = rec;

        if (cfg.mode == PipelineMode::recurrence_only) {
            // the fit holds exactly on all input terms by construction;
            // record that as the verification verdict
            VerifyReport ver;
            ver.term_count = static_cast<long>(seq.size());
            ver.valuation = ver.term_count;
            ver.pass = true;
            rep.verification = ver;
            rep.route = "recurrence";
            rep.status = "conjecture-found";
            return rep;
        }

        auto out = run_lattice_route(*rec, cfg, rep);
        if (out.ok) {
            rep.route = "lattice";
            if (detail::finish_candidate(*rep.equation, seq, cfg, rep)) return rep;
        } else {
            rep.status = out.fail_status;
            rep.detail = out.fail_detail;
        }
        if (!auto_mode) return rep;
    }

    if (!rep.recurrence && rep.status == "no-recurrence")
        rep.detail = "no recurrence within order/degree bounds";

    if (auto_mode) {
        // last resort: the direct guesser on the raw terms
        if (detail::direct_route(seq, cfg, cfg.guard, rep)) return rep;
        if (!rep.recurrence && rep.status == "no-recurrence" && rep.detail.empty())
            rep.detail = "no recurrence within order/degree bounds";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

namespace detail {

inline Rat parse_rat_token(const std::string& tok, long line) {
    size_t slash = tok.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw parse_error(line, "empty number in '" + tok + "'");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw parse_error(line, "bare sign in '" + tok + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error(line, "malformed number '" + tok + "'");
    };
    auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
    if (slash == std::string::npos) {
        check_int(tok);
        return Rat(Int(strip_plus(tok)));
    }
    std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(strip_plus(den));
    if (d == 0) throw parse_error(line, "zero denominator in '" + tok + "'");
    Rat r(Int(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

}  // namespace detail

enum class SequenceFormat { list, bfile };

// list: comma/whitespace-separated integers or fractions num/den, '#' to end
// of line is a comment. bfile: lines "n a(n)" with contiguous ascending n;
// the offset is normalized away so terms[0] is the first listed value.
inline Sequence parse_sequence(const std::string& text, SequenceFormat format) {
    Sequence seq;
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;
    std::optional<long> expect_n;
    while (std::getline(in, raw)) {
        ++line_no;
        size_t hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ls(line);
        if (format == SequenceFormat::list) {
            std::string tok;
            while (std::getline(ls, tok, ',')) {
                std::istringstream ts(tok);
                std::string w;
                while (ts >> w) seq.terms.push_back(detail::parse_rat_token(w, line_no));
            }
        } else {
            std::string a, b, extra;
            if (!(ls >> a)) continue;  // blank line
            if (!(ls >> b)) throw parse_error(line_no, "expected 'n a(n)'");
            if (ls >> extra) throw parse_error(line_no, "trailing content '" + extra + "'");
            Rat n = detail::parse_rat_token(a, line_no);
            if (n.get_den() != 1) throw parse_error(line_no, "non-integer index '" + a + "'");
            long idx = static_cast<long>(n.get_num().get_si());
            if (expect_n && idx != *expect_n)
                throw error("non-contiguous-index",
                            "line " + std::to_string(line_no) + ": expected index " +
                                std::to_string(*expect_n) + ", got " + std::to_string(idx));
            expect_n = idx + 1;
            seq.terms.push_back(detail::parse_rat_token(b, line_no));
        }
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Report emission
// ---------------------------------------------------------------------------

namespace detail {

inline std::string poly_str(const std::vector<std::pair<std::string, long>>& terms) {
    // terms: (coefficient string, exponent); assembled most significant last
    std::string out;
    for (const auto& [c, e] : terms) {
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += mag;
        if (e > 0) out += "*z" + (e > 1 ? "^" + std::to_string(e) : std::string());
    }
    return out.empty() ? "0" : out;
}

inline std::string int_poly_str(const IntPoly& p) {
    std::vector<std::pair<std::string, long>> terms;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) terms.emplace_back(p.coeffs[i].get_str(), static_cast<long>(i));
    return poly_str(terms);
}

inline std::string polyq_str(const PolyQ& p) {
    std::vector<std::pair<std::string, long>> terms;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) terms.emplace_back(p.coeffs[i].get_str(), static_cast<long>(i));
    return poly_str(terms);
}

inline nlohmann::ordered_json polyq_json(const PolyQ& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs) arr.push_back(c.get_str());
    return arr;
}

inline nlohmann::ordered_json int_poly_json(const IntPoly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs) arr.push_back(c.get_str());
    return arr;
}

}  // namespace detail

enum class ReportFormat { text, json };

inline std::string emit_report(const Report& rep, ReportFormat format) {
    using nlohmann::ordered_json;
    if (format == ReportFormat::json) {
        ordered_json j;
        j["status"] = rep.status;
        if (!rep.detail.empty()) j["detail"] = rep.detail;
        if (!rep.route.empty()) j["route"] = rep.route;
        ordered_json input;
        if (!rep.input.label.empty()) input["label"] = rep.input.label;
        ordered_json terms = ordered_json::array();
        for (const auto& t : rep.input.terms) terms.push_back(t.get_str());
        input["terms"] = terms;
        j["input"] = input;
        if (rep.recurrence) {
            ordered_json r;
            r["order"] = rep.recurrence->order;
            ordered_json cs = ordered_json::array();
            for (const auto& p : rep.recurrence->coeffs) cs.push_back(detail::polyq_json(p));
            r["coeffs"] = cs;
            if (rep.recurrence->inhom) r["inhom"] = detail::polyq_json(*rep.recurrence->inhom);
            ordered_json inits = ordered_json::array();
            for (const auto& t : rep.recurrence->initials) inits.push_back(t.get_str());
            r["initials"] = inits;
            j["recurrence"] = r;
        }
        if (!rep.points.empty()) {
            ordered_json pts = ordered_json::array();
            for (const auto& pt : rep.points) {
                ordered_json p;
                p["m"] = pt.m;
                p["value"] = pt.value.to_string();
                p["termsUsed"] = pt.terms_used;
                if (pt.poly) p["minPoly"] = detail::int_poly_json(*pt.poly);
                pts.push_back(p);
            }
            j["points"] = pts;
        }
        if (rep.equation) {
            ordered_json rows = ordered_json::array();
            for (const auto& q : rep.equation->y_coeffs) rows.push_back(detail::polyq_json(q));
            j["equation"]["yCoeffs"] = rows;
        }
        if (rep.closed_form) {
            ordered_json cf;
            cf["kind"] = rep.closed_form->kind == ClosedFormKind::radical ? "radical"
                                                                          : "equation-only";
            if (rep.closed_form->form) {
                const auto& f = *rep.closed_form->form;
                cf["yDegree"] = f.y_deg;
                cf["quad"] = detail::int_poly_json(f.quad);
                cf["lin"] = detail::int_poly_json(f.lin);
                cf["constant"] = detail::int_poly_json(f.constant);
                if (f.y_deg == 2) {
                    cf["discriminant"] = detail::int_poly_json(f.discriminant);
                    cf["branch"] = f.branch;
                }
            }
            j["closedForm"] = cf;
        }
        if (rep.verification) {
            ordered_json v;
            v["pass"] = rep.verification->pass;
            v["residualValuation"] = rep.verification->valuation;
            v["termCount"] = rep.verification->term_count;
            if (rep.verification->series_solution_match)
                v["seriesSolutionMatch"] = *rep.verification->series_solution_match;
            j["verification"] = v;
        }
        ordered_json ts = ordered_json::array();
        for (const auto& t : rep.timings) ts.push_back({{"stage", t.stage}, {"millis", t.millis}});
        j["timings"] = ts;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "status: " << rep.status << "\n";
    if (!rep.detail.empty()) out << "detail: " << rep.detail << "\n";
    if (!rep.route.empty()) out << "route: " << rep.route << "\n";
    if (!rep.input.label.empty()) out << "sequence: " << rep.input.label << "\n";
    out << "terms (" << rep.input.size() << "):";
    for (const auto& t : rep.input.terms) out << " " << t.get_str();
    out << "\n";
    if (rep.recurrence) {
        const auto& r = *rep.recurrence;
        out << "recurrence (order " << r.order << "): (" << detail::polyq_str(r.coeffs[0])
            << ")*a(n) =";
        for (long i = 1; i <= r.order; ++i)
            out << (i > 1 ? " + (" : " (")
                << detail::polyq_str(r.coeffs[static_cast<size_t>(i)]) << ")*a(n-" << i << ")";
        if (r.inhom) out << " + (" << detail::polyq_str(*r.inhom) << ")";
        out << "   [z -> n]\n";
    }
    for (const auto& pt : rep.points) {
        out << "m=" << pt.m << "  S(1/m) = " << pt.value.to_string() << "  (" << pt.terms_used
            << " terms)";
        if (pt.poly) out << "  minpoly: " << detail::int_poly_str(*pt.poly);
        out << "\n";
    }
    if (rep.equation) {
        out << "equation: 0 =";
        bool first = true;
        for (size_t jj = 0; jj < rep.equation->y_coeffs.size(); ++jj) {
            const auto& q = rep.equation->y_coeffs[jj];
            if (q.is_zero()) continue;
            out << (first ? " " : " + ") << "(" << detail::polyq_str(q) << ")";
            if (jj == 1) out << "*y";
            if (jj > 1) out << "*y^" << jj;
            first = false;
        }
        out << "\n";
    }
    if (rep.closed_form && rep.closed_form->form) {
        const auto& f = *rep.closed_form->form;
        if (f.y_deg == 1) {
            out << "closed form: y = -(" << detail::int_poly_str(f.constant) << ") / ("
                << detail::int_poly_str(f.lin) << ")\n";
        } else {
            out << "closed form: y = (-(" << detail::int_poly_str(f.lin) << ") "
                << (f.branch > 0 ? "+" : "-") << " sqrt(" << detail::int_poly_str(f.discriminant)
                << ")) / (2*(" << detail::int_poly_str(f.quad) << "))\n";
        }
    }
    if (rep.verification) {
        out << "verification: " << (rep.verification->pass ? "pass" : "FAIL") << " (residual z^"
            << rep.verification->valuation << " over " << rep.verification->term_count
            << " terms)\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Batch mode
// ---------------------------------------------------------------------------

// One record per nonempty non-comment line, list format. Failures are
// isolated per record; reports come back in input order.
inline std::vector<Report> run_batch(const PipelineConfig& cfg, const std::string& text) {
    std::vector<Report> reports;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        Report rep;
        try {
            Sequence seq = parse_sequence(body, SequenceFormat::list);
            seq.label = "line " + std::to_string(line_no);
            rep = run_pipeline(cfg, seq);
        } catch (const std::exception& e) {
            rep.status = "input-error";
            rep.detail = e.what();
            rep.input.label = "line " + std::to_string(line_no);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace gfguess
