#include "frecheb/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "frecheb/io.hpp"
#include "frecheb/verify.hpp"

namespace frecheb::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    double tolerance = kDefaultTolerance;
    double oracle_tol = kOracleTolerance;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    bool pretty = false;
    std::optional<double> delta;
    std::vector<std::size_t> random;
    std::vector<std::string> implications;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty()) throw UsageError("--input: required");
    if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream file(path);
    if (!file) throw UsageError("--input: cannot open " + path);
    return {std::istreambuf_iterator<char>(file), {}};
}

SystemDocument load_system(const Options& o, std::istream& in) {
    return parse_system_document(parse_json_text(read_input(o.input, in)));
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string vec_text(const UnitVector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + num(v[k]);
    return s + "]";
}

void print_report_table(const ChebyshevReport& r, std::ostream& out) {
    out << "implication: " << to_string(r.kind) << "\n";
    out << pad("j", 4) << pad("1-beta_j", 12) << pad("tau_j", 12) << pad("nabla_j", 12);
    if (r.kind == ImplicationKind::Godel) out << pad("nabla~_j", 12);
    out << pad("argmin", 8) << "attainable\n";
    for (std::size_t j = 0; j < r.rows.size(); ++j) {
        const RowDiagnostics& row = r.rows[j];
        out << pad(std::to_string(j + 1), 4) << pad(num(row.one_minus_beta), 12)
            << pad(num(row.tau), 12) << pad(num(row.nabla), 12);
        if (r.kind == ImplicationKind::Godel)
            out << pad(row.nabla_tilde ? num(*row.nabla_tilde) : "-", 12);
        out << pad(row.argmin_i ? std::to_string(*row.argmin_i + 1) : "-", 8)
            << (row.attainable ? "yes" : "no") << (row.borderline ? " (borderline)" : "") << "\n";
    }
    out << "nabla = " << num(r.nabla) << " (" << to_string(r.verdict) << ")\n";
}

void emit(const json& doc, std::ostream& out) { out << doc.dump() << "\n"; }

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    const SystemDocument doc = load_system(o, in);
    const ConsistencyResult c = check_consistency(doc.system, o.tolerance);
    if (o.pretty) {
        out << (c.consistent ? "consistent" : "inconsistent") << ", residual " << num(c.residual)
            << "\nepsilon = " << vec_text(c.epsilon) << "\n";
    } else {
        emit(to_json(c), out);
    }
    return kExitOk;
}

json distance_json(const FuzzySystem& sys, const ChebyshevReport& report, double tol) {
    json doc = to_json(report);
    doc["consistency"] = to_json(check_consistency(sys, tol));
    return doc;
}

int cmd_distance(const Options& o, std::istream& in, std::ostream& out) {
    const SystemDocument doc = load_system(o, in);
    const ChebyshevReport report = chebyshev_distance(doc.system);
    if (o.pretty) {
        print_report_table(report, out);
    } else {
        emit(distance_json(doc.system, report, o.tolerance), out);
    }
    return kExitOk;
}

int cmd_approx(const Options& o, std::istream& in, std::ostream& out) {
    const SystemDocument doc = load_system(o, in);
    const ChebyshevReport report = chebyshev_distance(doc.system);
    const ApproximationResult approx = build_approximation(doc.system, report);
    std::optional<NearApproximation> near;
    if (o.delta) near = near_approximation(doc.system, report, *o.delta);

    if (o.pretty) {
        print_report_table(report, out);
        if (approx.status == ApproximationStatus::ApproximationSetEmpty) {
            out << "approximation: none at distance nabla\n";
        } else {
            out << "lowest approximation: " << vec_text(*approx.lowest_approximation)
                << "\napproximate solution: " << vec_text(*approx.approximate_solution)
                << "\ndistance: " << num(*approx.achieved_distance) << "\n";
        }
        if (near) {
            out << "near approximation at delta " << num(near->delta) << ": "
                << vec_text(near->approximation) << " (distance " << num(near->achieved_distance)
                << ")\n";
        }
        return kExitOk;
    }
    json result = distance_json(doc.system, report, o.tolerance);
    result["approximation"] = to_json(approx);
    if (near) result["near_approximation"] = to_json(*near);
    emit(result, out);
    return kExitOk;
}

json check_json(const SystemCheck& c) {
    return {{"implication", to_string(c.report.kind)},
            {"nabla", c.report.nabla},
            {"oracle", c.oracle.inf_value},
            {"bracket_width", c.oracle.bracket_width},
            {"abs_diff", c.abs_diff},
            {"agrees", c.agrees},
            {"verdict", to_string(c.report.verdict)},
            {"member_at_nabla", c.direct_member},
            {"exact_membership", c.exact_membership},
            {"verdict_matches", c.verdict_matches},
            {"borderline", c.report.borderline()},
            {"passed", c.passed}};
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const VerifyOptions vopts{o.tolerance, o.oracle_tol};
    if (o.random.empty()) {
        const SystemDocument doc = load_system(o, in);
        const SystemCheck c = verify_system(doc.system, vopts);
        if (o.pretty) {
            out << "closed form " << num(c.report.nabla) << ", oracle " << num(c.oracle.inf_value)
                << ", diff " << num(c.abs_diff) << "\nverdict " << to_string(c.report.verdict)
                << ", nabla in E: " << (c.direct_member ? "yes" : "no")
                << (c.exact_membership ? " (exact)" : "") << "\n"
                << (c.passed ? "PASS" : "FAIL") << "\n";
        } else {
            emit(check_json(c), out);
        }
        return c.passed ? kExitOk : kExitInvariant;
    }

    if (!o.input.empty()) throw UsageError("--random: cannot be combined with --input");
    const std::size_t max_m = o.random[0];
    const std::size_t max_n = o.random[1];
    const std::size_t trials = o.random.size() > 2 ? o.random[2] : o.trials;
    if (max_m == 0 || max_n == 0) throw UsageError("--random: dimensions must be positive");

    std::vector<ImplicationKind> kinds;
    if (o.implications.empty()) {
        kinds = {ImplicationKind::Godel, ImplicationKind::Goguen, ImplicationKind::Lukasiewicz};
    } else {
        for (const auto& name : o.implications) kinds.push_back(parse_implication(name));
    }

    bool all_passed = true;
    json summaries = json::array();
    for (const ImplicationKind kind : kinds) {
        const SweepSummary s = sweep_random(kind, max_m, max_n, trials, o.seed, vopts);
        all_passed = all_passed && s.failures == 0;
        if (o.pretty) {
            out << pad(std::string(to_string(kind)), 13) << s.systems << " systems, " << s.failures
                << " failures, " << s.borderline << " borderline, " << s.infimum_verdicts
                << " infimum, max diff " << num(s.max_abs_diff) << "\n";
        }
        summaries.push_back({{"implication", to_string(kind)},
                             {"systems", s.systems},
                             {"failures", s.failures},
                             {"borderline", s.borderline},
                             {"infimum_verdicts", s.infimum_verdicts},
                             {"max_abs_diff", s.max_abs_diff},
                             {"failing_indices", s.failing_seeds}});
    }
    if (!o.pretty) emit({{"seed", o.seed}, {"passed", all_passed}, {"sweeps", summaries}}, out);
    return all_passed ? kExitOk : kExitInvariant;
}

int cmd_maxt(const Options& o, std::istream& in, std::ostream& out) {
    const MaxTDocument doc = parse_maxt_document(parse_json_text(read_input(o.input, in)));
    const double delta = delta_maxt(doc.system);
    const bool attained = maxt_membership_at(doc.system, delta, {o.tolerance, o.oracle_tol});
    if (o.pretty) {
        out << "implication: " << to_string(doc.system.kind) << "\nDelta = " << num(delta)
            << (attained ? " (attained)" : " (not attained)") << "\n";
    } else {
        emit({{"implication", to_string(doc.system.kind)}, {"delta", delta}, {"attained", attained}},
             out);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Chebyshev distance of min-implication fuzzy relational equations", "frecheb"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--input", o.input, "JSON document path, or - for standard input");
        sub->add_option("--tolerance", o.tolerance, "slack for vector comparisons")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--pretty", o.pretty, "human-readable table instead of JSON");
    };

    CLI::App* check = app.add_subcommand("check", "decide consistency");
    CLI::App* distance = app.add_subcommand("distance", "Chebyshev distance report");
    CLI::App* approx = app.add_subcommand("approx", "distance and lowest approximation");
    CLI::App* verify = app.add_subcommand("verify", "closed form against the bisection oracle");
    CLI::App* maxt = app.add_subcommand("maxt-distance", "distance for a max-T system");
    for (CLI::App* sub : {check, distance, approx, verify, maxt}) add_common(sub);

    approx->add_option("--delta", o.delta, "also build G(beta_(delta)) for delta > nabla")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--oracle-tol", o.oracle_tol, "bisection bracket width")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "seed for --random");
    verify->add_option("--trials", o.trials, "systems per implication for --random");
    verify->add_option("--random", o.random, "M N [TRIALS]: random systems up to M x N")
        ->expected(2, 3);
    verify->add_option("--implication", o.implications, "restrict --random to these kinds")
        ->check(CLI::IsMember({"godel", "goguen", "lukasiewicz"}));

    std::vector<const char*> argv{"frecheb"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (check->parsed()) return cmd_check(o, in, out);
        if (distance->parsed()) return cmd_distance(o, in, out);
        if (approx->parsed()) return cmd_approx(o, in, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        return cmd_maxt(o, in, out);
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitValidation;
}

}  // namespace frecheb::cli
