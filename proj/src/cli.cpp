#include "vna/cli.hpp"

#include "vna/free_monoid.hpp"
#include "vna/json_io.hpp"
#include "vna/states.hpp"
#include "vna/type_expr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace vna {

namespace {

void print_report_text(const Report& report, std::ostream& out) {
    for (const CheckResult& c : report.checks) {
        out << "check " << c.check << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.counterexample.empty()) out << " (" << c.counterexample << ")";
        out << "\n";
    }
}

Json verdict_to_json(const Algebra& a, const DuplicabilityVerdict& verdict) {
    Json j{{"blocks", algebra_to_json(a)}, {"dim", a.dim()}, {"duplicable", verdict.duplicable}};
    if (verdict.x_size) j["x_size"] = *verdict.x_size;
    if (verdict.witness_block) j["witness_block"] = *verdict.witness_block;
    j["report"] = report_to_json(verdict.report);
    return j;
}

int run_classify(const std::string& algebra_text, const std::string& format, std::ostream& out) {
    const Algebra a = Algebra::parse(algebra_text);
    const DuplicabilityVerdict verdict = decide_duplicable(a);
    if (format == "json") {
        out << verdict_to_json(a, verdict).dump(2) << "\n";
    } else {
        out << "algebra: " << a.to_string() << " (dim " << a.dim() << ")\n";
        out << "duplicable: " << (verdict.duplicable ? "yes" : "no") << "\n";
        if (verdict.x_size) out << "x_size: " << *verdict.x_size << "\n";
        if (verdict.witness_block) out << "witness_block: " << *verdict.witness_block << "\n";
        print_report_text(verdict.report, out);
    }
    return 0;
}

int run_denote(const std::string& type_text, const std::string& format, std::ostream& out) {
    const TypeExpr t = parse_type(type_text);
    const Algebra a = denote_type(t);
    const DuplicabilityVerdict verdict = decide_duplicable(a);
    if (format == "json") {
        Json j{{"type", print_type(t)},
               {"blocks", algebra_to_json(a)},
               {"dim", a.dim()},
               {"duplicable", verdict.duplicable}};
        if (verdict.x_size) j["x_size"] = *verdict.x_size;
        if (verdict.witness_block) j["witness_block"] = *verdict.witness_block;
        out << j.dump(2) << "\n";
    } else {
        out << "type: " << print_type(t) << "\n";
        out << "denotation: " << a.to_string() << " (dim " << a.dim() << ")\n";
        out << "duplicable: " << (verdict.duplicable ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_nsp(const std::string& algebra_text, const std::string& format, std::ostream& out) {
    const Algebra a = Algebra::parse(algebra_text);
    const std::vector<Character> characters = nsp(a);
    if (format == "json") {
        Json blocks = Json::array();
        for (const Character& c : characters) blocks.push_back(c.block_index);
        Json j{{"blocks", algebra_to_json(a)},
               {"dim", a.dim()},
               {"nsp_size", characters.size()},
               {"character_blocks", blocks}};
        out << j.dump(2) << "\n";
    } else {
        out << "algebra: " << a.to_string() << " (dim " << a.dim() << ")\n";
        out << "nsp_size: " << characters.size() << "\n";
        for (const Character& c : characters) out << "character at block " << c.block_index << "\n";
    }
    return 0;
}

int run_free_monoid(const std::string& algebra_text, const std::string& format,
                    std::ostream& out) {
    const Algebra a = Algebra::parse(algebra_text);
    const std::vector<Character> characters = nsp(a);
    const int n = static_cast<int>(characters.size());
    const Algebra bang = linf(n);
    const LinMap unit_map = eta(a);
    const Monoid monoid = canonical_monoid(n);
    const Report monoid_report = verify_monoid(monoid, true);
    // Demo of the universal property: eta itself factors through eta by the
    // identity morphism.
    const Factorization factorization = factorize(unit_map, monoid);

    if (format == "json") {
        Json j{{"blocks", algebra_to_json(a)},
               {"dim", a.dim()},
               {"nsp_size", n},
               {"bang_blocks", algebra_to_json(bang)},
               {"eta_miu", check_miu(unit_map).all()},
               {"monoid_report", report_to_json(monoid_report)},
               {"factorization",
                Json{{"h", factorization.h},
                     {"certificate", report_to_json(factorization.certificate)}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "algebra: " << a.to_string() << " (dim " << a.dim() << ")\n";
        out << "nsp_size: " << n << "\n";
        out << "bang: " << bang.to_string() << "\n";
        out << "eta passes MIU: " << (check_miu(unit_map).all() ? "yes" : "no") << "\n";
        out << "canonical monoid on bang:\n";
        print_report_text(monoid_report, out);
        out << "factorization of eta through itself:\n";
        print_report_text(factorization.certificate, out);
    }
    return 0;
}

int run_probe(const std::string& algebra_text, int iters, uint64_t seed,
              const std::string& format, std::ostream& out) {
    const Algebra a = Algebra::parse(algebra_text);
    const ProbeResult result = broadcast_feasibility_probe(a, iters, seed);
    if (format == "json") {
        Json j{{"residual", result.final_residual},
               {"iterations", result.iterations},
               {"feasible", result.feasible}};
        out << j.dump(2) << "\n";
    } else {
        out << "algebra: " << a.to_string() << " (dim " << a.dim() << ")\n";
        out << "residual: " << result.final_residual << "\n";
        out << "iterations: " << result.iterations << "\n";
        out << "feasible: " << (result.feasible ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_verify(const std::string& algebra_text, const std::string& file, int samples,
               uint64_t seed, const std::string& format, std::ostream& out, std::ostream& err) {
    const Algebra a = Algebra::parse(algebra_text);
    std::ifstream in(file);
    if (!in) {
        err << "cannot open duplicator file: " << file << "\n";
        return 2;
    }
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        err << "invalid duplicator file: " << e.what() << "\n";
        return 2;
    }
    const Duplicator candidate = duplicator_from_json(j);
    const Report report = verify_duplicator(a, candidate, samples, seed);
    if (format == "json") {
        Json result{{"blocks", algebra_to_json(a)},
                    {"verified", report.all_pass()},
                    {"report", report_to_json(report)}};
        out << result.dump(2) << "\n";
    } else {
        out << "algebra: " << a.to_string() << "\n";
        out << "verified: " << (report.all_pass() ? "yes" : "no") << "\n";
        print_report_text(report, out);
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-dimensional von Neumann algebra toolkit"};
    app.require_subcommand(1);

    std::string algebra_text, type_text, duplicator_file;
    std::string format = "text";
    int iters = 20000;
    int samples = 64;
    uint64_t seed = 42;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "decide duplicability of an algebra");
    classify->add_option("--algebra", algebra_text, "block sizes, e.g. \"1,1,2\"")->required();
    add_format(classify);

    CLI::App* denote = app.add_subcommand("denote", "denote a type expression into an algebra");
    denote->add_option("--type", type_text, "type expression, e.g. \"!(bit*bit)\"")->required();
    add_format(denote);

    CLI::App* nsp_cmd = app.add_subcommand("nsp", "list the characters of an algebra");
    nsp_cmd->add_option("--algebra", algebra_text)->required();
    add_format(nsp_cmd);

    CLI::App* free_monoid =
        app.add_subcommand("free-monoid", "free commutative monoid on an algebra");
    free_monoid->add_option("--algebra", algebra_text)->required();
    add_format(free_monoid);

    CLI::App* probe = app.add_subcommand("probe", "broadcast feasibility probe");
    probe->add_option("--algebra", algebra_text)->required();
    probe->add_option("--iters", iters, "iteration budget");
    probe->add_option("--seed", seed, "start-point seed");
    add_format(probe);

    CLI::App* verify = app.add_subcommand("verify", "verify a duplicator candidate from a file");
    verify->add_option("--algebra", algebra_text)->required();
    verify->add_option("--duplicator", duplicator_file, "JSON file with {delta, unit}")
        ->required();
    verify->add_option("--samples", samples, "positivity samples per block");
    verify->add_option("--seed", seed, "positivity sampling seed");
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(algebra_text, format, out);
        if (denote->parsed()) return run_denote(type_text, format, out);
        if (nsp_cmd->parsed()) return run_nsp(algebra_text, format, out);
        if (free_monoid->parsed()) return run_free_monoid(algebra_text, format, out);
        if (probe->parsed()) return run_probe(algebra_text, iters, seed, format, out);
        if (verify->parsed())
            return run_verify(algebra_text, duplicator_file, samples, seed, format, out, err);
    } catch (const ParseError& e) {
        err << "type syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace vna
