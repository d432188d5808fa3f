#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "pencils/flag_chern.hpp"
#include "pencils/harness.hpp"
#include "pencils/json_io.hpp"
#include "pencils/ring.hpp"

namespace {

using namespace pencils;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PENCIL_ORBITS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PENCIL_ORBITS_SEED is not an integer");
        }
    }
    return 0;
}

int run_classify(const std::string& path, bool pretty) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pencil file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const AnyPencil pencil = parse_pencil_json(buffer.str());
    const std::string out = std::visit(
        [pretty](const auto& p) { return classification_to_json(classify(p), pretty); }, pencil);
    std::cout << out << "\n";
    return 0;
}

int run_table(bool as_json) {
    const Table1Report report = verify_table();
    std::cout << (as_json ? table_report_to_json(report) + "\n" : table_report_to_text(report));
    return report.all_ok() ? 0 : 1;
}

int run_schubert(const std::string& expr, int n, bool n_given) {
    const ParsedClass parsed = parse_class(expr, n);
    if (parsed.declared_n && n_given && *parsed.declared_n != n)
        throw std::invalid_argument("--N disagrees with the expression's \"@ N=\" suffix");
    std::cout << to_text(parsed.value, false) << "\n";
    return 0;
}

int run_degree(const std::string& spec, int n) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("degree expects a partition \"a,b\"");
    int a = 0;
    int b = 0;
    try {
        std::size_t ua = 0;
        std::size_t ub = 0;
        a = std::stoi(spec.substr(0, comma), &ua);
        b = std::stoi(spec.substr(comma + 1), &ub);
        if (ua != comma || ub != spec.size() - comma - 1)
            throw std::invalid_argument("degree expects a partition \"a,b\"");
    } catch (const std::logic_error&) {
        throw std::invalid_argument("degree expects a partition \"a,b\"");
    }
    std::cout << schubert_degree(a, b, n) << "\n";
    return 0;
}

int run_chern(int principal_parts, bool sym3) {
    if (sym3) {
        std::cout << to_text(chern_top_sym3_dual(), false) << "\n";
        return 0;
    }
    std::cout << to_text(chern_top_principal_parts(principal_parts), false) << "\n";
    return 0;
}

struct CheckSpec {
    std::string name;
    TrialReport (*run)(int, std::uint64_t);
    int default_trials;
    double threshold;
};

const std::vector<CheckSpec>& check_table() {
    static const std::vector<CheckSpec> table{
        {"tangent", verify_tangent_sextic, kDefaultTangentTrials, kTangentThreshold},
        {"flex", verify_flex_count, kDefaultFlexTrials, kFlexThreshold},
        {"generic", verify_generic_line, kDefaultGenericTrials, kGenericThreshold},
        {"secantJ", verify_secant_J, kDefaultSecantTrials, kSecantThreshold},
    };
    return table;
}

int run_verify(const std::string& check, int trials, std::uint64_t seed) {
    bool ok = true;
    std::vector<std::string> reports;
    for (const CheckSpec& spec : check_table()) {
        if (check != "all" && check != spec.name) continue;
        const TrialReport report = spec.run(trials > 0 ? trials : spec.default_trials, seed);
        ok = ok && report.success_rate() >= spec.threshold;
        reports.push_back(trial_report_to_json(report, false));
    }
    if (reports.empty())
        throw std::invalid_argument("unknown check \"" + check +
                                    "\" (expected tangent|flex|generic|secantJ|all)");
    if (reports.size() == 1) {
        std::cout << reports[0] << "\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? "," : "") << reports[i];
        std::cout << "]\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pencils of plane conics: orbit classification and the Chow ring of G(1,5)"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "Classify a pencil given as JSON");
    std::string pencil_path;
    bool pretty = false;
    classify_cmd->add_option("--pencil", pencil_path, "Pencil JSON file")->required();
    classify_cmd->add_flag("--pretty", pretty, "Indent the output JSON");

    auto* table_cmd = app.add_subcommand("table", "Reproduce the orbit-closure class table");
    bool table_json = false;
    table_cmd->add_flag("--json", table_json, "Emit JSON instead of text");

    auto* schubert_cmd = app.add_subcommand("schubert", "Evaluate a Schubert-class expression");
    std::string expr;
    int n = 5;
    schubert_cmd->add_option("expr", expr, "Expression, e.g. \"s[1]*s[1]\"")->required();
    auto* n_opt = schubert_cmd->add_option("--N", n, "Ambient projective dimension")
                      ->default_val(5);

    auto* degree_cmd = app.add_subcommand("degree", "Pluecker degree of a Schubert cycle");
    std::string degree_spec;
    int degree_n = 5;
    degree_cmd->add_option("partition", degree_spec, "Partition \"a,b\"")->required();
    degree_cmd->add_option("--N", degree_n, "Ambient projective dimension")->default_val(5);

    auto* chern_cmd = app.add_subcommand("chern", "Chern classes of the jet bundles");
    int principal_parts = 0;
    bool sym3 = false;
    auto* pp_opt = chern_cmd->add_option("--principal-parts", principal_parts,
                                         "Top Chern class c_r(E^r), r in 1..4");
    auto* sym3_flag = chern_cmd->add_flag("--sym3", sym3, "c_4(Sym^3 S*) via splitting");
    pp_opt->excludes(sym3_flag);

    auto* verify_cmd = app.add_subcommand("verify", "Run randomized exact verifications");
    std::string check = "all";
    int trials = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    verify_cmd->add_option("--check", check, "tangent|flex|generic|secantJ|all")
        ->default_val("all");
    verify_cmd->add_option("--trials", trials, "Trial count (0 = per-check default)");
    verify_cmd->add_option("--seed", seed, "Master seed")->each([&](const std::string&) {
        seed_given = true;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(pencil_path, pretty);
        if (table_cmd->parsed()) return run_table(table_json);
        if (schubert_cmd->parsed()) return run_schubert(expr, n, n_opt->count() > 0);
        if (degree_cmd->parsed()) return run_degree(degree_spec, degree_n);
        if (chern_cmd->parsed()) {
            if (!sym3 && pp_opt->count() == 0)
                throw std::invalid_argument("chern needs --principal-parts or --sym3");
            return run_chern(principal_parts, sym3);
        }
        if (verify_cmd->parsed()) {
            if (!seed_given) seed = default_seed();
            return run_verify(check, trials, seed);
        }
    } catch (const internal_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
