// posmc.cpp -- command-line front end
//
// Exit codes: 0 success, 1 usage error (bad flags, unknown states, wrong
// automaton kind), 2 model/automaton parse or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posmc/analysis.hpp"
#include "posmc/io.hpp"
#include "posmc/product.hpp"

namespace {

// Anything wrong with an input document (unreadable, unparseable, invalid),
// annotated with the file name. Exit code 2.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

posmc::PossKripke load_model(const std::string& path) {
    try {
        return posmc::parse_model(slurp(path));
    } catch (const posmc::ParseError& e) {
        throw DocumentError(path + ":" + e.what());
    }
}

posmc::FiniteAutomaton load_automaton(const std::string& path) {
    try {
        return posmc::parse_automaton(slurp(path));
    } catch (const posmc::ParseError& e) {
        throw DocumentError(path + ":" + e.what());
    }
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit_report(const posmc::PossibilityReport& r, bool per_state, bool json_out) {
    if (json_out) {
        nlohmann::ordered_json j;
        j["method"] = std::string(posmc::method_name(r.method));
        j["aggregate"] = r.aggregate.value();
        nlohmann::ordered_json states(nlohmann::json::value_t::object);
        for (std::size_t i = 0; i < r.states.size(); ++i)
            states[r.states[i]] = r.per_state[i].value();
        j["per_state"] = std::move(states);
        if (r.iteration_count) j["iteration_count"] = *r.iteration_count;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << posmc::format_value(r.aggregate.value()) << "\n";
    if (per_state)
        for (std::size_t i = 0; i < r.states.size(); ++i)
            std::cout << r.states[i] << " " << posmc::format_value(r.per_state[i].value())
                      << "\n";
}

void emit_value(posmc::Possibility v, bool json_out) {
    if (json_out) {
        nlohmann::ordered_json j;
        j["aggregate"] = v.value();
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << posmc::format_value(v.value()) << "\n";
}

struct AnalysisArgs {
    std::string model;
    std::string left;
    std::string target;
    std::string method = "closure";
    std::optional<int> bound;
    bool per_state = false;
    bool json_out = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"possibility-valued model checking of finite structures"};
    app.require_subcommand(1);

    AnalysisArgs reach_args, until_args, repeated_args, safety_args, omega_args;
    std::string validate_model, measure_model, measure_prefix, closure_model;
    std::string product_model, product_aut, safety_aut, omega_aut;
    bool measure_json = false, product_dot = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a model file");
    validate_cmd->add_option("model", validate_model, "model file")->required();

    auto* measure_cmd = app.add_subcommand("measure", "possibility of a cylinder set");
    measure_cmd->add_option("model", measure_model, "model file")->required();
    measure_cmd->add_option("--prefix", measure_prefix, "comma-separated state sequence")
        ->required();
    measure_cmd->add_flag("--json", measure_json, "machine-readable output");

    auto add_report_flags = [](CLI::App* cmd, AnalysisArgs& args) {
        cmd->add_flag("--per-state", args.per_state, "print a state/value table");
        cmd->add_flag("--json", args.json_out, "machine-readable output");
    };

    auto* reach_cmd = app.add_subcommand("reach", "possibility of reaching target states");
    reach_cmd->add_option("model", reach_args.model, "model file")->required();
    reach_cmd->add_option("--target", reach_args.target, "comma-separated target states")
        ->required();
    reach_cmd->add_option("--method", reach_args.method, "closure or fixpoint")
        ->check(CLI::IsMember({"closure", "fixpoint"}));
    add_report_flags(reach_cmd, reach_args);

    auto* until_cmd =
        app.add_subcommand("until", "possibility of reaching target through constraint states");
    until_cmd->add_option("model", until_args.model, "model file")->required();
    until_cmd->add_option("--left", until_args.left, "comma-separated constraint states")
        ->required();
    until_cmd->add_option("--target", until_args.target, "comma-separated target states")
        ->required();
    int until_bound = -1;
    until_cmd->add_option("--bound", until_bound, "step bound")->check(CLI::NonNegativeNumber);
    add_report_flags(until_cmd, until_args);

    auto* repeated_cmd =
        app.add_subcommand("repeated", "possibility of visiting target states infinitely often");
    repeated_cmd->add_option("model", repeated_args.model, "model file")->required();
    repeated_cmd->add_option("--target", repeated_args.target, "comma-separated target states")
        ->required();
    add_report_flags(repeated_cmd, repeated_args);

    auto* safety_cmd = app.add_subcommand("safety", "check against a good-prefix nfa");
    safety_cmd->add_option("model", safety_args.model, "model file")->required();
    safety_cmd->add_option("automaton", safety_aut, "nfa file")->required();
    add_report_flags(safety_cmd, safety_args);

    auto* omega_cmd = app.add_subcommand("omega", "check against an nba");
    omega_cmd->add_option("model", omega_args.model, "model file")->required();
    omega_cmd->add_option("automaton", omega_aut, "nba file")->required();
    add_report_flags(omega_cmd, omega_args);

    auto* closure_cmd = app.add_subcommand("closure", "print the transitive closure");
    closure_cmd->add_option("model", closure_model, "model file")->required();

    auto* product_cmd = app.add_subcommand("product", "build the model/automaton product");
    product_cmd->add_option("model", product_model, "model file")->required();
    product_cmd->add_option("automaton", product_aut, "automaton file")->required();
    product_cmd->add_flag("--dot", product_dot, "emit DOT instead of a model document");

    try {
        app.parse(argc, argv);

        if (validate_cmd->parsed()) {
            load_model(validate_model);
            std::cout << "ok\n";
        } else if (measure_cmd->parsed()) {
            const auto m = load_model(measure_model);
            const auto names = split_csv(measure_prefix);
            const auto path = m.path(std::span<const std::string>(names));
            emit_value(m.cylinder_possibility(path), measure_json);
        } else if (reach_cmd->parsed()) {
            const auto m = load_model(reach_args.model);
            const auto target = m.subset(split_csv(reach_args.target));
            const auto report = reach_args.method == "fixpoint"
                                    ? posmc::until_possibility(m, m.all_states(), target)
                                    : posmc::reach_via_closure(m, target);
            emit_report(report, reach_args.per_state, reach_args.json_out);
        } else if (until_cmd->parsed()) {
            const auto m = load_model(until_args.model);
            const auto left = m.subset(split_csv(until_args.left));
            const auto target = m.subset(split_csv(until_args.target));
            const auto report =
                until_cmd->count("--bound")
                    ? posmc::bounded_until_possibility(m, left, target, until_bound)
                    : posmc::until_possibility(m, left, target);
            emit_report(report, until_args.per_state, until_args.json_out);
        } else if (repeated_cmd->parsed()) {
            const auto m = load_model(repeated_args.model);
            const auto target = m.subset(split_csv(repeated_args.target));
            emit_report(posmc::repeated_reach_possibility(m, target), repeated_args.per_state,
                        repeated_args.json_out);
        } else if (safety_cmd->parsed()) {
            const auto m = load_model(safety_args.model);
            const auto a = load_automaton(safety_aut);
            emit_report(posmc::check_safety(m, a), safety_args.per_state, safety_args.json_out);
        } else if (omega_cmd->parsed()) {
            const auto m = load_model(omega_args.model);
            const auto a = load_automaton(omega_aut);
            emit_report(posmc::check_omega(m, a), omega_args.per_state, omega_args.json_out);
        } else if (closure_cmd->parsed()) {
            const auto m = load_model(closure_model);
            const auto closure = posmc::transitive_closure(m.transitions());
            for (std::size_t i = 0; i < closure.dim(); ++i)
                for (std::size_t j = 0; j < closure.dim(); ++j)
                    if (closure(i, j) != posmc::Possibility::zero())
                        std::cout << m.states()[i] << " " << m.states()[j] << " "
                                  << posmc::format_value(closure(i, j).value()) << "\n";
        } else if (product_cmd->parsed()) {
            const auto m = load_model(product_model);
            const auto a = posmc::complete(load_automaton(product_aut));
            const auto prod = posmc::product(m, a, product_model, product_aut);
            if (product_dot) {
                std::cout << posmc::export_dot(prod);
            } else {
                std::cout << "# goal:";
                for (int g : prod.goal.indices()) std::cout << " " << prod.structure.states()[g];
                std::cout << "\n" << posmc::render_model(prod.structure);
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const DocumentError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const posmc::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const posmc::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const posmc::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
