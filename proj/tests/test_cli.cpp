#include <fstream>
#include <sstream>

#include <posmc/io.hpp>

#include "doctest.h"
#include "json.hpp"
#include "support/proc.hpp"

using namespace posmc::testing;

namespace {

const std::string kCli = POSMC_CLI_PATH;
const std::string kRoot = POSMC_REPO_ROOT;

std::string model(const std::string& name) {
    return shell_quote(kRoot + "/models/" + name);
}

std::string golden(const std::string& name) {
    std::ifstream in(kRoot + "/tests/golden/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProcResult run_cli(const std::string& args) { return run_process(shell_quote(kCli) + " " + args); }

}  // namespace

TEST_CASE("golden: measure of a prefix") {
    const auto result = run_cli("measure " + model("example1.pkm") + " --prefix s0,s1,s3");
    CHECK(result.exit_code == 0);
    CHECK(result.err.empty());
    CHECK(result.out == golden("measure_prefix.txt"));
}

TEST_CASE("golden: repeated reachability with the per-state table") {
    const auto result =
        run_cli("repeated " + model("example1.pkm") + " --target s2 --per-state");
    CHECK(result.exit_code == 0);
    CHECK(result.out == golden("repeated_per_state.txt"));
}

TEST_CASE("golden: both reachability methods print the same bytes") {
    const auto closure =
        run_cli("reach " + model("example1.pkm") + " --target s3 --method closure");
    const auto fixpoint =
        run_cli("reach " + model("example1.pkm") + " --target s3 --method fixpoint");
    CHECK(closure.exit_code == 0);
    CHECK(fixpoint.exit_code == 0);
    CHECK(closure.out == golden("reach_closure.txt"));
    CHECK(closure.out == fixpoint.out);
}

TEST_CASE("both reachability methods agree on every model in the corpus") {
    for (const auto& entry : std::filesystem::directory_iterator(kRoot + "/models")) {
        if (entry.path().extension() != ".pkm") continue;
        std::ifstream in(entry.path());
        std::ostringstream buf;
        buf << in.rdbuf();
        const posmc::PossKripke m = posmc::parse_model(buf.str());
        for (const auto& target : m.states()) {
            const std::string base = "reach " + shell_quote(entry.path().string()) +
                                     " --target " + target + " --per-state --method ";
            const auto closure = run_cli(base + "closure");
            const auto fixpoint = run_cli(base + "fixpoint");
            CHECK(closure.exit_code == 0);
            CHECK(closure.out == fixpoint.out);
        }
    }
}

TEST_CASE("json reports re-parse with states in declaration order") {
    const auto result =
        run_cli("until " + model("example1.pkm") + " --left s0,s1,s2 --target s3 --json");
    CHECK(result.exit_code == 0);
    const auto j = nlohmann::json::parse(result.out);
    CHECK(j.at("method") == "fixed_point");
    CHECK(j.at("aggregate") == 1.0);
    CHECK(j.at("per_state").at("s0") == 1.0);
    CHECK(j.at("iteration_count") == 3);
    // Declaration order in the serialized text.
    CHECK(result.out.find("\"s0\"") < result.out.find("\"s1\""));
    CHECK(result.out.find("\"s1\"") < result.out.find("\"s2\""));
    CHECK(result.out.find("\"s2\"") < result.out.find("\"s3\""));
}

TEST_CASE("validate accepts the fixtures and reports bad documents on exit 2") {
    CHECK(run_cli("validate " + model("example1.pkm")).exit_code == 0);
    CHECK(run_cli("validate " + model("two_state.pkm")).exit_code == 0);
    CHECK(run_cli("validate " + model("traffic_light.pkm")).exit_code == 0);

    const auto missing = run_cli("validate no_such_file.pkm");
    CHECK(missing.exit_code == 2);
    CHECK(!missing.err.empty());
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("reach " + model("example1.pkm")).exit_code == 1);  // missing --target
    const auto unknown_state =
        run_cli("reach " + model("example1.pkm") + " --target nowhere");
    CHECK(unknown_state.exit_code == 1);
    CHECK(!unknown_state.err.empty());
    // Wrong automaton kind for the subcommand.
    CHECK(run_cli("omega " + model("example1.pkm") + " " + model("ends_s2.aut")).exit_code ==
          1);
    // A prefix that is not a path.
    CHECK(run_cli("measure " + model("example1.pkm") + " --prefix s0,s3").exit_code == 1);
}

TEST_CASE("validation errors in documents exit with 2") {
    const auto tmp = std::filesystem::temp_directory_path() / "posmc_cli_bad.pkm";
    {
        std::ofstream out(tmp);
        out << "kripke\nstates a b\ninit a 1\ntrans a b 1\ntrans b b 0.5\n";
    }
    const auto result = run_cli("validate " + shell_quote(tmp.string()));
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("'b'") != std::string::npos);
    std::filesystem::remove(tmp);
}

TEST_CASE("safety and omega subcommands agree with the library fixtures") {
    const auto safety =
        run_cli("safety " + model("traffic_light.pkm") + " " + model("traffic.aut"));
    CHECK(safety.exit_code == 0);
    CHECK(safety.out == "0.6\n");

    const auto omega = run_cli("omega " + model("example1.pkm") + " " + model("inf_s2.nba") +
                               " --per-state");
    CHECK(omega.exit_code == 0);
    CHECK(omega.out.find("s0 0.7") != std::string::npos);
}

TEST_CASE("closure lists the positive entries of the transitive closure") {
    const auto result = run_cli("closure " + model("two_state.pkm"));
    CHECK(result.exit_code == 0);
    CHECK(result.out == "s1 s1 1\ns1 s2 0.5\ns2 s2 1\n");
}

TEST_CASE("the product document re-parses as a model") {
    const auto result = run_cli("product " + model("example1.pkm") + " " + model("ends_s2.aut"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("# goal:") != std::string::npos);
    const posmc::PossKripke prod = posmc::parse_model(result.out);
    CHECK(prod.num_states() == 4 * 3);  // completion adds a trap state

    const auto dot = run_cli("product " + model("example1.pkm") + " " + model("ends_s2.aut") +
                             " --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("doublecircle") != std::string::npos);
}
