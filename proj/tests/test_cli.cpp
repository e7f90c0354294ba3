#include "lcnf/cli.hpp"
#include "lcnf/dimacs.hpp"
#include "lcnf/report.hpp"
#include "lcnf/set_systems.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace lcnf;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run lcnf_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch
{
public:
    Scratch() : dir_{fs::temp_directory_path() / ("lcnf-cli-" + std::to_string(::getpid()))}
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path(name)) << text;
        return path(name);
    }

private:
    fs::path dir_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("generators produce linear formulas that re-parse")
    {
        Scratch scratch;
        const std::vector<std::vector<std::string>> commands{
            {"gen-tower", "2"},
            {"gen-tower", "3"},
            {"gen-small3", "--variant", "30"},
            {"gen-small3", "--variant", "48"},
            {"gen-forcer3", "--clause", "1 -2 3"},
            {"gen-forcer3", "--clause", "-1 2"},
            {"gen-neg-forcer3", "--var", "4"},
            {"gen-random", "3", "--provider", "lines", "--seed", "5"},
            {"gen-random", "2", "--provider", "pairs", "--seed", "5"},
            {"gen-random", "3", "--provider", "greedy", "--n", "9", "--seed", "1"},
            {"gen-partial", "2", "--delta", "1", "--seed", "3"},
        };
        for (const auto& cmd : commands) {
            CAPTURE(cmd.front());
            auto r = lcnf_run(cmd);
            REQUIRE(r.code == cli::exit_ok);
            const auto doc = parse_dimacs_text(r.out);
            CHECK(is_linear(doc.body));
            const auto file = scratch.write("gen.cnf", r.out);
            CHECK(lcnf_run({"check-linear", file}).code == cli::exit_ok);
        }
    }

    TEST_CASE("seeded generators are reproducible from their metadata")
    {
        const auto first = lcnf_run({"gen-random", "2", "--provider", "pairs"});
        REQUIRE(first.code == 0);
        std::string seed;
        for (const auto& [key, value] : parse_dimacs_text(first.out).metadata())
            if (key == "seed")
                seed = value;
        REQUIRE_FALSE(seed.empty());
        const auto again = lcnf_run({"gen-random", "2", "--provider", "pairs", "--seed", seed});
        CHECK(again.out == first.out);

        const auto p1 = lcnf_run({"gen-partial", "2", "--delta", "1/2", "--seed", "9"});
        const auto p2 = lcnf_run({"gen-partial", "2", "--delta", "0.5", "--seed", "9"});
        CHECK(p1.code == 0);
        CHECK(p1.out == p2.out);
    }

    TEST_CASE("solver exit codes")
    {
        Scratch scratch;
        const auto unsat = scratch.write("u.cnf", "p cnf 1 2\n1 0\n-1 0\n");
        const auto sat = scratch.write("s.cnf", "p cnf 2 1\n1 -2 0\n");
        CHECK(lcnf_run({"solve", unsat}).code == cli::exit_unsat);
        CHECK(lcnf_run({"solve", sat}).code == cli::exit_sat);
        CHECK(lcnf_run({"brute", unsat}).code == cli::exit_unsat);
        CHECK(lcnf_run({"brute", sat}).code == cli::exit_sat);
        CHECK(lcnf_run({"maxsat", unsat}).code == cli::exit_unsat);
        CHECK(lcnf_run({"maxsat", sat}).code == cli::exit_sat);

        const auto json = nlohmann::json::parse(lcnf_run({"--json", "solve", sat}).out);
        CHECK(json.at("verdict") == "SAT");
        const auto ms = nlohmann::json::parse(lcnf_run({"--json", "maxsat", unsat}).out);
        CHECK(ms.at("satisfied") == 1);
    }

    TEST_CASE("validators")
    {
        Scratch scratch;
        const auto nonlinear = scratch.write("n.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n");
        CHECK(lcnf_run({"check-linear", nonlinear}).code == cli::exit_property_failed);
        CHECK(lcnf_run({"check-lk", nonlinear, "--l", "3", "--k", "3"}).code == cli::exit_ok);
        CHECK(lcnf_run({"check-lk", nonlinear, "--l", "2", "--k", "2"}).code == cli::exit_property_failed);
    }

    TEST_CASE("errors exit with code 2")
    {
        Scratch scratch;
        const auto bad = scratch.write("bad.cnf", "p cnf 1 1\n2 0\n");
        const auto r = lcnf_run({"solve", bad});
        CHECK(r.code == cli::exit_error);
        CHECK(r.err.find("line 2") != std::string::npos);
        CHECK(lcnf_run({"solve", scratch.path("missing.cnf")}).code == cli::exit_error);
        CHECK(lcnf_run({"gen-tower", "4"}).code == cli::exit_error);
        CHECK(lcnf_run({"gen-small3", "--variant", "29"}).code == cli::exit_error);
        CHECK(lcnf_run({"nonsense"}).code == cli::exit_error);
        CHECK(lcnf_run({"gen-random", "1", "--provider", "pairs", "--seed", "1"}).code == cli::exit_error);
        CHECK(lcnf_run({"--help"}).code == cli::exit_ok);
    }

    TEST_CASE("brute force limit comes from the environment")
    {
        Scratch scratch;
        const auto file = scratch.write("t.cnf", lcnf_run({"gen-small3", "--variant", "30"}).out);
        CHECK(lcnf_run({"brute", file}).code == cli::exit_error);
        ::setenv("LCNF_BRUTE_LIMIT", "30", 1);
        CHECK(lcnf_run({"brute", file}).code == cli::exit_unsat);
        ::setenv("LCNF_BRUTE_LIMIT", "63", 1);
        CHECK(lcnf_run({"brute", file}).code == cli::exit_error);
        ::unsetenv("LCNF_BRUTE_LIMIT");
    }

    TEST_CASE("reduce writes a formula and a trace sidecar")
    {
        Scratch scratch;
        const auto in = scratch.write("in.cnf", "p cnf 4 3\n1 2 3 0\n-1 2 4 0\n1 -2 -3 0\n");
        const auto out = scratch.path("out.cnf");
        REQUIRE(lcnf_run({"reduce", "--k", "3", in, "--out", out}).code == cli::exit_ok);
        CHECK(lcnf_run({"check-linear", out}).code == cli::exit_ok);
        CHECK(lcnf_run({"check-lk", out, "--l", "3", "--k", "3"}).code == cli::exit_ok);
        CHECK(lcnf_run({"solve", out}).code == cli::exit_sat);

        const auto trace_json = nlohmann::json::parse(slurp(out + ".trace.json"));
        CHECK(trace_json.at("forcer_source") == "builtin-3");
        CHECK(trace_json.at("forcer_size") == 15);
        const auto trace = trace_from_json(trace_json);
        CHECK(trace.copy_map.size() == 4);

        const auto custom = scratch.path("trace.json");
        REQUIRE(lcnf_run({"reduce", "--k", "3", in, "--out", out, "--trace", custom}).code == 0);
        CHECK(fs::exists(custom));
    }

    TEST_CASE("reduce with forcer files")
    {
        Scratch scratch;
        const auto in = scratch.write("in.cnf", "p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
        const auto neg = lcnf_run({"gen-neg-forcer3", "--var", "1"}).out;
        const auto user = scratch.write("user.cnf", "c forced_var=1\n" + neg);
        const auto mu = scratch.write("mu.cnf", lcnf_run({"gen-small3", "--variant", "30"}).out);
        const auto out = scratch.path("out.cnf");

        REQUIRE(lcnf_run({"reduce", "--k", "3", in, "--forcer", user, "--out", out}).code == 0);
        CHECK(nlohmann::json::parse(slurp(out + ".trace.json")).at("forcer_source") == "user-file");
        REQUIRE(lcnf_run({"reduce", "--k", "3", in, "--forcer", mu, "--out", out}).code == 0);
        CHECK(nlohmann::json::parse(slurp(out + ".trace.json")).at("forcer_source") == "mu-extracted");
        CHECK(lcnf_run({"solve", out}).code == cli::exit_sat);

        const auto in4 = scratch.write("in4.cnf", "p cnf 5 2\n1 2 3 4 0\n-1 2 3 5 0\n");
        CHECK(lcnf_run({"reduce", "--k", "4", in4}).code == cli::exit_error);
        CHECK(lcnf_run({"reduce", "--k", "4", in4, "--forcer", user}).code == cli::exit_error);
        CHECK(lcnf_run({"reduce", "--k", "4", in4, "--forcer", mu}).code == cli::exit_error);
    }

    TEST_CASE("analysis commands")
    {
        Scratch scratch;
        const auto f30 = scratch.write("f30.cnf", lcnf_run({"gen-small3", "--variant", "30"}).out);
        const auto cert = nlohmann::json::parse(lcnf_run({"--json", "lll-cert", f30}).out);
        CHECK(cert.at("verdict") == "inconclusive");
        CHECK(cert.contains("witness_clause"));

        const auto peel = nlohmann::json::parse(lcnf_run({"--json", "peel", f30, "--k", "3"}).out);
        CHECK(peel.at("rounds").size() >= 1);
        CHECK(lcnf_run({"peel", f30, "--k", "3"}).out.find("status") != std::string::npos);

        const auto bounds = nlohmann::json::parse(lcnf_run({"--json", "bounds", "3"}).out);
        CHECK(bounds.at("k") == 3);
        CHECK(bounds.at("lower") == "8");
        CHECK(bounds.at("upper") == "5184");
        CHECK(bounds.at("t_k") == "2048");
        CHECK(bounds.at("lower_peel_j").is_null());
        const auto b30 = nlohmann::json::parse(lcnf_run({"--json", "bounds", "30"}).out);
        CHECK(b30.at("lower_peel_j").is_number());

        const auto tiny = scratch.write("tiny.cnf", "p cnf 2 3\n1 0\n-1 0\n2 0\n");
        const auto mus = lcnf_run({"minimize", tiny});
        CHECK(mus.code == 0);
        CHECK(parse_dimacs_text(mus.out).body.size() == 2);
        const auto sat = scratch.write("sat.cnf", "p cnf 1 1\n1 0\n");
        CHECK(lcnf_run({"minimize", sat}).code == cli::exit_property_failed);
    }

    TEST_CASE("set-system generators")
    {
        const auto lines = lcnf_run({"gen-lines", "3", "2"});
        REQUIRE(lines.code == 0);
        std::istringstream in(lines.out);
        const auto s = read_hypergraph(in);
        CHECK(s.size() == 12);
        CHECK(check_system(s, true));

        Scratch scratch;
        const auto skeleton = scratch.write("s.hg", lines.out);
        const auto f = lcnf_run({"gen-random", "3", "--skeleton", skeleton, "--seed", "2"});
        REQUIRE(f.code == 0);
        CHECK(parse_dimacs_text(f.out).body.size() == 12);
        CHECK(lcnf_run({"gen-random", "2", "--skeleton", skeleton, "--seed", "2"}).code == cli::exit_error);

        const auto greedy = lcnf_run({"gen-greedy", "13", "3"});
        REQUIRE(greedy.code == 0);
        std::istringstream gin(greedy.out);
        CHECK(check_system(read_hypergraph(gin), false));
    }
}
