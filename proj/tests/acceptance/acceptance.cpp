// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "lcnf/analysis.hpp"
#include "lcnf/bounds.hpp"
#include "lcnf/cli.hpp"
#include "lcnf/constructions.hpp"
#include "lcnf/dimacs.hpp"
#include "lcnf/reduction.hpp"
#include "lcnf/set_systems.hpp"
#include "lcnf/solver.hpp"

#include "support/oracle.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace lcnf;
namespace fs = std::filesystem;

namespace {

struct Failure
{
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure{what};
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr)
{
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out)
        *out = o.str();
    return code;
}

fs::path scratch_dir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("lcnf-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text)
{
    const auto path = (scratch_dir() / name).string();
    std::ofstream(path) << text;
    return path;
}

/// Every round of a peel report against its input, checked independently.
void check_peel_rounds(const Formula& f, std::size_t k, const std::string& label)
{
    const auto report = peel(f, k);
    expect(!report.rounds.empty(), label + ": no peeling round");
    Formula current = f;
    std::size_t level = report.initial_level;
    for (const auto& r : report.rounds) {
        const auto raw = oracle::raw(current);
        const auto idx = *current.index_of(r.clause);
        std::size_t gamma = 0, satisfied = 0;
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (j != idx && oracle::shares_variable(raw[idx], raw[j])) {
                ++gamma;
                satisfied += r.assignment.satisfies(current[j]);
            }
        const std::size_t guarantee = ((r.level - 1) * gamma + 2 * r.level - 1) / (2 * r.level);
        expect(r.level == level, label + ": level does not drop by one");
        expect(r.neighborhood_size == gamma, label + ": neighborhood size");
        expect(satisfied >= guarantee, label + ": satisfied count below guarantee");
        expect(r.assignment.satisfies(r.clause), label + ": chosen clause not satisfied");
        const auto next = apply(current, r.assignment);
        expect(is_linear(next), label + ": residual not linear");
        expect(is_lk(next, r.level - 1, k), label + ": residual not an [l-1,k]-CNF");
        expect(oracle::max_degree(oracle::raw(next), k) <= oracle::max_degree(raw, k) + k,
               label + ": degree grew by more than k");
        current = next;
        --level;
    }
}

bool criterion_1()
{
    for (int v : {48, 32, 31, 30}) {
        const auto start = std::chrono::steady_clock::now();
        std::string text;
        expect(run_cli({"gen-small3", "--variant", std::to_string(v)}, &text) == cli::exit_ok, "gen-small3 failed");
        const auto doc = parse_dimacs_text(text);
        expect(doc.body.size() == static_cast<std::size_t>(v), "clause count for variant " + std::to_string(v));
        const auto file = write_file("small" + std::to_string(v) + ".cnf", text);
        expect(run_cli({"check-linear", file}) == cli::exit_ok, "check-linear");
        expect(run_cli({"check-lk", file, "--l", "3", "--k", "3"}) == cli::exit_ok, "check-lk");
        expect(run_cli({"solve", file}) == cli::exit_unsat, "solve did not exit 20");
        expect(oracle::linear(oracle::raw(doc.body)), "oracle linearity");
        expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "variant took over 1 s");
    }
    return true;
}

bool criterion_2()
{
    expect(*tower_size(1).exact == 2 && *tower_size(2).exact == 8 && *tower_size(3).exact == 2048, "t(1..3)");
    expect(*tower_size(4).exact == (big_int{2048} << 2048), "t(4)");
    for (int k : {1, 2}) {
        const auto start = std::chrono::steady_clock::now();
        std::string text;
        expect(run_cli({"gen-tower", std::to_string(k)}, &text) == 0, "gen-tower");
        const auto file = write_file("tower" + std::to_string(k) + ".cnf", text);
        expect(run_cli({"brute", file}) == cli::exit_unsat, "brute on tower " + std::to_string(k));
        expect(!oracle::satisfiable(oracle::raw(parse_dimacs_text(text).body)), "oracle on tower");
        expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "tower brute over 1 s");
    }
    const auto start = std::chrono::steady_clock::now();
    std::string text;
    expect(run_cli({"gen-tower", "3"}, &text) == 0, "gen-tower 3");
    const auto t3 = parse_dimacs_text(text).body;
    expect(t3.size() == 2048 && variables(t3).size() == 1544, "tower(3) shape");
    expect(run_cli({"solve", write_file("tower3.cnf", text)}) == cli::exit_unsat, "solve tower 3");
    expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(60), "tower 3 over 60 s");
    return true;
}

bool criterion_3()
{
    for (unsigned signs = 0; signs < 8; ++signs) {
        const Clause c{Literal{Variable{1}, (signs & 1) != 0}, Literal{Variable{2}, (signs & 2) != 0},
                       Literal{Variable{3}, (signs & 4) != 0}};
        const auto f = forcer3(c);
        expect(f.size() == 6, "F6 size");
        expect(forcer_check(f, c, Engine::brute_force), "F6 forcer check");
        expect(oracle::forces(oracle::raw(f), oracle::raw(Formula{c})[0]), "F6 oracle");
    }
    for (unsigned signs = 0; signs < 4; ++signs) {
        const Clause c{Literal{Variable{1}, (signs & 1) != 0}, Literal{Variable{2}, (signs & 2) != 0}};
        const auto f = forcer3(c);
        expect(f.size() == 8, "F8 size");
        expect(forcer_check(f, c, Engine::brute_force), "F8 forcer check");
        expect(oracle::forces(oracle::raw(f), oracle::raw(Formula{c})[0]), "F8 oracle");
    }
    const Variable y{1};
    const auto neg = neg_forcer3(y);
    expect(neg.size() == 15, "neg_forcer3 size");
    expect(forcer_check(neg, Clause{Literal::negative(y)}, Engine::brute_force), "neg_forcer3 check");
    expect(oracle::forces(oracle::raw(neg), {-1}), "neg_forcer3 oracle");
    return true;
}

bool criterion_4()
{
    auto check = [](const std::string& q, const std::string& d, std::size_t lines_expected, std::size_t points) {
        std::string text;
        expect(run_cli({"gen-lines", q, d}, &text) == 0, "gen-lines");
        std::istringstream in(text);
        const auto s = read_hypergraph(in);
        expect(s.size() == lines_expected, "line count for (" + q + "," + d + ")");
        expect(s.ground_size() == points, "point count");
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> cover;
        for (const auto& set : s.sets())
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    ++cover[{set[i], set[j]}];
        expect(cover.size() == points * (points - 1) / 2, "some pair uncovered");
        for (auto [pair, count] : cover)
            expect(count == 1, "pair covered more than once");
        expect(rational(s.size()) == rational(points * (points - 1), s.k() * (s.k() - 1)), "count formula");
    };
    check("3", "2", 12, 9);
    check("2", "3", 28, 8);
    return true;
}

bool criterion_5()
{
    for (int n : {7, 9, 13}) {
        std::string text;
        expect(run_cli({"gen-greedy", std::to_string(n), "3"}, &text) == 0, "gen-greedy");
        std::istringstream in(text);
        const auto s = read_hypergraph(in);
        expect(rational(s.size()) >= rational(ceil(l_lower(n, 3))), "size below the guarantee");
        std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
        for (const auto& set : s.sets())
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    expect(covered.insert({set[i], set[j]}).second, "not linear");
        // maximal: every triple already has a covered pair
        for (std::uint32_t a = 1; a <= static_cast<std::uint32_t>(n); ++a)
            for (std::uint32_t b = a + 1; b <= static_cast<std::uint32_t>(n); ++b)
                for (std::uint32_t c = b + 1; c <= static_cast<std::uint32_t>(n); ++c)
                    expect(covered.contains({a, b}) || covered.contains({a, c}) || covered.contains({b, c}),
                           "not maximal");
    }
    return true;
}

bool criterion_6()
{
    const auto sizing = sizing_unsat(2, SystemProvider::pairs);
    expect(sizing.n == 7 && sizing.m == 20, "sizing_unsat(2, pairs)");
    int unsat = 0;
    for (int seed = 0; seed < 100; ++seed) {
        std::string text;
        expect(run_cli({"gen-random", "2", "--provider", "pairs", "--seed", std::to_string(seed)}, &text) == 0,
               "gen-random");
        const auto f = parse_dimacs_text(text).body;
        expect(f.size() == 20, "clause count");
        const bool sat = solve(f).satisfiable();
        expect(sat == oracle::satisfiable(oracle::raw(f)), "solver disagrees with oracle");
        unsat += !sat;
    }
    std::cout << "    " << unsat << " of 100 seeds unsatisfiable\n";
    expect(unsat >= 1, "no unsatisfiable seed");
    return true;
}

bool criterion_7()
{
    for (int k = 1; k <= 3; ++k) {
        const auto f = oracle::cooked(oracle::complete(k));
        expect(max_sat_exact(f).satisfied == (1U << k) - 1, "complete k-CNF for k = " + std::to_string(k));
    }
    const auto f6 = f6_core();
    expect(max_sat_exact(f6).satisfied == 5, "F6");
    expect(oracle::max_sat(oracle::raw(f6)) == 5, "F6 oracle");
    return true;
}

bool criterion_8()
{
    const auto provider = ForcerProvider::builtin3();
    std::mt19937_64 rng{20240901};
    int sat = 0;
    for (int i = 0; i < 200; ++i) {
        const auto raw = oracle::random_small3(rng, static_cast<std::size_t>(i));
        expect(oracle::vars_of(raw).size() <= 6 && raw.size() <= 10, "case outside n <= 6, m <= 10");
        const auto f = oracle::cooked(raw);
        const auto r = reduce_to_linear(f, 3, provider);
        expect(is_linear(r.formula), "reduced formula not linear");
        const auto original = solve(f);
        const auto reduced = solve(r.formula);
        expect(original.satisfiable() == reduced.satisfiable(), "satisfiability differs on case " + std::to_string(i));
        expect(original.satisfiable() == oracle::satisfiable(raw), "solver disagrees with oracle");
        if (reduced.satisfiable()) {
            ++sat;
            expect(r.trace.copies_agree(reduced.model), "copies disagree");
            expect(r.trace.lift(reduced.model).satisfies(f), "back-mapped model fails");
        }
    }
    std::cout << "    " << sat << " satisfiable, " << 200 - sat << " unsatisfiable\n";
    return true;
}

bool criterion_9()
{
    std::vector<Formula> suite{family3(48), family3(32), family3(31), family3(30), tower(2), tower(3), f6_core()};
    for (unsigned s = 0; s < 8; ++s)
        suite.push_back(forcer3(Clause{Literal{Variable{1}, (s & 1) != 0}, Literal{Variable{2}, (s & 2) != 0},
                                       Literal{Variable{3}, (s & 4) != 0}}));
    suite.push_back(neg_forcer3(Variable{1}));
    std::vector<std::vector<std::uint32_t>> pairs;
    for (std::uint32_t a = 1; a <= 7; ++a)
        for (std::uint32_t b = a + 1; b <= 7; ++b)
            pairs.push_back({a, b});
    const auto k7 = KSetSystem(7, 2, pairs).truncated(20);
    for (int seed = 0; seed < 40; ++seed)
        suite.push_back(random_signing(k7, SigningSeed{static_cast<std::uint64_t>(seed)}));
    for (int seed = 0; seed < 40; ++seed)
        suite.push_back(random_signing(lines(3, 2), SigningSeed{static_cast<std::uint64_t>(seed)}));
    {
        oracle::RawFormula ring;
        for (int i = 0; i < 8; ++i)
            ring.push_back({i + 1, 9 + i, (i + 1) % 8 + 1});
        suite.push_back(oracle::cooked(ring));
    }
    std::mt19937_64 rng{77};
    for (int i = 0; i < 200; ++i)
        suite.push_back(oracle::cooked(oracle::random_cnf(rng, 12, 3 + i % 40, 2, 4)));

    int certified = 0, refuted = 0;
    for (const auto& f : suite) {
        const auto cert = lll_certificate(f);
        const bool sat = solve(f).satisfiable();
        if (cert.verdict == CertificateVerdict::certified_satisfiable) {
            ++certified;
            expect(sat, "certified instance is unsatisfiable");
        }
        if (!sat && !f.empty() && min_clause_size(f) >= 2) {
            ++refuted;
            expect(cert.verdict == CertificateVerdict::inconclusive, "unsatisfiable instance not inconclusive");
            expect(cert.witness_clause.has_value(), "no violating clause reported");
            expect(cert.weights[*f.index_of(*cert.witness_clause)] > rational(1, 4), "witness weight <= 1/4");
        }
    }
    std::cout << "    " << certified << " certified, " << refuted << " unsatisfiable with a violating clause\n";
    expect(certified > 0 && refuted > 0, "suite does not exercise both directions");
    return true;
}

bool criterion_10()
{
    check_peel_rounds(family3(30), 3, "family3(30)");
    std::string text;
    expect(run_cli({"gen-tower", "2"}, &text) == 0, "gen-tower 2");
    check_peel_rounds(parse_dimacs_text(text).body, 2, "tower(2)");
    return true;
}

bool criterion_11()
{
    for (std::size_t k = 1; k <= 10; ++k) {
        const auto b = f_bounds(k);
        expect(b.lower == (big_int{1} << k), "lower != 2^k at k = " + std::to_string(k));
        for (std::size_t j = 1; j + 2 <= k; ++j) {
            const long long a = static_cast<long long>(k - j - 1);
            const long long b = static_cast<long long>(j) * (1LL << (k - 2)) -
                                static_cast<long long>(k * k * j) * (1LL << j);
            const long long den = 2 * static_cast<long long>(k - j);
            expect(peel_lower_term(k, j) == rational(a * b, den), "peeling expression value");
            expect(peel_lower_term(k, j) < rational(big_int{1} << k), "peeling expression reaches 2^k");
            if (k <= 9)
                expect(a * b < 0, "peeling expression not negative for k <= 9");
        }
        expect(b.upper == big_int(k) * k * k * k * (big_int{1} << (2 * k)), "upper != k^4 4^k");
    }
    const auto b30 = f_bounds(30);
    expect(b30.lower > (big_int{1} << 30), "k = 30 lower bound does not exceed 2^30");
    expect(b30.lower_peel_j.has_value(), "k = 30 lower bound not from peeling");
    expect(b30.upper == big_int(810000) * (big_int{1} << 60), "k = 30 upper");
    std::string json;
    expect(run_cli({"--json", "bounds", "30"}, &json) == 0, "bounds command");
    expect(json.find("\"lower\":\"" + b30.lower.str() + "\"") != std::string::npos, "bounds JSON");
    return true;
}

struct Criterion
{
    int id;
    const char* title;
    std::chrono::milliseconds limit;
    std::function<bool()> body;
};

} // namespace

int main()
{
    using namespace std::chrono_literals;
    const std::vector<Criterion> criteria{
        {1, "gadget family exactness", 4s, criterion_1},
        {2, "tower sizes and unsatisfiability", 62s, criterion_2},
        {3, "forcer semantics", 10s, criterion_3},
        {4, "Steiner line systems", 1s, criterion_4},
        {5, "greedy packing", 5s, criterion_5},
        {6, "randomized unsatisfiability at k = 2", 30s, criterion_6},
        {7, "MaxSAT tightness", 5s, criterion_7},
        {8, "reduction equisatisfiability", 120s, criterion_8},
        {9, "LLL certificate soundness and contrapositive", 30s, criterion_9},
        {10, "peeling guarantees", 10s, criterion_10},
        {11, "bounds table", 1s, criterion_11},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        bool ok = false;
        try {
            ok = c.body();
        } catch (const Failure& f) {
            reason = f.what;
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        if (ok && elapsed > c.limit) {
            ok = false;
            reason = "time limit " + std::to_string(c.limit.count()) + " ms exceeded";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << elapsed.count() << " ms)";
        if (!ok)
            std::cout << ": " << reason;
        std::cout << '\n';
        failed += !ok;
    }
    fs::remove_all(scratch_dir());
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
