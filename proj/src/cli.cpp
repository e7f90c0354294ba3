#include "lcnf/cli.hpp"

#include "lcnf/analysis.hpp"
#include "lcnf/bounds.hpp"
#include "lcnf/constructions.hpp"
#include "lcnf/dimacs.hpp"
#include "lcnf/reduction.hpp"
#include "lcnf/report.hpp"
#include "lcnf/set_systems.hpp"
#include "lcnf/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace lcnf::cli {

namespace {

using nlohmann::json;

std::size_t brute_limit()
{
    if (const char* env = std::getenv("LCNF_BRUTE_LIMIT")) {
        const auto value = std::stoul(env);
        if (value > hard_brute_limit)
            throw std::invalid_argument("LCNF_BRUTE_LIMIT may not exceed " + std::to_string(hard_brute_limit));
        return value;
    }
    return default_brute_limit;
}

DimacsDocument read_formula(const std::string& path)
{
    if (path == "-")
        return parse_dimacs(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return parse_dimacs(in);
    } catch (const parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

KSetSystem read_skeleton(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_hypergraph(in);
}

/// Writes to `path`, or to `out` when the path is empty or "-".
void write_to(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body)
{
    if (path.empty() || path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    body(file);
}

Clause parse_clause_text(const std::string& text)
{
    std::istringstream ss(text);
    std::vector<Literal> lits;
    long long value = 0;
    while (ss >> value) {
        if (value == 0)
            break;
        lits.push_back(Literal::from_dimacs(value));
    }
    if (!ss.eof() && value != 0)
        throw std::invalid_argument("clause must be whitespace-separated DIMACS literals: '" + text + "'");
    return Clause{std::move(lits)};
}

KSetSystem provider_system(SystemProvider provider, std::uint64_t n, std::size_t k)
{
    switch (provider) {
    case SystemProvider::lines: {
        std::uint32_t d = 0;
        std::uint64_t power = 1;
        while (power < n) {
            power *= k;
            ++d;
        }
        if (power != n)
            throw std::invalid_argument("lines provider needs n to be a power of k");
        return lines(static_cast<std::uint32_t>(k), d);
    }
    case SystemProvider::greedy:
        return greedy_pack(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
    case SystemProvider::pairs: {
        if (k != 2)
            throw std::invalid_argument("the pairs provider only supplies 2-sets");
        std::vector<std::vector<std::uint32_t>> sets;
        for (std::uint32_t u = 1; u <= n; ++u)
            for (std::uint32_t v = u + 1; v <= n; ++v)
                sets.push_back({u, v});
        return {static_cast<std::size_t>(n), 2, std::move(sets)};
    }
    }
    throw std::logic_error("unknown provider");
}

std::uint64_t random_seed()
{
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) | rd();
}

struct Context
{
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;
};

int emit_formula(Context& ctx, const std::string& path, const Formula& f, const Metadata& meta)
{
    write_to(path, ctx.out, [&](std::ostream& os) { emit_dimacs(os, f, meta); });
    return exit_ok;
}

int report_solve(Context& ctx, const SolveResult& r)
{
    if (ctx.json_output) {
        ctx.out << to_json(r).dump() << '\n';
    } else {
        ctx.out << "s " << (r.satisfiable() ? "SATISFIABLE" : "UNSATISFIABLE") << '\n';
        if (r.satisfiable()) {
            ctx.out << 'v';
            for (auto [v, value] : r.model.values())
                ctx.out << ' ' << (value ? "" : "-") << v.id();
            ctx.out << " 0\n";
        }
    }
    return r.satisfiable() ? exit_sat : exit_unsat;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err};
    CLI::App app{"Construct, transform and analyze linear k-CNF formulas", "lcnf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json_output, "Emit reports as JSON");

    std::function<int()> action;
    std::string out_path;

    // generators
    std::size_t k = 0;
    auto* gen_tower = app.add_subcommand("gen-tower", "Recursive unsatisfiable linear k-CNF (k <= 3)");
    gen_tower->add_option("K", k, "Clause width")->required();
    gen_tower->add_option("--out", out_path, "Output file");
    gen_tower->callback([&] {
        action = [&] {
            const auto f = tower(k);
            return emit_formula(ctx, out_path, f,
                                {{"generator", "tower"}, {"k", std::to_string(k)}, {"clauses", std::to_string(f.size())}});
        };
    });

    std::string skeleton_path, provider_name, delta_text;
    std::optional<std::uint64_t> seed, n_override, m_override;
    auto* gen_random = app.add_subcommand("gen-random", "Random signs over a linear k-set system");
    gen_random->add_option("K", k, "Clause width")->required();
    auto* skel_opt = gen_random->add_option("--skeleton", skeleton_path, "Hypergraph file");
    auto* prov_opt = gen_random->add_option("--provider", provider_name, "lines|greedy|pairs");
    skel_opt->excludes(prov_opt);
    gen_random->add_option("--n", n_override, "Ground set size");
    gen_random->add_option("--m", m_override, "Number of clauses (first m sets)");
    gen_random->add_option("--seed", seed, "64-bit seed");
    gen_random->add_option("--out", out_path, "Output file");
    gen_random->callback([&] {
        action = [&] {
            if (skeleton_path.empty() && provider_name.empty())
                throw std::invalid_argument("gen-random needs --skeleton or --provider");
            KSetSystem system;
            Metadata meta{{"generator", "random-signing"}, {"k", std::to_string(k)}};
            if (!skeleton_path.empty()) {
                system = read_skeleton(skeleton_path);
                if (system.k() != k)
                    throw std::invalid_argument("skeleton has " + std::to_string(system.k()) + "-sets, expected " +
                                                std::to_string(k));
                meta.emplace_back("skeleton", skeleton_path);
            } else {
                const auto provider = parse_provider(provider_name);
                std::uint64_t n = 0;
                std::optional<std::uint64_t> m;
                if (n_override) {
                    n = *n_override;
                } else {
                    const auto sizing = sizing_unsat(k, provider);
                    n = sizing.n;
                    m = sizing.m;
                }
                system = provider_system(provider, n, k);
                if (m && !m_override)
                    system = system.truncated(*m);
                meta.emplace_back("provider", std::string{to_string(provider)});
            }
            if (m_override)
                system = system.truncated(*m_override);
            const auto s = seed.value_or(random_seed());
            meta.emplace_back("n", std::to_string(system.ground_size()));
            meta.emplace_back("m", std::to_string(system.size()));
            meta.emplace_back("seed", std::to_string(s));
            meta.emplace_back("prng", std::string{signing_algorithm});
            return emit_formula(ctx, out_path, random_signing(system, SigningSeed{s}), meta);
        };
    });

    std::uint32_t q = 0, d = 0, n_arg = 0, k_arg = 0;
    auto* gen_lines = app.add_subcommand("gen-lines", "All lines of GF(Q)^D as a hypergraph");
    gen_lines->add_option("Q", q, "Field order (prime power)")->required();
    gen_lines->add_option("D", d, "Dimension")->required();
    gen_lines->add_option("--out", out_path, "Output file");
    gen_lines->callback([&] {
        action = [&] {
            const auto s = lines(q, d);
            write_to(out_path, ctx.out, [&](std::ostream& os) { write_hypergraph(os, s); });
            return exit_ok;
        };
    });

    auto* gen_greedy = app.add_subcommand("gen-greedy", "Greedy maximal linear k-set system over N elements");
    gen_greedy->add_option("N", n_arg, "Ground set size")->required();
    gen_greedy->add_option("K", k_arg, "Set size")->required();
    gen_greedy->add_option("--out", out_path, "Output file");
    gen_greedy->callback([&] {
        action = [&] {
            const auto s = greedy_pack(n_arg, k_arg);
            write_to(out_path, ctx.out, [&](std::ostream& os) { write_hypergraph(os, s); });
            return exit_ok;
        };
    });

    std::string clause_text;
    auto* gen_forcer = app.add_subcommand("gen-forcer3", "F6/F8 forcer for a 3- or 2-clause");
    gen_forcer->add_option("--clause", clause_text, "Clause as DIMACS literals, e.g. \"1 -2 3\"")->required();
    gen_forcer->add_option("--out", out_path, "Output file");
    gen_forcer->callback([&] {
        action = [&] {
            const auto c = parse_clause_text(clause_text);
            return emit_formula(ctx, out_path, forcer3(c), {{"generator", "forcer3"}, {"clause", clause_text}});
        };
    });

    std::uint32_t var_id = 0;
    auto* gen_neg = app.add_subcommand("gen-neg-forcer3", "15-clause forcer that fixes a variable to 0");
    gen_neg->add_option("--var", var_id, "Variable id")->required()->check(CLI::PositiveNumber);
    gen_neg->add_option("--out", out_path, "Output file");
    gen_neg->callback([&] {
        action = [&] {
            return emit_formula(ctx, out_path, neg_forcer3(Variable{var_id}),
                                {{"generator", "neg-forcer3"}, {"var", std::to_string(var_id)}});
        };
    });

    int variant = 0;
    auto* gen_small = app.add_subcommand("gen-small3", "Small unsatisfiable linear 3-CNFs");
    gen_small->add_option("--variant", variant, "48|32|31|30")->required()->check(CLI::IsMember({48, 32, 31, 30}));
    gen_small->add_option("--out", out_path, "Output file");
    gen_small->callback([&] {
        action = [&] {
            return emit_formula(ctx, out_path, family3(variant),
                                {{"generator", "small3"}, {"variant", std::to_string(variant)}});
        };
    });

    auto* gen_partial = app.add_subcommand("gen-partial", "Random linear k-CNF in which every assignment "
                                                          "leaves a (1-delta)2^-k share unsatisfied");
    gen_partial->add_option("K", k, "Clause width")->required();
    gen_partial->add_option("--delta", delta_text, "delta in (0,1], e.g. 1, 0.5 or 1/2")->required();
    gen_partial->add_option("--seed", seed, "64-bit seed");
    gen_partial->add_option("--out", out_path, "Output file");
    gen_partial->callback([&] {
        action = [&] {
            const auto sizing = sizing_partial(k, parse_rational(delta_text));
            auto system = greedy_pack(static_cast<std::uint32_t>(sizing.n), static_cast<std::uint32_t>(k));
            if (system.size() < sizing.m)
                throw std::runtime_error("greedy system has " + std::to_string(system.size()) + " sets, need " +
                                         std::to_string(sizing.m));
            system = system.truncated(sizing.m);
            const auto s = seed.value_or(random_seed());
            return emit_formula(ctx, out_path, random_signing(system, SigningSeed{s}),
                                {{"generator", "partial-sat"},
                                 {"k", std::to_string(k)},
                                 {"delta", to_string(*sizing.delta)},
                                 {"n", std::to_string(sizing.n)},
                                 {"m", std::to_string(sizing.m)},
                                 {"seed", std::to_string(s)},
                                 {"prng", std::string{signing_algorithm}}});
        };
    });

    // transformation
    std::string in_path, forcer_path, trace_path;
    auto* reduce_cmd = app.add_subcommand("reduce", "Compile a k-CNF into an equisatisfiable linear k-CNF");
    reduce_cmd->add_option("--k", k, "Clause width (>= 3)")->required();
    reduce_cmd->add_option("IN", in_path, "Input DIMACS ('-' for stdin)")->required();
    reduce_cmd->add_option("--forcer", forcer_path,
                           "Forcer source: a forcer with a 'c forced_var=<id>' line, or an unsatisfiable linear k-CNF");
    reduce_cmd->add_option("--out", out_path, "Output file");
    reduce_cmd->add_option("--trace", trace_path, "Trace JSON file (default: <out>.trace.json)");
    reduce_cmd->callback([&] {
        action = [&] {
            const auto input = read_formula(in_path);
            std::optional<ForcerProvider> provider;
            if (forcer_path.empty()) {
                if (k != 3)
                    throw std::invalid_argument("k = " + std::to_string(k) + " needs a --forcer file");
                provider = ForcerProvider::builtin3();
            } else {
                const auto doc = read_formula(forcer_path);
                std::optional<std::uint32_t> forced;
                for (const auto& [key, value] : doc.metadata())
                    if (key == "forced_var")
                        forced = static_cast<std::uint32_t>(std::stoul(value));
                provider = forced ? ForcerProvider::from_forcer(doc.body, Variable{*forced}, k)
                                  : ForcerProvider::from_unsatisfiable(doc.body, k);
            }
            const auto reduction = reduce_to_linear(input.body, k, *provider);
            const Metadata meta{{"generator", "reduce"},
                                {"k", std::to_string(k)},
                                {"input", in_path},
                                {"forcer_source", std::string{to_string(provider->source())}}};
            emit_formula(ctx, out_path, reduction.formula, meta);
            std::string sidecar = trace_path;
            if (sidecar.empty() && !out_path.empty() && out_path != "-")
                sidecar = out_path + ".trace.json";
            if (!sidecar.empty())
                write_to(sidecar, ctx.out, [&](std::ostream& os) { os << to_json(reduction.trace, meta).dump(2) << '\n'; });
            return exit_ok;
        };
    });

    // solvers
    auto* solve_cmd = app.add_subcommand("solve", "DPLL satisfiability (exit 10 SAT, 20 UNSAT)");
    solve_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    solve_cmd->callback([&] { action = [&] { return report_solve(ctx, solve(read_formula(in_path).body)); }; });

    auto* brute_cmd = app.add_subcommand("brute", "Exhaustive satisfiability (exit 10 SAT, 20 UNSAT)");
    brute_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    brute_cmd->callback([&] {
        action = [&] { return report_solve(ctx, brute_force(read_formula(in_path).body, brute_limit())); };
    });

    auto* maxsat_cmd = app.add_subcommand("maxsat", "Exact MaxSAT by enumeration (exit 10 if all clauses fit, else 20)");
    maxsat_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    maxsat_cmd->callback([&] {
        action = [&] {
            const auto f = read_formula(in_path).body;
            const auto r = max_sat_exact(f, brute_limit());
            if (ctx.json_output) {
                auto j = to_json(r);
                j["clauses"] = f.size();
                ctx.out << j.dump() << '\n';
            } else {
                ctx.out << "o " << f.size() - r.satisfied << '\n' << "satisfied " << r.satisfied << " of " << f.size()
                        << '\n';
            }
            return r.satisfied == f.size() ? exit_sat : exit_unsat;
        };
    });

    // validators
    auto* linear_cmd = app.add_subcommand("check-linear", "Exit 0 iff the formula is linear");
    linear_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    linear_cmd->callback([&] {
        action = [&] {
            const bool ok = is_linear(read_formula(in_path).body);
            if (ctx.json_output)
                ctx.out << json{{"linear", ok}}.dump() << '\n';
            else
                ctx.out << (ok ? "linear" : "not linear") << '\n';
            return ok ? exit_ok : exit_property_failed;
        };
    });

    std::size_t l_arg = 0;
    auto* lk_cmd = app.add_subcommand("check-lk", "Exit 0 iff every clause size lies in [L, K]");
    lk_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    lk_cmd->add_option("--l", l_arg, "Smallest allowed clause size")->required();
    lk_cmd->add_option("--k", k, "Largest allowed clause size")->required();
    lk_cmd->callback([&] {
        action = [&] {
            const bool ok = is_lk(read_formula(in_path).body, l_arg, k);
            if (ctx.json_output)
                ctx.out << json{{"lk", ok}, {"l", l_arg}, {"k", k}}.dump() << '\n';
            else
                ctx.out << (ok ? "" : "not an ") << (ok ? "[" : "[") << l_arg << ',' << k << "]-CNF\n";
            return ok ? exit_ok : exit_property_failed;
        };
    });

    // analysis
    auto* lll_cmd = app.add_subcommand("lll-cert", "Local Lemma satisfiability certificate");
    lll_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    lll_cmd->callback([&] {
        action = [&] {
            const auto f = read_formula(in_path).body;
            const auto cert = lll_certificate(f);
            if (ctx.json_output) {
                ctx.out << to_json(cert).dump() << '\n';
            } else {
                ctx.out << "verdict " << to_string(cert.verdict) << '\n';
                if (cert.witness_clause) {
                    const auto idx = *f.index_of(*cert.witness_clause);
                    ctx.out << "witness " << to_string(*cert.witness_clause) << " weight " << to_string(cert.weights[idx])
                            << '\n';
                }
            }
            return exit_ok;
        };
    });

    auto* peel_cmd = app.add_subcommand("peel", "Run the neighborhood peeling procedure");
    peel_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    peel_cmd->add_option("--k", k, "Maximum clause size")->required();
    peel_cmd->callback([&] {
        action = [&] {
            const auto report = peel(read_formula(in_path).body, k);
            if (ctx.json_output) {
                ctx.out << to_json(report).dump() << '\n';
            } else {
                ctx.out << "round  l  |Gamma|  weight  pivot  satisfied  guarantee  d_before  d_after\n";
                for (std::size_t i = 0; i < report.rounds.size(); ++i) {
                    const auto& r = report.rounds[i];
                    ctx.out << i << "  " << r.level << "  " << r.neighborhood_size << "  " << to_string(r.weight)
                            << "  " << r.pivot.id() << "  " << r.satisfied << "  " << r.guarantee << "  "
                            << r.degree_before << "  " << r.degree_after << '\n';
                }
                ctx.out << "status " << to_string(report.status) << ", residual " << report.residual.size()
                        << " clauses\n";
            }
            return exit_ok;
        };
    });

    auto* minimize_cmd = app.add_subcommand("minimize", "Minimal unsatisfiable subformula");
    minimize_cmd->add_option("IN", in_path, "Input DIMACS")->required();
    minimize_cmd->add_option("--out", out_path, "Output file");
    minimize_cmd->callback([&] {
        action = [&] {
            const auto f = read_formula(in_path).body;
            if (solve(f).satisfiable()) {
                ctx.err << "input is satisfiable; no unsatisfiable core exists\n";
                return exit_property_failed;
            }
            return emit_formula(ctx, out_path, minimize_unsat(f), {{"generator", "minimize"}, {"input", in_path}});
        };
    });

    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on f(k) and the tower size t(k)");
    bounds_cmd->add_option("K", k, "Clause width")->required()->check(CLI::PositiveNumber);
    bounds_cmd->callback([&] {
        action = [&] {
            const auto b = f_bounds(k);
            const auto t = tower_size(k);
            if (ctx.json_output) {
                ctx.out << to_json(b, t).dump() << '\n';
            } else {
                ctx.out << "k        " << b.k << '\n'
                        << "lower    " << b.lower << (b.lower_peel_j ? " (peeling, j = " + std::to_string(*b.lower_peel_j) + ")" : " (2^k)") << '\n'
                        << "upper    " << b.upper << '\n'
                        << "t(k)     " << t.text << '\n';
            }
            return exit_ok;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "lcnf: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace lcnf::cli
