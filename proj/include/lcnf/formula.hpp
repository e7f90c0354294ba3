#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcnf {

/// A configured size ceiling would be exceeded.
class limit_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class formula_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A propositional variable, identified by a positive integer.
class Variable
{
    std::uint32_t id_ = 1;

public:
    constexpr Variable() = default;
    explicit Variable(std::uint32_t id);

    [[nodiscard]] constexpr std::uint32_t id() const { return id_; }

    friend constexpr auto operator<=>(Variable, Variable) = default;
};

/// Ordered by variable id, with the negative literal before the positive one.
class Literal
{
    Variable var_;
    bool negative_ = false;

public:
    constexpr Literal() = default;
    constexpr Literal(Variable v, bool negative) : var_{v}, negative_{negative} {}

    static constexpr Literal positive(Variable v) { return {v, false}; }
    static constexpr Literal negative(Variable v) { return {v, true}; }
    /// Signed DIMACS integer; zero is rejected.
    static Literal from_dimacs(std::int64_t value);

    [[nodiscard]] constexpr Variable var() const { return var_; }
    [[nodiscard]] constexpr bool is_negative() const { return negative_; }
    [[nodiscard]] constexpr bool is_positive() const { return !negative_; }
    [[nodiscard]] std::int64_t to_dimacs() const;

    constexpr Literal operator~() const { return {var_, !negative_}; }

    /// Truth value of the literal when its variable takes `value`.
    [[nodiscard]] constexpr bool evaluate(bool value) const { return value != negative_; }

    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr std::strong_ordering operator<=>(Literal a, Literal b)
    {
        if (auto c = a.var_ <=> b.var_; c != 0)
            return c;
        // negative first
        return b.negative_ <=> a.negative_;
    }
};

using VariableSet = std::vector<Variable>; // sorted, unique

/// A set of literals over pairwise distinct variables.
///
/// Tautologies and repeated literals are rejected; literals are kept in
/// canonical order.
class Clause
{
    std::vector<Literal> lits_;

public:
    Clause() = default;
    Clause(std::initializer_list<Literal> lits);
    explicit Clause(std::vector<Literal> lits);

    static Clause from_dimacs(std::initializer_list<std::int64_t> lits);

    [[nodiscard]] std::size_t size() const { return lits_.size(); }
    [[nodiscard]] bool empty() const { return lits_.empty(); }
    [[nodiscard]] const std::vector<Literal>& literals() const { return lits_; }
    [[nodiscard]] auto begin() const { return lits_.begin(); }
    [[nodiscard]] auto end() const { return lits_.end(); }
    [[nodiscard]] const Literal& operator[](std::size_t i) const { return lits_[i]; }

    [[nodiscard]] bool contains(Literal lit) const;
    [[nodiscard]] bool mentions(Variable v) const;
    /// The literal over `v`, if any.
    [[nodiscard]] std::optional<Literal> literal_of(Variable v) const;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);
};

/// A set of clauses, stored in canonical (sorted, duplicate-free) order.
class Formula
{
    std::vector<Clause> clauses_;

public:
    Formula() = default;
    Formula(std::initializer_list<Clause> clauses);
    explicit Formula(std::vector<Clause> clauses);

    [[nodiscard]] std::size_t size() const { return clauses_.size(); }
    [[nodiscard]] bool empty() const { return clauses_.empty(); }
    [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }
    [[nodiscard]] auto begin() const { return clauses_.begin(); }
    [[nodiscard]] auto end() const { return clauses_.end(); }
    [[nodiscard]] const Clause& operator[](std::size_t i) const { return clauses_[i]; }

    [[nodiscard]] bool contains(const Clause& c) const;
    /// Position of `c` in canonical order.
    [[nodiscard]] std::optional<std::size_t> index_of(const Clause& c) const;
    [[nodiscard]] std::uint32_t max_variable_id() const;
    [[nodiscard]] bool has_empty_clause() const;

    [[nodiscard]] Formula with(const Formula& other) const;
    [[nodiscard]] Formula with(const Clause& c) const;

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Partial map from variables to truth values.
class PartialAssignment
{
    std::map<Variable, bool> values_;

public:
    PartialAssignment() = default;
    PartialAssignment(std::initializer_list<std::pair<const Variable, bool>> values) : values_{values} {}

    void set(Variable v, bool value) { values_[v] = value; }
    [[nodiscard]] std::optional<bool> get(Variable v) const;
    [[nodiscard]] std::optional<bool> evaluate(Literal lit) const;
    [[nodiscard]] bool defines(Variable v) const { return values_.contains(v); }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] bool empty() const { return values_.empty(); }
    [[nodiscard]] const std::map<Variable, bool>& values() const { return values_; }

    /// True iff some literal of `c` evaluates to 1.
    [[nodiscard]] bool satisfies(const Clause& c) const;
    [[nodiscard]] bool satisfies(const Formula& f) const;
    [[nodiscard]] std::size_t count_satisfied(const Formula& f) const;

    /// Union; throws if both define a variable differently.
    [[nodiscard]] PartialAssignment merged(const PartialAssignment& other) const;

    friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

/// The variable-sets of a formula's clauses, duplicates collapsed.
struct Skeleton
{
    std::vector<VariableSet> sets; // sorted

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

struct DegreeProfile
{
    std::map<Variable, std::size_t> per_variable;
    std::size_t max = 0;
};

[[nodiscard]] VariableSet variables(const Clause& c);
[[nodiscard]] VariableSet variables(const Formula& f);

/// Every pair of distinct clauses shares at most one variable.
[[nodiscard]] bool is_linear(const Formula& f);
[[nodiscard]] Skeleton skeleton(const Formula& f);

/// F^[alpha]: drop satisfied clauses, strip falsified literals from the rest.
/// The empty clause is kept when it arises.
[[nodiscard]] Formula apply(const Formula& f, const PartialAssignment& a);

/// Every clause size lies in [l, k]. Requires 0 <= l <= k.
[[nodiscard]] bool is_lk(const Formula& f, std::size_t l, std::size_t k);
/// Every clause has exactly k literals.
[[nodiscard]] bool is_uniform(const Formula& f, std::size_t k);
[[nodiscard]] std::size_t min_clause_size(const Formula& f);
[[nodiscard]] std::size_t max_clause_size(const Formula& f);

/// d_F(x): number of clauses of size at most k-1 containing x; max over vbl(F).
[[nodiscard]] DegreeProfile degrees(const Formula& f, std::size_t k);

/// Gamma(C): clauses other than `c` sharing a variable with it.
/// Throws formula_error if `c` is not a clause of `f`.
[[nodiscard]] std::vector<Clause> neighborhood(const Formula& f, const Clause& c);
/// Gamma_x(C): neighbors that contain `x`.
[[nodiscard]] std::vector<Clause> neighborhood_at(const Formula& f, const Clause& c, Variable x);
/// Gamma'(C): neighbors of size at most k-1.
[[nodiscard]] std::vector<Clause> short_neighborhood(const Formula& f, const Clause& c, std::size_t k);
/// Gamma'_x(C): short neighbors that contain `x`.
[[nodiscard]] std::vector<Clause> short_neighborhood_at(const Formula& f, const Clause& c, std::size_t k, Variable x);

/// Rename variables by `mapping`; variables absent from it keep their id.
[[nodiscard]] Formula rename(const Formula& f, const std::map<Variable, Variable>& mapping);

std::string to_string(Literal lit);
std::string to_string(const Clause& c);
std::string to_string(const Formula& f);

} // namespace lcnf
