#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperreg/boolean.hpp"

namespace hyperreg {

// Weight-k assignment: the set of variables set to 1, sorted ascending.
struct Assignment {
    std::vector<int> ones;
};

struct Constraint {
    int fn = 0;  // index into the function registry
    std::vector<int> vars;
};

// A multiset of constraints over n Boolean variables. Duplicate constraints
// are meaningful and preserved.
class CspInstance {
public:
    CspInstance() = default;
    explicit CspInstance(int n_vars) : n_vars_(n_vars) {}

    int n_vars() const { return n_vars_; }
    const std::vector<std::pair<std::string, BooleanFunction>>& functions() const {
        return functions_;
    }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    size_t size() const { return constraints_.size(); }

    // Registers (or re-finds) a named function; a name may not be rebound to
    // a different table.
    int add_function(const std::string& name, const BooleanFunction& f);
    std::optional<int> find_function(const std::string& name) const;
    void add_constraint(int fn, std::vector<int> vars);

    int max_degree() const;

    // Number of satisfied constraints (truth-table path).
    long long evaluate(const Assignment& a) const;
    // Same number through the summed characteristic polynomials.
    long long evaluate_via_polynomial(const Assignment& a) const;

    // The instance with every function's table complemented.
    CspInstance negated() const;

private:
    int n_vars_ = 0;
    std::vector<std::pair<std::string, BooleanFunction>> functions_;
    std::vector<Constraint> constraints_;
};

// Coefficients of the sum of all constraint polynomials, keyed by sorted
// variable-id tuples (the empty tuple is the constant term).
std::map<std::vector<int>, long long> aggregate_polynomial(const CspInstance& phi);

enum class Objective { max, min };

struct Optimum {
    long long value = 0;
    Assignment assignment;
};

// Exact optimum over all weight-k assignments; lexicographically smallest
// optimizer. The oracle for everything else.
Optimum brute_force_optimum(const CspInstance& phi, int k,
                            Objective objective = Objective::max);

// Fast evaluator for many weight-k probes of one instance: only constraints
// touching the support are re-examined.
class SparseEvaluator {
public:
    explicit SparseEvaluator(const CspInstance& phi);
    long long evaluate(const std::vector<int>& ones) const;

private:
    const CspInstance& phi_;
    long long all_zero_value_ = 0;
    std::vector<std::vector<int>> by_var_;  // variable -> constraint ids
    mutable std::vector<int> stamp_;
    mutable std::vector<uint8_t> bit_;
    mutable int round_ = 0;
};

// Picks dense monomial tables when the instance has degree <= 3 (a weight-k
// value is then a few array sums), and falls back to the sparse evaluator.
class WeightKEvaluator {
public:
    explicit WeightKEvaluator(const CspInstance& phi);
    ~WeightKEvaluator();
    WeightKEvaluator(const WeightKEvaluator&) = delete;
    long long evaluate(const std::vector<int>& ones) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Compositions (k_1,...,k_k) of k into k non-negative parts, lexicographic.
void for_each_composition(int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace hyperreg
