#include "hyperreg/csp.hpp"

#include <algorithm>
#include <functional>

#include "hyperreg/errors.hpp"

namespace hyperreg {

int CspInstance::add_function(const std::string& name, const BooleanFunction& f) {
    for (size_t i = 0; i < functions_.size(); ++i)
        if (functions_[i].first == name) {
            if (!(functions_[i].second == f))
                throw PreconditionError("function name rebound to a different table: " + name);
            return (int)i;
        }
    functions_.emplace_back(name, f);
    return (int)functions_.size() - 1;
}

std::optional<int> CspInstance::find_function(const std::string& name) const {
    for (size_t i = 0; i < functions_.size(); ++i)
        if (functions_[i].first == name) return (int)i;
    return std::nullopt;
}

void CspInstance::add_constraint(int fn, std::vector<int> vars) {
    if (fn < 0 || fn >= (int)functions_.size())
        throw PreconditionError("constraint references unknown function");
    const BooleanFunction& f = functions_[fn].second;
    if ((int)vars.size() != f.arity)
        throw PreconditionError("constraint variable count differs from arity");
    std::vector<int> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("repeated variable within a constraint");
    for (int v : vars)
        if (v < 0 || v >= n_vars_)
            throw PreconditionError("constraint variable out of range");
    constraints_.push_back({fn, std::move(vars)});
}

int CspInstance::max_degree() const {
    int d = 0;
    for (const auto& [name, f] : functions_) d = std::max(d, degree(f));
    return d;
}

static void check_assignment(const CspInstance& phi, const Assignment& a) {
    for (int v : a.ones)
        if (v < 0 || v >= phi.n_vars())
            throw PreconditionError("assignment variable out of range");
}

long long CspInstance::evaluate(const Assignment& a) const {
    check_assignment(*this, a);
    std::vector<uint8_t> on(n_vars_, 0);
    for (int v : a.ones) on[v] = 1;
    long long sat = 0;
    for (const Constraint& c : constraints_) {
        uint32_t mask = 0;
        for (size_t j = 0; j < c.vars.size(); ++j)
            if (on[c.vars[j]]) mask |= 1u << j;
        sat += functions_[c.fn].second.tt[mask];
    }
    return sat;
}

long long CspInstance::evaluate_via_polynomial(const Assignment& a) const {
    check_assignment(*this, a);
    std::vector<uint8_t> on(n_vars_, 0);
    for (int v : a.ones) on[v] = 1;
    std::vector<MultilinearPolynomial> polys;
    polys.reserve(functions_.size());
    for (const auto& [name, f] : functions_) polys.push_back(characteristic_polynomial(f));
    long long total = 0;
    for (const Constraint& c : constraints_) {
        uint32_t mask = 0;
        for (size_t j = 0; j < c.vars.size(); ++j)
            if (on[c.vars[j]]) mask |= 1u << j;
        total += polys[c.fn].eval(mask);
    }
    return total;
}

CspInstance CspInstance::negated() const {
    CspInstance out(n_vars_);
    for (const auto& [name, f] : functions_) out.add_function("not_" + name, negate(f));
    for (const Constraint& c : constraints_) out.add_constraint(c.fn, c.vars);
    return out;
}

std::map<std::vector<int>, long long> aggregate_polynomial(const CspInstance& phi) {
    std::vector<MultilinearPolynomial> polys;
    for (const auto& [name, f] : phi.functions())
        polys.push_back(characteristic_polynomial(f));
    std::map<std::vector<int>, long long> agg;
    for (const Constraint& c : phi.constraints()) {
        for (const auto& [mono, coeff] : polys[c.fn].coeffs) {
            std::vector<int> vars;
            for (size_t j = 0; j < c.vars.size(); ++j)
                if (mono & (1u << j)) vars.push_back(c.vars[j]);
            std::sort(vars.begin(), vars.end());
            agg[vars] += coeff;
        }
    }
    std::erase_if(agg, [](const auto& kv) { return kv.second == 0; });
    return agg;
}

SparseEvaluator::SparseEvaluator(const CspInstance& phi) : phi_(phi) {
    Assignment empty;
    all_zero_value_ = phi.evaluate(empty);
    by_var_.resize(phi.n_vars());
    const auto& cs = phi.constraints();
    for (size_t i = 0; i < cs.size(); ++i)
        for (int v : cs[i].vars) by_var_[v].push_back((int)i);
    stamp_.assign(cs.size(), -1);
    bit_.assign(phi.n_vars(), 0);
}

long long SparseEvaluator::evaluate(const std::vector<int>& ones) const {
    ++round_;
    long long value = all_zero_value_;
    for (int v : ones) bit_[v] = 1;
    for (int v : ones) {
        for (int ci : by_var_[v]) {
            if (stamp_[ci] == round_) continue;
            stamp_[ci] = round_;
            const Constraint& c = phi_.constraints()[ci];
            const auto& tt = phi_.functions()[c.fn].second.tt;
            uint32_t mask = 0;
            for (size_t j = 0; j < c.vars.size(); ++j)
                if (bit_[c.vars[j]]) mask |= 1u << j;
            value += tt[mask] - tt[0];
        }
    }
    for (int v : ones) bit_[v] = 0;
    return value;
}

namespace {

// Dense monomial tables for instances of degree <= 3: a weight-k value is a
// handful of array lookups.
struct Tables {
    int n = 0;
    long long c0 = 0;
    std::vector<long long> c1;
    std::vector<long long> c2;  // n*n, i < j at [i*n+j]
    std::vector<long long> c3;  // n*n*n, i < j < l

    static std::optional<Tables> build(const CspInstance& phi) {
        if (phi.max_degree() > 3) return std::nullopt;
        if (phi.n_vars() > 128) return std::nullopt;  // keeps the cube small
        Tables t;
        t.n = phi.n_vars();
        t.c1.assign(t.n, 0);
        t.c2.assign((size_t)t.n * t.n, 0);
        t.c3.assign((size_t)t.n * t.n * t.n, 0);
        for (const auto& [vars, coeff] : aggregate_polynomial(phi)) {
            switch (vars.size()) {
                case 0: t.c0 += coeff; break;
                case 1: t.c1[vars[0]] += coeff; break;
                case 2: t.c2[(size_t)vars[0] * t.n + vars[1]] += coeff; break;
                case 3:
                    t.c3[((size_t)vars[0] * t.n + vars[1]) * t.n + vars[2]] += coeff;
                    break;
                default: return std::nullopt;
            }
        }
        return t;
    }

    long long eval(const std::vector<int>& ones) const {
        long long v = c0;
        const int w = (int)ones.size();
        for (int i = 0; i < w; ++i) {
            v += c1[ones[i]];
            for (int j = i + 1; j < w; ++j) {
                v += c2[(size_t)ones[i] * n + ones[j]];
                for (int l = j + 1; l < w; ++l)
                    v += c3[((size_t)ones[i] * n + ones[j]) * n + ones[l]];
            }
        }
        return v;
    }
};

bool next_combination(std::vector<int>& comb, int n) {
    const int k = (int)comb.size();
    int pos = k - 1;
    while (pos >= 0 && comb[pos] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++comb[pos];
    for (int i = pos + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    return true;
}

}  // namespace

struct WeightKEvaluator::Impl {
    std::optional<Tables> tables;
    std::optional<SparseEvaluator> sparse;
};

WeightKEvaluator::WeightKEvaluator(const CspInstance& phi) : impl_(new Impl) {
    impl_->tables = Tables::build(phi);
    if (!impl_->tables) impl_->sparse.emplace(phi);
}

WeightKEvaluator::~WeightKEvaluator() = default;

long long WeightKEvaluator::evaluate(const std::vector<int>& ones) const {
    return impl_->tables ? impl_->tables->eval(ones) : impl_->sparse->evaluate(ones);
}

Optimum brute_force_optimum(const CspInstance& phi, int k, Objective objective) {
    if (k < 0 || k > phi.n_vars())
        throw PreconditionError("brute_force_optimum: k out of range");
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    WeightKEvaluator eval(phi);
    const long long sign = objective == Objective::max ? 1 : -1;

    Optimum best;
    bool have = false;
    do {
        long long v = eval.evaluate(comb);
        if (!have || sign * v > sign * best.value) {
            best.value = v;
            best.assignment.ones = comb;
            have = true;
        }
    } while (next_combination(comb, phi.n_vars()));
    return best;
}

void for_each_composition(int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts(k, 0);
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == k - 1) {
            parts[idx] = remaining;
            fn(parts);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    if (k > 0) rec(0, k);
}

}  // namespace hyperreg
