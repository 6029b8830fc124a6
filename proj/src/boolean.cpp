#include "hyperreg/boolean.hpp"

#include <algorithm>
#include <bit>

#include "hyperreg/errors.hpp"

namespace hyperreg {

BooleanFunction BooleanFunction::from_bits(int arity, const std::string& bits) {
    if (arity < 1 || arity > 20)
        throw ParseError("function arity out of range");
    if ((int)bits.size() != (1 << arity))
        throw ParseError("truth table must have 2^arity bits");
    BooleanFunction f;
    f.arity = arity;
    f.tt.resize(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw ParseError("truth table may contain only 0/1");
        f.tt[i] = uint8_t(bits[i] - '0');
    }
    return f;
}

std::string BooleanFunction::bits() const {
    std::string s(tt.size(), '0');
    for (size_t i = 0; i < tt.size(); ++i) s[i] = char('0' + tt[i]);
    return s;
}

long long MultilinearPolynomial::eval(uint32_t input_mask) const {
    long long v = 0;
    for (const auto& [mono, c] : coeffs)
        if ((mono & input_mask) == mono) v += c;
    return v;
}

int MultilinearPolynomial::degree() const {
    int d = 0;
    for (const auto& [mono, c] : coeffs)
        d = std::max(d, std::popcount(mono));
    return d;
}

MultilinearPolynomial characteristic_polynomial(const BooleanFunction& f) {
    MultilinearPolynomial p;
    p.arity = f.arity;
    const uint32_t size = 1u << f.arity;
    // subset zeta inversion: c_V = sum_{U subset V} (-1)^{|V|-|U|} f(U)
    std::vector<long long> c(f.tt.begin(), f.tt.end());
    for (int bit = 0; bit < f.arity; ++bit)
        for (uint32_t mask = 0; mask < size; ++mask)
            if (mask & (1u << bit)) c[mask] -= c[mask ^ (1u << bit)];
    for (uint32_t mask = 0; mask < size; ++mask)
        if (c[mask] != 0) p.coeffs[mask] = c[mask];
    return p;
}

int degree(const BooleanFunction& f) { return characteristic_polynomial(f).degree(); }

SymmetricCoefficients symmetric_coefficients(const BooleanFunction& f) {
    if (f.arity != 3)
        throw PreconditionError("symmetric_coefficients: arity must be 3");
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // sum the six permuted evaluations, then invert as above
    std::vector<long long> vals(8, 0);
    for (uint32_t mask = 0; mask < 8; ++mask)
        for (const auto& perm : perms) {
            uint32_t permuted = 0;
            for (int j = 0; j < 3; ++j)
                if (mask & (1u << perm[j])) permuted |= 1u << j;
            vals[mask] += f.tt[permuted];
        }
    std::vector<long long> c = vals;
    for (int bit = 0; bit < 3; ++bit)
        for (uint32_t mask = 0; mask < 8; ++mask)
            if (mask & (1u << bit)) c[mask] -= c[mask ^ (1u << bit)];
    SymmetricCoefficients out;
    out.delta = c[0];
    out.gamma = c[1];
    out.beta = c[3];
    out.alpha = c[7];
    if (c[2] != out.gamma || c[4] != out.gamma || c[5] != out.beta || c[6] != out.beta)
        throw PreconditionError("symmetric_coefficients: symmetrized polynomial not symmetric");
    return out;
}

std::pair<std::vector<BooleanFunction>, SymmetricCoefficients> symmetrize(
    const BooleanFunction& f) {
    if (f.arity != 3)
        throw PreconditionError("symmetrize: arity must be 3");
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<BooleanFunction> multiset;
    for (const auto& perm : perms) {
        BooleanFunction g;
        g.arity = 3;
        g.tt.resize(8);
        for (uint32_t mask = 0; mask < 8; ++mask) {
            uint32_t permuted = 0;
            for (int j = 0; j < 3; ++j)
                if (mask & (1u << perm[j])) permuted |= 1u << j;
            g.tt[mask] = f.tt[permuted];
        }
        multiset.push_back(std::move(g));
    }
    return {multiset, symmetric_coefficients(f)};
}

BooleanFunction reduce_to_ternary(const BooleanFunction& f) {
    if (f.arity < 3)
        throw PreconditionError("reduce_to_ternary: arity must be at least 3");
    if (degree(f) < 3)
        throw PreconditionError("reduce_to_ternary: degree must be at least 3");
    const int extra = f.arity - 3;
    std::vector<int> sub(extra, 0);  // argument 3+i := argument sub[i]
    while (true) {
        BooleanFunction g;
        g.arity = 3;
        g.tt.resize(8);
        for (uint32_t mask = 0; mask < 8; ++mask) {
            uint32_t full = mask;
            for (int i = 0; i < extra; ++i)
                if (mask & (1u << sub[i])) full |= 1u << (3 + i);
            g.tt[mask] = f.tt[full];
        }
        if (degree(g) == 3) return g;
        int pos = extra - 1;
        while (pos >= 0 && sub[pos] == 2) {
            sub[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++sub[pos];
    }
    throw PreconditionError(
        "reduce_to_ternary: no substitution preserves degree 3 (search exhausted)");
}

BooleanFunction negate(const BooleanFunction& f) {
    BooleanFunction g = f;
    for (auto& b : g.tt) b = uint8_t(1 - b);
    return g;
}

BooleanFunction and_fn(int arity) {
    BooleanFunction f;
    f.arity = arity;
    f.tt.assign(size_t(1) << arity, 0);
    f.tt.back() = 1;
    return f;
}

BooleanFunction or_fn(int arity) {
    BooleanFunction f;
    f.arity = arity;
    f.tt.assign(size_t(1) << arity, 1);
    f.tt[0] = 0;
    return f;
}

BooleanFunction xor2() { return BooleanFunction::from_bits(2, "0110"); }

BooleanFunction maj3() {
    BooleanFunction f;
    f.arity = 3;
    f.tt.resize(8);
    for (uint32_t m = 0; m < 8; ++m) f.tt[m] = std::popcount(m) >= 2 ? 1 : 0;
    return f;
}

BooleanFunction nae3() {
    BooleanFunction f;
    f.arity = 3;
    f.tt.resize(8);
    for (uint32_t m = 0; m < 8; ++m) f.tt[m] = (m == 0 || m == 7) ? 0 : 1;
    return f;
}

BooleanFunction sort4() {
    // true iff the argument string x1 x2 x3 x4 is monotone (either direction)
    BooleanFunction f;
    f.arity = 4;
    f.tt.resize(16);
    for (uint32_t m = 0; m < 16; ++m) {
        int bits[4];
        for (int j = 0; j < 4; ++j) bits[j] = (m >> j) & 1;
        bool asc = true, desc = true;
        for (int j = 0; j + 1 < 4; ++j) {
            if (bits[j] > bits[j + 1]) asc = false;
            if (bits[j] < bits[j + 1]) desc = false;
        }
        f.tt[m] = (asc || desc) ? 1 : 0;
    }
    return f;
}

}  // namespace hyperreg
