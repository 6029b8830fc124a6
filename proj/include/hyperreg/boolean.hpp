#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperreg {

// Truth table of a function {0,1}^arity -> {0,1}. Entry t is the value on the
// input whose j-th argument equals bit j of t (argument 0 least significant).
struct BooleanFunction {
    int arity = 0;
    std::vector<uint8_t> tt;

    static BooleanFunction from_bits(int arity, const std::string& bits);
    std::string bits() const;
    uint8_t eval(uint32_t input_mask) const { return tt[input_mask]; }
    bool operator==(const BooleanFunction&) const = default;
};

// The unique integer multilinear polynomial agreeing with a Boolean function
// on 0/1 points. Keyed by argument-position bitmask; zero coefficients are
// not stored.
struct MultilinearPolynomial {
    int arity = 0;
    std::map<uint32_t, long long> coeffs;

    long long eval(uint32_t input_mask) const;
    int degree() const;
    bool operator==(const MultilinearPolynomial&) const = default;
};

struct SymmetricCoefficients {
    long long alpha = 0, beta = 0, gamma = 0, delta = 0;
};

// Moebius inversion of the truth table.
MultilinearPolynomial characteristic_polynomial(const BooleanFunction& f);

int degree(const BooleanFunction& f);

// The multiset of the six argument permutations of a ternary function,
// together with the coefficients of the summed polynomial
// alpha*xyz + beta*(xy+xz+yz) + gamma*(x+y+z) + delta.
std::pair<std::vector<BooleanFunction>, SymmetricCoefficients> symmetrize(
    const BooleanFunction& f);

SymmetricCoefficients symmetric_coefficients(const BooleanFunction& f);

// Identifies arguments 4..r with arguments 1..3, trying substitution vectors
// in lexicographic order, until the result has degree exactly 3. Throws
// PreconditionError if deg(f) < 3 and a distinguished error if the search is
// exhausted.
BooleanFunction reduce_to_ternary(const BooleanFunction& f);

BooleanFunction negate(const BooleanFunction& f);

// Common fixtures.
BooleanFunction and_fn(int arity);
BooleanFunction or_fn(int arity);
BooleanFunction xor2();
BooleanFunction maj3();
BooleanFunction nae3();
BooleanFunction sort4();

}  // namespace hyperreg
