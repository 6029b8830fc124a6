#pragma once

#include <cstdint>
#include <vector>

namespace hyperreg {

// Element of (Z/hZ)^d with componentwise addition. Dimensions are indexed by
// the h-subsets of [k] in lexicographic order; the integer encoding is mixed
// radix base h with dimension 0 least significant, so vertex files are
// byte-stable across runs.
struct GroupElement {
    std::vector<uint8_t> coords;

    static GroupElement zero(int dims) { return {std::vector<uint8_t>(dims, 0)}; }
    static GroupElement unit(int dims, int dim) {
        GroupElement g = zero(dims);
        g.coords[dim] = 1;
        return g;
    }

    GroupElement add(const GroupElement& other, int h) const {
        GroupElement out = *this;
        for (size_t i = 0; i < coords.size(); ++i)
            out.coords[i] = uint8_t((coords[i] + other.coords[i]) % h);
        return out;
    }
    GroupElement negate(int h) const {
        GroupElement out = *this;
        for (size_t i = 0; i < coords.size(); ++i)
            out.coords[i] = uint8_t((h - coords[i]) % h);
        return out;
    }

    long long encode(int h) const {
        long long v = 0;
        for (size_t i = coords.size(); i-- > 0;) v = v * h + coords[i];
        return v;
    }
    static GroupElement decode(long long value, int h, int dims) {
        GroupElement g = zero(dims);
        for (int i = 0; i < dims; ++i) {
            g.coords[i] = uint8_t(value % h);
            value /= h;
        }
        return g;
    }

    bool operator==(const GroupElement&) const = default;
};

// Lexicographically ordered h-subsets of {0,...,k-1}.
std::vector<std::vector<int>> subsets_lex(int k, int h);

// Rank of a sorted h-subset in that order.
int subset_rank(const std::vector<int>& subset, int k);

}  // namespace hyperreg
