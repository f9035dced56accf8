#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homcoho/rational.hpp"

namespace homcoho {

// Multi-index over [0,dim)^arity packed into one word, first slot most
// significant, so numeric order on keys is lexicographic order on tuples.
using TupleKey = std::uint64_t;

TupleKey pack_tuple(const std::vector<long>& t, long dim);
std::vector<long> unpack_tuple(TupleKey key, long dim, int arity);
TupleKey concat_keys(TupleKey a, int arity_b, TupleKey b, long dim);
std::uint64_t pow_dim(long dim, int arity);

// A multilinear map A^{otimes k} -> B^{otimes l} given by structure constants
// over chosen bases.  All input slots share dim_in, all output slots dim_out
// (B = A everywhere except module-valued cochains).  No zero coefficients are
// stored; the entry map is ordered, so iteration is canonical.
class MultiMap {
public:
    using EntryMap = std::map<std::pair<TupleKey, TupleKey>, Rational>;

    MultiMap() : k_(0), l_(1), din_(0), dout_(0) {}
    MultiMap(int arity_in, int arity_out, long dim_in, long dim_out);
    MultiMap(int arity_in, int arity_out, long dim) : MultiMap(arity_in, arity_out, dim, dim) {}

    static MultiMap identity(long dim);
    static MultiMap zero(int arity_in, int arity_out, long dim_in, long dim_out);

    int arity_in() const { return k_; }
    int arity_out() const { return l_; }
    long dim_in() const { return din_; }
    long dim_out() const { return dout_; }

    bool is_zero() const { return c_.empty(); }
    std::size_t nnz() const { return c_.size(); }
    const EntryMap& entries() const { return c_; }

    void add(TupleKey in, TupleKey out, const Rational& v);
    void add(const std::vector<long>& in, const std::vector<long>& out, const Rational& v);
    Rational coeff(TupleKey in, TupleKey out) const;
    Rational coeff(const std::vector<long>& in, const std::vector<long>& out) const;

    MultiMap& operator+=(const MultiMap& o);
    MultiMap& operator-=(const MultiMap& o);
    MultiMap& operator*=(const Rational& s);
    friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
    friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
    friend MultiMap operator*(const Rational& s, MultiMap m) { return m *= s; }
    MultiMap operator-() const;
    friend bool operator==(const MultiMap& a, const MultiMap& b) {
        return a.k_ == b.k_ && a.l_ == b.l_ && a.din_ == b.din_ && a.dout_ == b.dout_ && a.c_ == b.c_;
    }

    // f (x) g on side-by-side slots.  Requires matching dims.
    MultiMap tensor(const MultiMap& g) const;

    // Operadic partial composition f o_slot g (slot is 0-based); g must have
    // one output leg of dimension dim_in of f.
    MultiMap compose_at(const MultiMap& g, int slot) const;

    // f o (g_1 (x) ... (x) g_m) where the g_i's output legs line up with the
    // input slots of f.
    MultiMap compose_full(const std::vector<const MultiMap*>& gs) const;

    // h o f (post-composition on all output legs).
    MultiMap then(const MultiMap& h) const;

    // Composition power of a linear map (arity 1 -> 1); p >= 0.
    MultiMap pow(int p) const;

    // Index of entries keyed by output tuple; for repeated contraction against
    // single-entry maps.
    std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> index_by_out() const;
    std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> index_by_in() const;

private:
    int k_, l_;
    long din_, dout_;
    EntryMap c_;
};

// Inverse of a linear map (1 -> 1, square dims), if it exists.
std::optional<MultiMap> invert_linear(const MultiMap& f);

// Permutation of tensor factors as a MultiMap: slot i of the output reads
// input slot perm[i].
MultiMap permutation_map(const std::vector<int>& perm, long dim);

}  // namespace homcoho
