#include "homcoho/multimap.hpp"

#include <algorithm>

#include "homcoho/matrix.hpp"

namespace homcoho {

std::uint64_t pow_dim(long dim, int arity) {
    std::uint64_t p = 1;
    for (int i = 0; i < arity; ++i) {
        if (dim > 0 && p > (std::uint64_t(1) << 62) / std::uint64_t(dim))
            throw StructureError("tuple space too large to index");
        p *= std::uint64_t(dim);
    }
    return p;
}

TupleKey pack_tuple(const std::vector<long>& t, long dim) {
    TupleKey key = 0;
    for (long i : t) {
        if (i < 0 || i >= dim) throw StructureError("basis index out of range");
        key = key * std::uint64_t(dim) + std::uint64_t(i);
    }
    return key;
}

std::vector<long> unpack_tuple(TupleKey key, long dim, int arity) {
    std::vector<long> t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = long(key % std::uint64_t(dim));
        key /= std::uint64_t(dim);
    }
    return t;
}

TupleKey concat_keys(TupleKey a, int arity_b, TupleKey b, long dim) {
    return a * pow_dim(dim, arity_b) + b;
}

MultiMap::MultiMap(int arity_in, int arity_out, long dim_in, long dim_out)
    : k_(arity_in), l_(arity_out), din_(dim_in), dout_(dim_out) {
    if (arity_in < 0 || arity_out < 1 || dim_in < 0 || dim_out < 1)
        throw StructureError("bad MultiMap shape");
    pow_dim(dim_in, arity_in);
    pow_dim(dim_out, arity_out);
}

MultiMap MultiMap::identity(long dim) {
    MultiMap f(1, 1, dim, dim);
    for (long i = 0; i < dim; ++i) f.add(TupleKey(i), TupleKey(i), Rational(1));
    return f;
}

MultiMap MultiMap::zero(int arity_in, int arity_out, long dim_in, long dim_out) {
    return MultiMap(arity_in, arity_out, dim_in, dim_out);
}

void MultiMap::add(TupleKey in, TupleKey out, const Rational& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(in, out);
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void MultiMap::add(const std::vector<long>& in, const std::vector<long>& out, const Rational& v) {
    if (int(in.size()) != k_ || int(out.size()) != l_)
        throw StructureError("MultiMap entry arity mismatch");
    add(pack_tuple(in, din_), pack_tuple(out, dout_), v);
}

Rational MultiMap::coeff(TupleKey in, TupleKey out) const {
    auto it = c_.find({in, out});
    return it == c_.end() ? Rational() : it->second;
}

Rational MultiMap::coeff(const std::vector<long>& in, const std::vector<long>& out) const {
    return coeff(pack_tuple(in, din_), pack_tuple(out, dout_));
}

static void require_same_shape(const MultiMap& a, const MultiMap& b) {
    if (a.arity_in() != b.arity_in() || a.arity_out() != b.arity_out() ||
        a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
        throw StructureError("MultiMap shape mismatch");
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
    require_same_shape(*this, o);
    for (const auto& [key, v] : o.c_) add(key.first, key.second, v);
    return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
    require_same_shape(*this, o);
    for (const auto& [key, v] : o.c_) add(key.first, key.second, -v);
    return *this;
}

MultiMap& MultiMap::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [key, v] : c_) v *= s;
    return *this;
}

MultiMap MultiMap::operator-() const {
    MultiMap r = *this;
    for (auto& [key, v] : r.c_) v = -v;
    return r;
}

MultiMap MultiMap::tensor(const MultiMap& g) const {
    if (din_ != g.din_ && k_ > 0 && g.k_ > 0)
        throw StructureError("tensor: input dims differ");
    if (dout_ != g.dout_) throw StructureError("tensor: output dims differ");
    long din = k_ > 0 ? din_ : g.din_;
    MultiMap r(k_ + g.k_, l_ + g.l_, din, dout_);
    for (const auto& [ka, va] : c_)
        for (const auto& [kb, vb] : g.c_) {
            TupleKey in = concat_keys(ka.first, g.k_, kb.first, din);
            TupleKey out = concat_keys(ka.second, g.l_, kb.second, dout_);
            r.add(in, out, va * vb);
        }
    return r;
}

MultiMap MultiMap::compose_at(const MultiMap& g, int slot) const {
    if (slot < 0 || slot >= k_) throw StructureError("compose_at: slot out of range");
    if (g.arity_out() != 1 || g.dim_out() != din_)
        throw StructureError("compose_at: arity mismatch at slot");
    MultiMap r(k_ - 1 + g.k_, l_, g.k_ > 0 ? g.din_ : din_, dout_);
    // index g by output basis vector
    std::vector<std::vector<std::pair<TupleKey, Rational>>> gby(din_);
    for (const auto& [key, v] : g.c_) gby[long(key.second)].emplace_back(key.first, v);
    std::uint64_t tail_sz = pow_dim(din_, k_ - 1 - slot);
    std::uint64_t head_div = tail_sz * std::uint64_t(din_);
    for (const auto& [key, v] : c_) {
        TupleKey in = key.first;
        TupleKey tail = in % tail_sz;
        long mid = long((in / tail_sz) % std::uint64_t(din_));
        TupleKey head = in / head_div;
        for (const auto& [gin, gv] : gby[mid]) {
            TupleKey nin = (head * pow_dim(g.din_, g.k_) + gin) * tail_sz + tail;
            r.add(nin, key.second, v * gv);
        }
    }
    return r;
}

MultiMap MultiMap::compose_full(const std::vector<const MultiMap*>& gs) const {
    int total_out = 0;
    long din = din_;
    for (const MultiMap* g : gs) {
        total_out += g->arity_out();
        if (g->dim_out() != din_) throw StructureError("compose_full: dim mismatch");
        if (g->arity_in() > 0) din = g->dim_in();
    }
    if (total_out != k_) throw StructureError("compose_full: arities do not line up");
    for (const MultiMap* g : gs)
        if (g->arity_in() > 0 && g->dim_in() != din)
            throw StructureError("compose_full: input dims differ");

    std::vector<std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>>> idx;
    idx.reserve(gs.size());
    for (const MultiMap* g : gs) idx.push_back(g->index_by_out());

    int arity_in_total = 0;
    for (const MultiMap* g : gs) arity_in_total += g->arity_in();
    MultiMap r(arity_in_total, l_, din, dout_);

    std::vector<std::uint64_t> seg_sz(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) seg_sz[i] = pow_dim(din_, gs[i]->arity_out());

    for (const auto& [key, v] : c_) {
        // split the input tuple of f into the output segments of the g_i
        std::vector<TupleKey> seg(gs.size());
        TupleKey rest = key.first;
        for (size_t i = gs.size(); i-- > 0;) {
            seg[i] = rest % seg_sz[i];
            rest /= seg_sz[i];
        }
        // walk all matching combinations
        struct Frame { size_t i; TupleKey in; Rational coeff; };
        std::vector<Frame> stack{{0, 0, v}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.i == gs.size()) {
                r.add(f.in, key.second, f.coeff);
                continue;
            }
            auto it = idx[f.i].find(seg[f.i]);
            if (it == idx[f.i].end()) continue;
            for (const auto& [gin, gv] : it->second)
                stack.push_back({f.i + 1,
                                 f.in * pow_dim(din, gs[f.i]->arity_in()) + gin,
                                 f.coeff * gv});
        }
    }
    return r;
}

MultiMap MultiMap::then(const MultiMap& h) const {
    if (h.arity_in() != l_ || h.dim_in() != dout_)
        throw StructureError("then: shapes do not compose");
    MultiMap r(k_, h.arity_out(), din_, h.dim_out());
    auto idx = h.index_by_in();
    for (const auto& [key, v] : c_) {
        auto it = idx.find(key.second);
        if (it == idx.end()) continue;
        for (const auto& [hout, hv] : it->second) r.add(key.first, hout, v * hv);
    }
    return r;
}

MultiMap MultiMap::pow(int p) const {
    if (k_ != 1 || l_ != 1 || din_ != dout_) throw StructureError("pow: not a linear endomap");
    if (p < 0) throw StructureError("pow: negative exponent");
    MultiMap r = MultiMap::identity(din_);
    for (int i = 0; i < p; ++i) r = r.then(*this);
    return r;
}

std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> MultiMap::index_by_out() const {
    std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> idx;
    for (const auto& [key, v] : c_) idx[key.second].emplace_back(key.first, v);
    return idx;
}

std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> MultiMap::index_by_in() const {
    std::unordered_map<TupleKey, std::vector<std::pair<TupleKey, Rational>>> idx;
    for (const auto& [key, v] : c_) idx[key.first].emplace_back(key.second, v);
    return idx;
}

std::optional<MultiMap> invert_linear(const MultiMap& f) {
    if (f.arity_in() != 1 || f.arity_out() != 1 || f.dim_in() != f.dim_out())
        throw StructureError("invert_linear: not a square linear map");
    long d = f.dim_in();
    // solve f X = id column by column via one echelon pass on [f | id]
    SparseMat m(d, 2 * d);
    for (const auto& [key, v] : f.entries())
        m.add(long(key.second), long(key.first), v);  // row = output index
    for (long i = 0; i < d; ++i) m.add(i, d + i, Rational(1));
    EchelonForm e = echelon(m, /*rref=*/true);
    if (e.rank != d) return std::nullopt;
    MultiMap inv(1, 1, d, d);
    for (long r = 0; r < e.rank; ++r) {
        long col = e.pivot_cols[r];
        if (col >= d) return std::nullopt;
        for (const auto& [c, v] : e.rows[r])
            if (c >= d) inv.add(TupleKey(c - d), TupleKey(col), v);
    }
    return inv;
}

MultiMap permutation_map(const std::vector<int>& perm, long dim) {
    int n = int(perm.size());
    MultiMap p(n, n, dim, dim);
    std::vector<long> in(n), out(n);
    std::uint64_t total = pow_dim(dim, n);
    for (std::uint64_t key = 0; key < total; ++key) {
        in = unpack_tuple(key, dim, n);
        for (int i = 0; i < n; ++i) out[i] = in[perm[i]];
        p.add(pack_tuple(in, dim), pack_tuple(out, dim), Rational(1));
    }
    return p;
}

}  // namespace homcoho
