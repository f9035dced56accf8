#include "homcoho/gs.hpp"

#include <array>
#include <map>

namespace homcoho {

void HomBialgebra::check_shape() const {
    if (dim <= 0) throw StructureError("bialgebra dimension must be positive");
    if (mu.arity_in() != 2 || mu.arity_out() != 1 || mu.dim_in() != dim || mu.dim_out() != dim)
        throw StructureError("mu must be (2 -> 1)");
    if (alpha.arity_in() != 1 || alpha.arity_out() != 1 || alpha.dim_in() != dim)
        throw StructureError("alpha must be (1 -> 1)");
    if (delta.arity_in() != 1 || delta.arity_out() != 2 || delta.dim_in() != dim)
        throw StructureError("delta must be (1 -> 2)");
    if (beta.arity_in() != 1 || beta.arity_out() != 1 || beta.dim_in() != dim)
        throw StructureError("beta must be (1 -> 1)");
    if (long(unit.size()) != dim) throw StructureError("unit vector length mismatch");
    if (long(counit.size()) != dim) throw StructureError("counit covector length mismatch");
}

HomAlgebra HomBialgebra::algebra_part() const {
    HomAlgebra a;
    a.dim = dim;
    a.basis = basis;
    a.mu = mu;
    a.alpha = alpha;
    a.unit = unit;
    return a;
}

namespace {

MultiMap unit_map(const HomBialgebra& b) {
    MultiMap u(0, 1, b.dim, b.dim);
    for (long i = 0; i < b.dim; ++i) u.add(TupleKey(0), TupleKey(i), b.unit[i]);
    return u;
}

// (eps (x) id) o f and (id (x) eps) o f for covector eps, f with 2 output legs
MultiMap contract_counit(const MultiMap& f, const std::vector<Rational>& eps, bool first_leg) {
    if (f.arity_out() != 2) throw StructureError("contract_counit: need 2 output legs");
    long d = f.dim_out();
    MultiMap r(f.arity_in(), 1, f.dim_in(), d);
    for (const auto& [key, v] : f.entries()) {
        long j = long(key.second / std::uint64_t(d)), k = long(key.second % std::uint64_t(d));
        if (first_leg)
            r.add(key.first, TupleKey(k), v * eps[j]);
        else
            r.add(key.first, TupleKey(j), v * eps[k]);
    }
    return r;
}

void collect_covector_violations(ValidationReport& rep, const std::vector<Rational>& defect,
                                 int arity, long dim, const std::string& axiom) {
    for (long key = 0; key < long(defect.size()); ++key)
        if (!defect[key].is_zero()) {
            Violation v;
            v.axiom = axiom;
            v.where = unpack_tuple(TupleKey(key), dim, arity);
            v.detail = "defect " + defect[key].str();
            rep.violations.push_back(std::move(v));
        }
}

}  // namespace

ValidationReport validate_hom_bialgebra(const HomBialgebra& b) {
    b.check_shape();
    ValidationReport rep = validate_hom_algebra(b.algebra_part());
    long d = b.dim;
    const MultiMap id = MultiMap::identity(d);

    // coalgebra side
    MultiMap coassoc = b.delta.then(b.delta.tensor(b.beta)) - b.delta.then(b.beta.tensor(b.delta));
    collect_violations(rep, coassoc, "hom-coassociativity");
    MultiMap comult = b.beta.then(b.delta) - b.delta.then(b.beta.tensor(b.beta));
    collect_violations(rep, comult, "comultiplicativity");
    collect_violations(rep, contract_counit(b.delta, b.counit, true) - b.beta, "left counit");
    collect_violations(rep, contract_counit(b.delta, b.counit, false) - b.beta, "right counit");
    {
        std::vector<Rational> defect(d);
        for (long j = 0; j < d; ++j) {
            Rational s;
            for (long k = 0; k < d; ++k) s += b.counit[k] * b.beta.coeff(TupleKey(j), TupleKey(k));
            defect[j] = s - b.counit[j];
        }
        collect_covector_violations(rep, defect, 1, d, "counit absorbs beta");
    }

    // compatibilities
    collect_violations(rep, b.alpha.then(b.beta) - b.beta.then(b.alpha), "alpha beta commute");
    {
        MultiMap p = permutation_map({0, 2, 1, 3}, d);
        MultiMap rhs = b.delta.tensor(b.delta).then(p).then(b.mu.tensor(b.mu));
        collect_violations(rep, b.mu.then(b.delta) - rhs, "delta is an algebra morphism");
    }
    collect_violations(rep, b.alpha.then(b.delta) - b.delta.then(b.alpha.tensor(b.alpha)),
                       "delta alpha compatibility");
    collect_violations(rep, b.mu.then(b.beta) - b.mu.compose_full({&b.beta, &b.beta}),
                       "beta is multiplicative");
    {
        MultiMap u = unit_map(b);
        collect_violations(rep, u.then(b.delta) - u.tensor(u), "delta of the unit");
        collect_violations(rep, u.then(b.beta) - u, "beta fixes unit");
        std::vector<Rational> defect(d * d);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
                Rational s;
                for (long k = 0; k < d; ++k) s += b.counit[k] * b.mu.coeff({i, j}, {k});
                defect[i * d + j] = s - b.counit[i] * b.counit[j];
            }
        collect_covector_violations(rep, defect, 2, d, "counit is multiplicative");
        std::vector<Rational> da(d);
        for (long j = 0; j < d; ++j) {
            Rational s;
            for (long k = 0; k < d; ++k) s += b.counit[k] * b.alpha.coeff(TupleKey(j), TupleKey(k));
            da[j] = s - b.counit[j];
        }
        collect_covector_violations(rep, da, 1, d, "counit absorbs alpha");
        Rational eu;
        for (long i = 0; i < d; ++i) eu += b.counit[i] * b.unit[i];
        if (!(eu == Rational(1)))
            rep.violations.push_back({"counit of the unit", {}, "value " + eu.str()});
    }
    return rep;
}

HomBialgebra yau_twist_bialgebra(const HomBialgebra& b, const MultiMap& gamma) {
    b.check_shape();
    HomAlgebra alg = b.algebra_part();
    Violation w;
    if (!is_algebra_morphism(alg, gamma, &w))
        throw MathError("bialgebra twist: gamma is not an algebra morphism");
    MultiMap codef = gamma.then(b.delta) - b.delta.then(gamma.tensor(gamma));
    if (!codef.is_zero()) throw MathError("bialgebra twist: gamma is not a coalgebra morphism");
    if (!(b.alpha.then(gamma) == gamma.then(b.alpha)) || !(b.beta.then(gamma) == gamma.then(b.beta)))
        throw MathError("bialgebra twist: gamma must commute with alpha and beta");
    MultiMap u = unit_map(b);
    if (!(u.then(gamma) == u)) throw MathError("bialgebra twist: gamma must fix the unit");
    for (long j = 0; j < b.dim; ++j) {
        Rational s;
        for (long k = 0; k < b.dim; ++k) s += b.counit[k] * gamma.coeff(TupleKey(j), TupleKey(k));
        if (!(s == b.counit[j])) throw MathError("bialgebra twist: counit must absorb gamma");
    }
    HomBialgebra t = b;
    t.mu = b.mu.then(gamma);
    t.delta = gamma.then(b.delta);
    t.alpha = b.alpha.then(gamma);
    t.beta = b.beta.then(gamma);
    return t;
}

namespace {

MultiMap interleave_perm(int m, long d) {
    std::vector<int> perm(2 * m);
    for (int t = 0; t < m; ++t) {
        perm[2 * t] = t;
        perm[2 * t + 1] = m + t;
    }
    return permutation_map(perm, d);
}

MultiMap collect_perm(int k, long d) {
    std::vector<int> perm(2 * k);
    for (int t = 0; t < k; ++t) {
        perm[t] = 2 * t;
        perm[k + t] = 2 * t + 1;
    }
    return permutation_map(perm, d);
}

MultiMap action_left_power(const HomBialgebra& b, int m) {
    if (m == 1) return b.mu;
    MultiMap dm = iterated_delta_beta(b.delta, b.beta, m);
    MultiMap idm = MultiMap::identity(b.dim);
    for (int i = 1; i < m; ++i) idm = idm.tensor(MultiMap::identity(b.dim));
    MultiMap t0 = dm.tensor(idm);
    MultiMap mus = b.mu;
    for (int i = 1; i < m; ++i) mus = mus.tensor(b.mu);
    return t0.then(interleave_perm(m, b.dim)).then(mus);
}

MultiMap action_right_power(const HomBialgebra& b, int m) {
    if (m == 1) return b.mu;
    MultiMap dm = iterated_delta_beta(b.delta, b.beta, m);
    MultiMap idm = MultiMap::identity(b.dim);
    for (int i = 1; i < m; ++i) idm = idm.tensor(MultiMap::identity(b.dim));
    MultiMap t0 = idm.tensor(dm);
    MultiMap mus = b.mu;
    for (int i = 1; i < m; ++i) mus = mus.tensor(b.mu);
    return t0.then(interleave_perm(m, b.dim)).then(mus);
}

MultiMap tensor_power(const MultiMap& f, int k) {
    MultiMap t = f;
    for (int i = 1; i < k; ++i) t = t.tensor(f);
    return t;
}

}  // namespace

MultiMap coaction_left(const HomBialgebra& b, int k) {
    MultiMap dk = tensor_power(b.delta, k);
    MultiMap muk = iterated_mu_alpha(b.mu, b.alpha, k);
    MultiMap tail = muk.tensor(tensor_power(MultiMap::identity(b.dim), k));
    return dk.then(collect_perm(k, b.dim)).then(tail);
}

MultiMap coaction_right(const HomBialgebra& b, int k) {
    MultiMap dk = tensor_power(b.delta, k);
    MultiMap muk = iterated_mu_alpha(b.mu, b.alpha, k);
    MultiMap head = tensor_power(MultiMap::identity(b.dim), k).tensor(muk);
    return dk.then(collect_perm(k, b.dim)).then(head);
}

TwistedActions twisted_actions(const HomBialgebra& b, int m) {
    b.check_shape();
    if (m < 1) throw StructureError("twisted_actions: m >= 1 required");
    TwistedActions t;
    t.m = m;
    t.left = action_left_power(b, m);
    t.right = action_right_power(b, m);
    t.coleft = coaction_left(b, m);
    t.coright = coaction_right(b, m);
    if (m >= 2) {
        MultiMap idp = tensor_power(MultiMap::identity(b.dim), m - 1);
        t.left_tw = b.beta.tensor(idp).then(action_left_power(b, m - 1));
        t.right_tw = idp.tensor(b.beta).then(action_right_power(b, m - 1));
        t.coleft_tw = coaction_left(b, m - 1).then(b.alpha.tensor(idp));
        t.coright_tw = coaction_right(b, m - 1).then(idp.tensor(b.alpha));
    }
    return t;
}

namespace {

// A^{(x) k} as a bimodule over the algebra part (beta-twisted when asked).
Bimodule power_module(const HomBialgebra& b, int k, bool beta_twisted) {
    if (k < 1) throw StructureError("power_module: k >= 1 required");
    Bimodule m;
    long dk = long(pow_dim(b.dim, k));
    m.dim = dk;
    MultiMap apow = tensor_power(b.alpha, k);
    m.alpha_mod = MultiMap(1, 1, dk, dk);
    for (const auto& [key, v] : apow.entries()) m.alpha_mod.add(key.first, key.second, v);

    MultiMap left = action_left_power(b, k);
    MultiMap right = action_right_power(b, k);
    if (beta_twisted) {
        MultiMap idp = tensor_power(MultiMap::identity(b.dim), k);
        left = b.beta.tensor(idp).then(left);
        right = idp.tensor(b.beta).then(right);
    }
    m.left.dim_alg = b.dim;
    m.left.dim_mod = dk;
    for (const auto& [key, v] : left.entries()) {
        long a = long(key.first / std::uint64_t(dk));
        long vin = long(key.first % std::uint64_t(dk));
        m.left.add(a, vin, long(key.second), v);
    }
    m.right.dim_alg = b.dim;
    m.right.dim_mod = dk;
    for (const auto& [key, v] : right.entries()) {
        long a = long(key.first % std::uint64_t(b.dim));
        long vin = long(key.first / std::uint64_t(b.dim));
        m.right.add(a, vin, long(key.second), v);
    }
    return m;
}

long hdim(const HomBialgebra& b, int i, int j) {
    if (i < 1 || j < 1) return 0;
    return long(pow_dim(b.dim, i)) * long(pow_dim(b.dim, j));
}

struct CellLayout {
    std::array<long, 4> sz{};   // phi, psi, chi, xi
    std::array<long, 4> off{};
    long total = 0;
};

CellLayout cell_layout(const HomBialgebra& b, int n, int m) {
    CellLayout c;
    c.sz = {hdim(b, n, m), hdim(b, n - 1, m), hdim(b, n, m - 1), hdim(b, n - 1, m - 1)};
    long o = 0;
    for (int i = 0; i < 4; ++i) {
        c.off[i] = o;
        o += c.sz[i];
    }
    c.total = o;
    return c;
}

void place(SparseMat& into, const SparseMat& blk, long ro, long co, int sign) {
    into.add_scaled_block(blk, ro, co, Rational(sign));
}

// dual Hochschild-shaped block on Hom(A^{(x) i}, A^{(x) j}) -> (..., j+1 legs):
//   (d g) = (beta^exp (x) g) o coact_l + sum_k (-1)^k Delta_k o g
//         + (-1)^{j+1} (g (x) beta^exp) o coact_r
SparseMat dual_hochschild_block(const HomBialgebra& b, const MultiMap& coact_l,
                                const MultiMap& coact_r, int i, int j, int exp) {
    long d = b.dim;
    long di = long(pow_dim(d, i)), dj = long(pow_dim(d, j)), dj1 = dj * d;
    SparseMat out(di * dj1, di * dj);
    MultiMap bexp = b.beta.pow(exp);
    auto bexp_by_in = bexp.index_by_in();

    for (const auto& [key, c] : coact_l.entries()) {
        long a = long(key.second / std::uint64_t(di));
        long z = long(key.second % std::uint64_t(di));
        long x = long(key.first);
        auto it = bexp_by_in.find(TupleKey(a));
        if (it == bexp_by_in.end()) continue;
        for (const auto& [bk, p] : it->second)
            for (long w = 0; w < dj; ++w)
                out.add(x * dj1 + long(bk) * dj + w, z * dj + w, c * p);
    }
    for (int k = 1; k <= j; ++k) {
        MultiMap t = (k == 1) ? b.delta : b.beta;
        for (int s = 2; s <= j; ++s) t = t.tensor(s == k ? b.delta : b.beta);
        Rational sgn = k % 2 == 0 ? Rational(1) : Rational(-1);
        for (const auto& [key, tv] : t.entries())
            for (long x = 0; x < di; ++x)
                out.add(x * dj1 + long(key.second), x * dj + long(key.first), sgn * tv);
    }
    Rational esgn = (j + 1) % 2 == 0 ? Rational(1) : Rational(-1);
    for (const auto& [key, c] : coact_r.entries()) {
        long a = long(key.second % std::uint64_t(d));
        long z = long(key.second / std::uint64_t(d));
        long x = long(key.first);
        auto it = bexp_by_in.find(TupleKey(a));
        if (it == bexp_by_in.end()) continue;
        for (const auto& [bk, p] : it->second)
            for (long w = 0; w < dj; ++w)
                out.add(x * dj1 + w * d + long(bk), z * dj + w, esgn * c * p);
    }
    return out;
}

// (d g) = (Delta beta^exp (x) g) o coact_l - (g (x) Delta beta^exp) o coact_r
// on Hom(A^{(x) i}, A^{(x) j}) -> (..., j+2 legs)
SparseMat dual_beta_delta_block(const HomBialgebra& b, const MultiMap& coact_l,
                                const MultiMap& coact_r, int i, int j, int exp) {
    long d = b.dim;
    long di = long(pow_dim(d, i)), dj = long(pow_dim(d, j)), dj2 = dj * d * d;
    SparseMat out(di * dj2, di * dj);
    MultiMap d2 = b.beta.pow(exp).then(b.delta);  // Delta o beta^exp, (1 -> 2)
    auto d2_by_in = d2.index_by_in();

    for (const auto& [key, c] : coact_l.entries()) {
        long a = long(key.second / std::uint64_t(di));
        long z = long(key.second % std::uint64_t(di));
        long x = long(key.first);
        auto it = d2_by_in.find(TupleKey(a));
        if (it == d2_by_in.end()) continue;
        for (const auto& [b12, q] : it->second)
            for (long w = 0; w < dj; ++w)
                out.add(x * dj2 + long(b12) * dj + w, z * dj + w, c * q);
    }
    for (const auto& [key, c] : coact_r.entries()) {
        long a = long(key.second % std::uint64_t(d));
        long z = long(key.second / std::uint64_t(d));
        long x = long(key.first);
        auto it = d2_by_in.find(TupleKey(a));
        if (it == d2_by_in.end()) continue;
        for (const auto& [b12, q] : it->second)
            for (long w = 0; w < dj; ++w)
                out.add(x * dj2 + w * d * d + long(b12), z * dj + w, -(c * q));
    }
    return out;
}

// g -> beta^{(x) j} o g - g o beta^{(x) i}
SparseMat dual_commutator_block(const HomBialgebra& b, int i, int j) {
    long d = b.dim;
    long di = long(pow_dim(d, i)), dj = long(pow_dim(d, j));
    SparseMat out(di * dj, di * dj);
    MultiMap tj = tensor_power(b.beta, j);
    for (const auto& [key, v] : tj.entries())
        for (long x = 0; x < di; ++x)
            out.add(x * dj + long(key.second), x * dj + long(key.first), v);
    MultiMap ti = tensor_power(b.beta, i);
    for (const auto& [key, v] : ti.entries())
        for (long w = 0; w < dj; ++w)
            out.add(long(key.first) * dj + w, long(key.second) * dj + w, -v);
    return out;
}

}  // namespace

long gs_cell_dim(const HomBialgebra& b, int n, int m) { return cell_layout(b, n, m).total; }

GSCell GSCell::zero(const HomBialgebra& b, int n, int m) {
    if (n < 1 || m < 1) throw StructureError("gs cell indices must be >= 1");
    GSCell c;
    c.n = n;
    c.m = m;
    c.phi = MultiMap::zero(n, m, b.dim, b.dim);
    if (n >= 2) c.psi = MultiMap::zero(n - 1, m, b.dim, b.dim);
    if (m >= 2) c.chi = MultiMap::zero(n, m - 1, b.dim, b.dim);
    if (n >= 2 && m >= 2) c.xi = MultiMap::zero(n - 1, m - 1, b.dim, b.dim);
    return c;
}

std::vector<Rational> flatten_cell(const HomBialgebra& b, const GSCell& c) {
    CellLayout cl = cell_layout(b, c.n, c.m);
    std::vector<Rational> v(cl.total);
    const std::optional<MultiMap>* comps[4] = {&c.phi, &c.psi, &c.chi, &c.xi};
    for (int t = 0; t < 4; ++t) {
        if (!comps[t]->has_value()) continue;
        const MultiMap& f = **comps[t];
        long dj = long(pow_dim(b.dim, f.arity_out()));
        for (const auto& [key, val] : f.entries())
            v[cl.off[t] + long(key.first) * dj + long(key.second)] = val;
    }
    return v;
}

GSCell unflatten_cell(const HomBialgebra& b, int n, int m, const std::vector<Rational>& v) {
    CellLayout cl = cell_layout(b, n, m);
    if (long(v.size()) != cl.total) throw StructureError("unflatten_cell: wrong length");
    GSCell c = GSCell::zero(b, n, m);
    std::optional<MultiMap>* comps[4] = {&c.phi, &c.psi, &c.chi, &c.xi};
    for (int t = 0; t < 4; ++t) {
        if (!comps[t]->has_value()) continue;
        MultiMap& f = **comps[t];
        long dj = long(pow_dim(b.dim, f.arity_out()));
        for (long i = 0; i < cl.sz[t]; ++i)
            if (!v[cl.off[t] + i].is_zero())
                f.add(TupleKey(i / dj), TupleKey(i % dj), v[cl.off[t] + i]);
    }
    return c;
}

SparseMat gs_horizontal_differential(const HomBialgebra& b, int n, int m) {
    b.check_shape();
    if (n < 1 || m < 1) throw StructureError("gs cell indices must be >= 1");
    HomAlgebra alg = b.algebra_part();
    CellLayout in = cell_layout(b, n, m), out = cell_layout(b, n + 1, m);
    SparseMat h(out.total, in.total);

    Bimodule mm = power_module(b, m, false);
    place(h, build_del_mumu(alg, n, mm), out.off[0], in.off[0], +1);
    place(h, build_del_mual(alg, n, mm), out.off[1], in.off[0], +1);
    if (n >= 2) {
        place(h, build_del_almu(alg, n, mm), out.off[0], in.off[1], -1);
        place(h, build_del_alal(alg, n, mm), out.off[1], in.off[1], -1);
    }
    if (m >= 2) {
        Bimodule mt = power_module(b, m - 1, true);
        place(h, build_del_mumu(alg, n, mt), out.off[2], in.off[2], +1);
        place(h, build_del_mual(alg, n, mt), out.off[3], in.off[2], +1);
        if (n >= 2) {
            place(h, build_del_almu(alg, n, mt), out.off[2], in.off[3], -1);
            place(h, build_del_alal(alg, n, mt), out.off[3], in.off[3], -1);
        }
    }
    return h;
}

SparseMat gs_vertical_differential(const HomBialgebra& b, int n, int m) {
    b.check_shape();
    if (n < 1 || m < 1) throw StructureError("gs cell indices must be >= 1");
    CellLayout in = cell_layout(b, n, m), out = cell_layout(b, n, m + 1);
    SparseMat v(out.total, in.total);

    MultiMap co_l = coaction_left(b, n), co_r = coaction_right(b, n);
    place(v, dual_hochschild_block(b, co_l, co_r, n, m, m - 1), out.off[0], in.off[0], +1);
    place(v, dual_commutator_block(b, n, m), out.off[2], in.off[0], +1);
    if (m >= 2) {
        place(v, dual_beta_delta_block(b, co_l, co_r, n, m - 1, m - 2), out.off[0], in.off[2], +1);
        place(v, dual_hochschild_block(b, co_l, co_r, n, m - 1, m - 1), out.off[2], in.off[2], -1);
    }
    if (n >= 2) {
        MultiMap idp = tensor_power(MultiMap::identity(b.dim), n - 1);
        MultiMap co_lt = coaction_left(b, n - 1).then(b.alpha.tensor(idp));
        MultiMap co_rt = coaction_right(b, n - 1).then(idp.tensor(b.alpha));
        place(v, dual_hochschild_block(b, co_lt, co_rt, n - 1, m, m - 1), out.off[1], in.off[1], +1);
        place(v, dual_commutator_block(b, n - 1, m), out.off[3], in.off[1], +1);
        if (m >= 2) {
            place(v, dual_beta_delta_block(b, co_lt, co_rt, n - 1, m - 1, m - 2), out.off[1],
                  in.off[3], +1);
            place(v, dual_hochschild_block(b, co_lt, co_rt, n - 1, m - 1, m - 1), out.off[3],
                  in.off[3], -1);
        }
    }
    return v;
}

BicomplexReport bicomplex_check(const HomBialgebra& b, int n_max, int m_max) {
    BicomplexReport rep;
    std::map<std::pair<int, int>, SparseMat> hs, vs;
    auto h = [&](int n, int m) -> const SparseMat& {
        auto key = std::make_pair(n, m);
        auto it = hs.find(key);
        if (it == hs.end()) it = hs.emplace(key, gs_horizontal_differential(b, n, m)).first;
        return it->second;
    };
    auto v = [&](int n, int m) -> const SparseMat& {
        auto key = std::make_pair(n, m);
        auto it = vs.find(key);
        if (it == vs.end()) it = vs.emplace(key, gs_vertical_differential(b, n, m)).first;
        return it->second;
    };
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= m_max; ++m) {
            SquareReport s;
            s.n = n;
            s.m = m;
            s.horizontal_ok = h(n + 1, m).multiply(h(n, m)).is_zero();
            s.vertical_ok = v(n, m + 1).multiply(v(n, m)).is_zero();
            s.commute_ok = h(n, m + 1).multiply(v(n, m)) == v(n + 1, m).multiply(h(n, m));
            rep.squares.push_back(s);
        }
    return rep;
}

namespace {

struct ReducedLayout {
    std::vector<std::pair<int, int>> mu_cells, alpha_cells;
    std::vector<long> mu_off, alpha_off;
    long total = 0;
};

ReducedLayout reduced_layout(const HomBialgebra& b, int degree) {
    ReducedLayout r;
    long o = 0;
    for (int i = 1; i <= degree; ++i) {
        int j = degree + 1 - i;
        if (j < 1) continue;
        r.mu_cells.emplace_back(i, j);
        r.mu_off.push_back(o);
        o += hdim(b, i, j);
    }
    for (int i = 1; i <= degree - 1; ++i) {
        int j = degree - i;
        if (j < 1) continue;
        r.alpha_cells.emplace_back(i, j);
        r.alpha_off.push_back(o);
        o += hdim(b, i, j);
    }
    r.total = o;
    return r;
}

long find_off(const std::vector<std::pair<int, int>>& cells, const std::vector<long>& offs, int i,
              int j) {
    for (size_t t = 0; t < cells.size(); ++t)
        if (cells[t] == std::make_pair(i, j)) return offs[t];
    return -1;
}

}  // namespace

ReducedComplex alpha_equals_beta_subcomplex(const HomBialgebra& b, int degree) {
    b.check_shape();
    if (!b.alpha_equals_beta()) throw MathError("alpha = beta reduction requires alpha == beta");
    if (degree < 1) throw StructureError("reduced complex degree must be >= 1");
    HomAlgebra alg = b.algebra_part();
    ReducedLayout in = reduced_layout(b, degree), out = reduced_layout(b, degree + 1);
    ReducedComplex rc;
    rc.degree = degree;
    rc.mu_cells = in.mu_cells;
    rc.alpha_cells = in.alpha_cells;
    rc.dim = in.total;
    rc.differential = SparseMat(out.total, in.total);
    SparseMat& dmat = rc.differential;

    // mu-part outputs at (I, J), I + J = degree + 2
    for (size_t t = 0; t < out.mu_cells.size(); ++t) {
        auto [bi, bj] = out.mu_cells[t];
        long ro = out.mu_off[t];
        Bimodule mj = power_module(b, bj, false);
        if (long co = find_off(in.mu_cells, in.mu_off, bi - 1, bj); co >= 0)
            place(dmat, build_del_mumu(alg, bi - 1, mj), ro, co, +1);
        if (long co = find_off(in.alpha_cells, in.alpha_off, bi - 2, bj); co >= 0)
            place(dmat, build_del_almu(alg, bi - 1, mj), ro, co, -1);
        if (long co = find_off(in.mu_cells, in.mu_off, bi, bj - 1); co >= 0) {
            MultiMap co_l = coaction_left(b, bi), co_r = coaction_right(b, bi);
            place(dmat, dual_hochschild_block(b, co_l, co_r, bi, bj - 1, bj - 2), ro, co,
                  bi % 2 == 0 ? +1 : -1);
        }
        if (long co = find_off(in.alpha_cells, in.alpha_off, bi, bj - 2); co >= 0) {
            MultiMap co_l = coaction_left(b, bi), co_r = coaction_right(b, bi);
            place(dmat, dual_beta_delta_block(b, co_l, co_r, bi, bj - 2, bj - 3), ro, co, +1);
        }
    }
    // alpha-part outputs at (I, J), I + J = degree + 1
    for (size_t t = 0; t < out.alpha_cells.size(); ++t) {
        auto [bi, bj] = out.alpha_cells[t];
        long ro = out.alpha_off[t];
        Bimodule mj = power_module(b, bj, false);
        if (long co = find_off(in.mu_cells, in.mu_off, bi, bj); co >= 0)
            place(dmat, build_del_mual(alg, bi, mj), ro, co, +1);
        if (long co = find_off(in.alpha_cells, in.alpha_off, bi - 1, bj); co >= 0)
            place(dmat, build_del_alal(alg, bi, mj), ro, co, -1);
        if (long co = find_off(in.alpha_cells, in.alpha_off, bi, bj - 1); co >= 0) {
            MultiMap co_l = coaction_left(b, bi), co_r = coaction_right(b, bi);
            place(dmat, dual_hochschild_block(b, co_l, co_r, bi, bj - 1, bj - 1), ro, co,
                  (bi + 1) % 2 == 0 ? +1 : -1);
        }
    }
    return rc;
}

bool reduced_embedding_consistent(const HomBialgebra& b, int degree) {
    ReducedComplex rc = alpha_equals_beta_subcomplex(b, degree);
    ReducedLayout in = reduced_layout(b, degree), out = reduced_layout(b, degree + 1);

    for (long col = 0; col < rc.dim; ++col) {
        std::vector<Rational> e(rc.dim);
        e[col] = Rational(1);
        // embed on the anti-diagonal n + m = degree + 1
        std::map<std::pair<int, int>, std::vector<Rational>> cells;
        for (int n = 1; n <= degree + 1; ++n) {
            int m = degree + 1 - n;
            if (m < 1) continue;
            CellLayout cl = cell_layout(b, n, m);
            std::vector<Rational> vec(cl.total);
            if (long o = find_off(in.mu_cells, in.mu_off, n, m); o >= 0)
                for (long i = 0; i < cl.sz[0]; ++i) vec[cl.off[0] + i] = e[o + i];
            if (long o = find_off(in.alpha_cells, in.alpha_off, n - 1, m); o >= 0)
                for (long i = 0; i < cl.sz[1]; ++i) vec[cl.off[1] + i] = e[o + i];
            if (long o = find_off(in.alpha_cells, in.alpha_off, n, m - 1); o >= 0) {
                Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
                for (long i = 0; i < cl.sz[2]; ++i) vec[cl.off[2] + i] = sgn * e[o + i];
            }
            cells.emplace(std::make_pair(n, m), std::move(vec));
        }
        // apply d_h + (-1)^n d_v cellwise
        std::map<std::pair<int, int>, std::vector<Rational>> img;
        for (int n = 1; n <= degree + 2; ++n) {
            int m = degree + 2 - n;
            if (m < 1) continue;
            CellLayout cl = cell_layout(b, n, m);
            std::vector<Rational> vec(cl.total);
            if (auto it = cells.find({n - 1, m}); it != cells.end()) {
                std::vector<Rational> hv = gs_horizontal_differential(b, n - 1, m).apply(it->second);
                for (long i = 0; i < cl.total; ++i) vec[i] += hv[i];
            }
            if (auto it = cells.find({n, m - 1}); it != cells.end()) {
                std::vector<Rational> vv = gs_vertical_differential(b, n, m - 1).apply(it->second);
                Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
                for (long i = 0; i < cl.total; ++i) vec[i] += sgn * vv[i];
            }
            img.emplace(std::make_pair(n, m), std::move(vec));
        }
        // constraints: xi = 0 and chi_{(n,m)} = (-1)^n psi-value of cell (n+1, m-1)
        std::vector<Rational> projected(out.total);
        for (const auto& [nm, vec] : img) {
            auto [n, m] = nm;
            CellLayout cl = cell_layout(b, n, m);
            for (long i = 0; i < cl.sz[3]; ++i)
                if (!vec[cl.off[3] + i].is_zero()) return false;
            if (cl.sz[2] > 0) {
                auto other = img.find({n + 1, m - 1});
                Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
                if (other == img.end()) return false;
                CellLayout ol = cell_layout(b, n + 1, m - 1);
                for (long i = 0; i < cl.sz[2]; ++i)
                    if (!(vec[cl.off[2] + i] == sgn * other->second[ol.off[1] + i])) return false;
            }
            if (long o = find_off(out.mu_cells, out.mu_off, n, m); o >= 0)
                for (long i = 0; i < cl.sz[0]; ++i) projected[o + i] = vec[cl.off[0] + i];
            if (long o = find_off(out.alpha_cells, out.alpha_off, n - 1, m); o >= 0)
                for (long i = 0; i < cl.sz[1]; ++i) projected[o + i] = vec[cl.off[1] + i];
        }
        // projected must be the reduced differential of e
        std::vector<Rational> want = rc.differential.apply(e);
        if (want != projected) return false;
    }
    return true;
}

}  // namespace homcoho
