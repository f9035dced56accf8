#include "homcoho/deformation.hpp"

#include <string>

namespace homcoho {

void TruncatedDeformation::check_shape() const {
    base.check_shape();
    if (order < 0) throw StructureError("deformation order must be >= 0");
    if (long(mus.size()) != order + 1 || long(alphas.size()) != order + 1)
        throw StructureError("deformation must carry exactly order+1 terms");
    if (!(mus[0] == base.mu) || !(alphas[0] == base.alpha))
        throw StructureError("order-0 terms must match the base structure");
    for (const MultiMap& m : mus)
        if (m.arity_in() != 2 || m.arity_out() != 1 || m.dim_in() != base.dim || m.dim_out() != base.dim)
            throw StructureError("every mu_i must be a (2 -> 1) map on the base");
    for (const MultiMap& a : alphas)
        if (a.arity_in() != 1 || a.arity_out() != 1 || a.dim_in() != base.dim || a.dim_out() != base.dim)
            throw StructureError("every alpha_i must be a (1 -> 1) map on the base");
}

TruncatedDeformation TruncatedDeformation::undeformed(const HomAlgebra& base, int order) {
    TruncatedDeformation d;
    d.base = base;
    d.order = order;
    d.mus.assign(order + 1, MultiMap::zero(2, 1, base.dim, base.dim));
    d.alphas.assign(order + 1, MultiMap::zero(1, 1, base.dim, base.dim));
    d.mus[0] = base.mu;
    d.alphas[0] = base.alpha;
    return d;
}

MultiMap residual_assoc(const TruncatedDeformation& d, int n) {
    if (n > d.order + 1) throw StructureError("residual_assoc: order exceeds truncation");
    MultiMap r = MultiMap::zero(3, 1, d.base.dim, d.base.dim);
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; i + j <= n && j <= n - 1; ++j) {
            int k = n - i - j;
            if (k < 0 || k > n - 1) continue;
            r += d.mus[i].compose_full({&d.mus[k], &d.alphas[j]});
            r -= d.mus[i].compose_full({&d.alphas[j], &d.mus[k]});
        }
    return r;
}

MultiMap residual_mult(const TruncatedDeformation& d, int n) {
    if (n > d.order + 1) throw StructureError("residual_mult: order exceeds truncation");
    MultiMap r = MultiMap::zero(2, 1, d.base.dim, d.base.dim);
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 0; i + j <= n && j <= n - 1; ++j) {
            int k = n - i - j;
            if (k < 0 || k > n - 1) continue;
            r += d.mus[i].compose_full({&d.alphas[j], &d.alphas[k]});
        }
    for (int i = 1; i <= n - 1; ++i) {
        int j = n - i;
        if (j > n - 1) continue;
        r -= d.mus[j].then(d.alphas[i]);
    }
    return r;
}

CochainPair deformation_equation_lhs(const TruncatedDeformation& d, int n) {
    CochainPair c{2, d.mus[n], d.alphas[n]};
    DifferentialMatrix del = build_total_differential(d.base, 2);
    std::vector<Rational> out = del.total().apply(flatten_cochain(c));
    return unflatten_cochain(d.base.dim, d.base.dim, 3, out);
}

std::vector<int> check_deformation(const TruncatedDeformation& d) {
    d.check_shape();
    std::vector<int> bad;
    SparseMat del2 = build_total_differential(d.base, 2).total();
    for (int n = 1; n <= d.order; ++n) {
        CochainPair c{2, d.mus[n], d.alphas[n]};
        std::vector<Rational> lhs = del2.apply(flatten_cochain(c));
        CochainPair rhs{3, residual_assoc(d, n), residual_mult(d, n)};
        std::vector<Rational> rv = flatten_cochain(rhs);
        if (lhs != rv) bad.push_back(n);
    }
    return bad;
}

InfinitesimalClass infinitesimal_class(const TruncatedDeformation& d) {
    d.check_shape();
    if (d.order < 1) throw StructureError("infinitesimal_class needs order >= 1");
    InfinitesimalClass out;
    CochainPair c{2, d.mus[1], d.alphas[1]};
    out.cocycle = is_cocycle(d.base, c);
    if (auto pre = is_coboundary(d.base, c)) out.coboundary_witness = pre->phi;
    return out;
}

ObstructionResult obstruction(const TruncatedDeformation& d, int n) {
    d.check_shape();
    if (n > d.order) throw StructureError("obstruction: n exceeds the truncation order");
    std::vector<int> bad = check_deformation(d);
    for (int b : bad)
        if (b <= n)
            throw MathError("obstruction: the data is not a deformation up to order " +
                            std::to_string(n) + " (first failure at order " + std::to_string(b) + ")");
    ObstructionResult r;
    r.pair = CochainPair{3, residual_assoc(d, n + 1), residual_mult(d, n + 1)};
    r.verified_cocycle = is_cocycle(d.base, r.pair);
    return r;
}

std::optional<std::pair<MultiMap, MultiMap>> extend_one_order(const TruncatedDeformation& d) {
    ObstructionResult ob = obstruction(d, d.order);
    SparseMat del2 = build_total_differential(d.base, 2).total();
    auto x = solve(del2, flatten_cochain(ob.pair));
    if (!x) return std::nullopt;
    CochainPair c = unflatten_cochain(d.base.dim, d.base.dim, 2, *x);
    return std::make_pair(c.phi, *c.psi);
}

std::optional<MultiMap> equivalence_step(const TruncatedDeformation& d,
                                         const TruncatedDeformation& d2, int n) {
    d.check_shape();
    d2.check_shape();
    if (n < 1 || n > d.order || n > d2.order) throw StructureError("equivalence_step: bad order");
    for (int i = 0; i < n; ++i)
        if (!(d.mus[i] == d2.mus[i]) || !(d.alphas[i] == d2.alphas[i]))
            throw MathError("equivalence_step: deformations differ below order " + std::to_string(n));
    CochainPair diff{2, d.mus[n] - d2.mus[n], d.alphas[n] - d2.alphas[n]};
    if (!is_cocycle(d.base, diff))
        throw MathError("equivalence_step: order-n difference is not a 2-cocycle");
    auto pre = is_coboundary(d.base, diff);
    if (!pre) return std::nullopt;
    return pre->phi;
}

TruncatedDeformation apply_equivalence(const TruncatedDeformation& d,
                                       const std::vector<MultiMap>& ts) {
    d.check_shape();
    long dim = d.base.dim;
    int order = d.order;
    std::vector<MultiMap> t(order + 1, MultiMap::zero(1, 1, dim, dim));
    t[0] = MultiMap::identity(dim);
    for (size_t i = 0; i < ts.size() && long(i) + 1 <= order; ++i) t[i + 1] = ts[i];
    // power-series inverse: q_0 = id, q_n = -sum_{i>=1} t_i q_{n-i}
    std::vector<MultiMap> q(order + 1, MultiMap::zero(1, 1, dim, dim));
    q[0] = MultiMap::identity(dim);
    for (int n = 1; n <= order; ++n)
        for (int i = 1; i <= n; ++i) q[n] -= q[n - i].then(t[i]);

    TruncatedDeformation out = d;
    for (int n = 0; n <= order; ++n) {
        MultiMap mu_n = MultiMap::zero(2, 1, dim, dim);
        MultiMap al_n = MultiMap::zero(1, 1, dim, dim);
        for (int p = 0; p <= n; ++p)
            for (int i = 0; i + p <= n; ++i) {
                for (int r = 0; r + p + i <= n; ++r) {
                    int s = n - p - i - r;
                    mu_n += d.mus[i].compose_full({&t[r], &t[s]}).then(q[p]);
                }
                int r1 = n - p - i;
                al_n += t[r1].then(d.alphas[i]).then(q[p]);
            }
        out.mus[n] = mu_n;
        out.alphas[n] = al_n;
    }
    return out;
}

NormalizeResult normalize_leading_term(const TruncatedDeformation& d) {
    if (!check_deformation(d).empty())
        throw MathError("normalize_leading_term: input is not a deformation to its order");
    NormalizeResult res;
    res.deformation = d;
    long dim = d.base.dim;
    for (int k = 1; k <= d.order; ++k) {
        TruncatedDeformation& cur = res.deformation;
        if (cur.mus[k].is_zero() && cur.alphas[k].is_zero()) continue;
        CochainPair lead{2, cur.mus[k], cur.alphas[k]};
        auto pre = is_coboundary(cur.base, lead);
        if (!pre) {
            res.leading_order = k;
            return res;
        }
        // conjugate by T = id - S t^k to push the leading term above order k
        std::vector<MultiMap> ts(k, MultiMap::zero(1, 1, dim, dim));
        ts[k - 1] = -pre->phi;
        res.deformation = apply_equivalence(cur, ts);
    }
    res.trivialized = true;
    for (int k = 1; k <= d.order; ++k)
        if (!res.deformation.mus[k].is_zero() || !res.deformation.alphas[k].is_zero()) {
            res.trivialized = false;
            res.leading_order = k;
            break;
        }
    return res;
}

HomPoisson poisson_from_deformation(const TruncatedDeformation& d) {
    d.check_shape();
    MultiMap swap = permutation_map({1, 0}, d.base.dim);
    if (!(swap.then(d.base.mu) == d.base.mu))
        throw MathError("poisson_from_deformation: base is not commutative");
    if (d.order < 2)
        throw MathError("poisson_from_deformation: needs a deformation up to order >= 2");
    if (!check_deformation(d).empty())
        throw MathError("poisson_from_deformation: input is not a deformation to its order");
    HomPoisson p;
    p.base = d.base;
    p.bracket = d.mus[1] - swap.then(d.mus[1]);
    p.bracket *= Rational(1, 2);
    ValidationReport rep = check_hom_poisson(p);
    if (!rep.ok())
        throw MathError("poisson_from_deformation: extracted bracket failed validation (" +
                        rep.violations.front().axiom + ")");
    return p;
}

ValidationReport check_hom_poisson(const HomPoisson& p) {
    p.base.check_shape();
    if (p.bracket.arity_in() != 2 || p.bracket.arity_out() != 1 || p.bracket.dim_in() != p.base.dim)
        throw StructureError("bracket must be a (2 -> 1) map on the base");
    ValidationReport rep = validate_hom_algebra(p.base);
    long dim = p.base.dim;
    MultiMap swap = permutation_map({1, 0}, dim);
    MultiMap sigma = permutation_map({1, 0, 2}, dim);
    const MultiMap& br = p.bracket;
    const MultiMap& mu = p.base.mu;
    const MultiMap& al = p.base.alpha;

    collect_violations(rep, swap.then(mu) - mu, "base commutativity");
    collect_violations(rep, br + swap.then(br), "bracket skewsymmetry");
    // [alpha(a),[b,c]] - [[a,b],alpha(c)] - [alpha(b),[a,c]]
    MultiMap jac = br.compose_full({&al, &br}) - br.compose_full({&br, &al}) -
                   sigma.then(br.compose_full({&al, &br}));
    collect_violations(rep, jac, "hom-jacobi");
    // [alpha(a), bc] - alpha(b)[a,c] - [a,b]alpha(c)
    MultiMap leib = br.compose_full({&al, &mu}) - sigma.then(mu.compose_full({&al, &br})) -
                    mu.compose_full({&br, &al});
    collect_violations(rep, leib, "hom-leibniz");
    collect_violations(rep, br.then(al) - br.compose_full({&al, &al}), "bracket multiplicativity");
    return rep;
}

}  // namespace homcoho
