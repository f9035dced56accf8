#include "homcoho/linfty.hpp"

#include <algorithm>

namespace homcoho {

namespace {

struct Sorted {
    std::vector<const MultiMap*> mu2, mu3;    // mu-part args of arity 2 / 3
    std::vector<const MultiMap*> al1, al2;    // alpha-part args of arity 1 / 2
    bool other = false;
};

Sorted sort_args(const std::vector<GradedCochain>& args) {
    Sorted s;
    for (const GradedCochain& a : args) {
        if (!a.alpha_part && a.map.arity_in() == 2)
            s.mu2.push_back(&a.map);
        else if (!a.alpha_part && a.map.arity_in() == 3)
            s.mu3.push_back(&a.map);
        else if (a.alpha_part && a.map.arity_in() == 1)
            s.al1.push_back(&a.map);
        else if (a.alpha_part && a.map.arity_in() == 2)
            s.al2.push_back(&a.map);
        else
            s.other = true;
    }
    return s;
}

// value degree of l_k(args) = sum of shifted degrees + 3
int value_degree(const std::vector<GradedCochain>& args) {
    int d = 3;
    for (const GradedCochain& a : args) d += a.shifted_degree();
    return d;
}

bool shape_is(const Sorted& s, size_t mu2, size_t mu3, size_t al1, size_t al2) {
    return !s.other && s.mu2.size() == mu2 && s.mu3.size() == mu3 && s.al1.size() == al1 &&
           s.al2.size() == al2;
}

}  // namespace

BracketValue bracket_mu(const std::vector<GradedCochain>& args, long dim) {
    Sorted s = sort_args(args);
    BracketValue r;
    const MultiMap id = MultiMap::identity(dim);

    if (shape_is(s, 2, 0, 1, 0)) {
        // [m1, m2, a]_mu = m1(m2 (x) a) - m1(a (x) m2) + m2(m1 (x) a) - m2(a (x) m1)
        const MultiMap &m1 = *s.mu2[0], &m2 = *s.mu2[1], &a = *s.al1[0];
        r.value = m1.compose_full({&m2, &a}) - m1.compose_full({&a, &m2}) +
                  m2.compose_full({&m1, &a}) - m2.compose_full({&a, &m1});
        r.listed = true;
        return r;
    }
    if (shape_is(s, 1, 1, 2, 0)) {
        // [f, m, a1, a2]_mu
        const MultiMap &f = *s.mu3[0], &m = *s.mu2[0];
        const MultiMap &a1 = *s.al1[0], &a2 = *s.al1[1];
        MultiMap a12 = a2.then(a1), a21 = a1.then(a2);  // a1 o a2, a2 o a1
        r.value = f.compose_full({&m, &a1, &a2}) - f.compose_full({&a1, &m, &a2}) +
                  f.compose_full({&a1, &a2, &m}) + f.compose_full({&m, &a2, &a1}) -
                  f.compose_full({&a2, &m, &a1}) + f.compose_full({&a2, &a1, &m}) -
                  m.compose_full({&a12, &f}) - m.compose_full({&f, &a12}) -
                  m.compose_full({&a21, &f}) - m.compose_full({&f, &a21});
        r.listed = true;
        return r;
    }
    if (shape_is(s, 2, 0, 2, 1)) {
        // [p, m1, m2, a1, a2] = sum over both assignments of the two mu's and
        // the two alpha's
        const MultiMap& p = *s.al2[0];
        r.value = MultiMap::zero(4, 1, dim, dim);
        for (int si = 0; si < 2; ++si)
            for (int ti = 0; ti < 2; ++ti) {
                const MultiMap &mo = *s.mu2[si], &mi = *s.mu2[1 - si];
                const MultiMap &b1 = *s.al1[ti], &b2 = *s.al1[1 - ti];
                MultiMap inner = mi.compose_full({&b1, &b2});
                r.value += mo.compose_full({&p, &inner});
                r.value -= mo.compose_full({&inner, &p});
            }
        r.listed = true;
        return r;
    }
    r.listed = false;
    r.value = MultiMap::zero(std::max(0, value_degree(args)), 1, dim, dim);
    return r;
}

BracketValue bracket_alpha(const std::vector<GradedCochain>& args, long dim) {
    Sorted s = sort_args(args);
    BracketValue r;

    if (shape_is(s, 1, 0, 1, 0) || shape_is(s, 0, 1, 1, 0)) {
        // [m, a]_alpha = a o m  (m of arity 2 or 3)
        const MultiMap& m = s.mu2.empty() ? *s.mu3[0] : *s.mu2[0];
        r.value = m.then(*s.al1[0]);
        r.listed = true;
        return r;
    }
    if (shape_is(s, 1, 0, 2, 0)) {
        // [m, a1, a2]_alpha = -m(a1 (x) a2 + a2 (x) a1)
        const MultiMap &m = *s.mu2[0], &a1 = *s.al1[0], &a2 = *s.al1[1];
        r.value = -(m.compose_full({&a1, &a2}) + m.compose_full({&a2, &a1}));
        r.listed = true;
        return r;
    }
    if (shape_is(s, 0, 1, 3, 0)) {
        // [f, a1, a2, a3]_alpha = -sum_{sigma in S3} f(a_s1 (x) a_s2 (x) a_s3)
        const MultiMap& f = *s.mu3[0];
        r.value = MultiMap::zero(3, 1, dim, dim);
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        do {
            r.value -= f.compose_full({s.al1[perm[0]], s.al1[perm[1]], s.al1[perm[2]]});
        } while (std::next_permutation(perm, perm + 3));
        r.listed = true;
        return r;
    }
    if (shape_is(s, 1, 0, 1, 1)) {
        // [p, m, a]_alpha = p(a (x) m) - p(m (x) a)
        const MultiMap &p = *s.al2[0], &m = *s.mu2[0], &a = *s.al1[0];
        r.value = p.compose_full({&a, &m}) - p.compose_full({&m, &a});
        r.listed = true;
        return r;
    }
    if (shape_is(s, 1, 0, 2, 1)) {
        // [p, m, a1, a2]_alpha = m(a1a2 (x) p) + m(a2a1 (x) p)
        //                      - m(p (x) a1a2) - m(p (x) a2a1)
        const MultiMap &p = *s.al2[0], &m = *s.mu2[0];
        MultiMap a12 = s.al1[1]->then(*s.al1[0]), a21 = s.al1[0]->then(*s.al1[1]);
        r.value = m.compose_full({&a12, &p}) + m.compose_full({&a21, &p}) -
                  m.compose_full({&p, &a12}) - m.compose_full({&p, &a21});
        r.listed = true;
        return r;
    }
    r.listed = false;
    r.value = MultiMap::zero(std::max(0, value_degree(args) - 1), 1, dim, dim);
    return r;
}

std::pair<MultiMap, MultiMap> mc_residual(const MultiMap& mu, const MultiMap& alpha) {
    long dim = mu.dim_in();
    GradedCochain gm{false, mu}, ga{true, alpha};
    MultiMap mu_part = bracket_mu({gm, gm, ga}, dim).value;
    mu_part *= Rational(-1, 2);
    MultiMap al_part = bracket_alpha({gm, ga}, dim).value;
    MultiMap al3 = bracket_alpha({gm, ga, ga}, dim).value;
    al3 *= Rational(1, 2);
    al_part += al3;
    return {mu_part, al_part};
}

CochainPair differential_via_brackets(const HomAlgebra& a, const CochainPair& c) {
    if (c.degree != 2 && c.degree != 3)
        throw StructureError("differential_via_brackets: only degrees 2 and 3 are supported");
    if (!c.psi) throw StructureError("differential_via_brackets: missing alpha-part");
    long dim = a.dim;
    GradedCochain gm{false, a.mu}, ga{true, a.alpha};
    GradedCochain gphi{false, c.phi}, gpsi{true, *c.psi};
    CochainPair out;
    out.degree = c.degree + 1;

    if (c.degree == 2) {
        MultiMap mu_part = bracket_mu({gm, gphi, ga}, dim).value;
        mu_part *= Rational(-1);
        MultiMap t = bracket_mu({gm, gm, gpsi}, dim).value;
        t *= Rational(-1, 2);
        mu_part += t;
        MultiMap al_part = bracket_alpha({gphi, ga}, dim).value;
        t = bracket_alpha({gphi, ga, ga}, dim).value;
        t *= Rational(1, 2);
        al_part += t;
        al_part += bracket_alpha({gm, gpsi}, dim).value;
        al_part += bracket_alpha({gm, ga, gpsi}, dim).value;
        out.phi = mu_part;
        out.psi = al_part;
        return out;
    }

    MultiMap mu_part = bracket_mu({gphi, gm, ga, ga}, dim).value;
    mu_part *= Rational(-1, 2);
    MultiMap t = bracket_mu({gpsi, gm, gm, ga, ga}, dim).value;
    t *= Rational(1, 4);
    mu_part += t;
    MultiMap al_part = bracket_alpha({gphi, ga}, dim).value;
    t = bracket_alpha({gphi, ga, ga, ga}, dim).value;
    t *= Rational(1, 6);
    al_part += t;
    t = bracket_alpha({gpsi, gm, ga}, dim).value;
    al_part -= t;
    t = bracket_alpha({gpsi, gm, ga, ga}, dim).value;
    t *= Rational(1, 2);
    al_part -= t;
    out.phi = mu_part;
    out.psi = al_part;
    return out;
}

SparseMat differential_via_brackets_matrix(const HomAlgebra& a, int n) {
    long d = a.dim;
    long cols = cochain_dim(d, d, n), rows = cochain_dim(d, d, n + 1);
    SparseMat m(rows, cols);
    for (long col = 0; col < cols; ++col) {
        std::vector<Rational> e(cols);
        e[col] = Rational(1);
        CochainPair c = unflatten_cochain(d, d, n, e);
        std::vector<Rational> img = flatten_cochain(differential_via_brackets(a, c));
        for (long r = 0; r < rows; ++r)
            if (!img[r].is_zero()) m.add(r, col, img[r]);
    }
    return m;
}

}  // namespace homcoho
