#pragma once

// Shared fixtures for the test and acceptance suites: the small example
// algebras, the truncated polynomial family, bialgebra fixtures and the
// deterministic random generators.

#include <array>
#include <cstdint>
#include <vector>

#include "homcoho/algebra.hpp"
#include "homcoho/examples.hpp"
#include "homcoho/gs.hpp"

namespace fixtures {

using namespace homcoho;

// dim-2 algebra spanned by e1, e2 with e1 e1 = e1, all other products e2;
// alpha(e1) = e1 - e2 (sign-corrected) or e1 + e2 (as printed), alpha(e2) = 0.
inline HomAlgebra e2_algebra(bool corrected = true) { return examples::e2_algebra(corrected); }

// K[x]/(x^k), alpha = id, unital
inline HomAlgebra kx_truncated(int k) {
    HomAlgebra a;
    a.dim = k;
    a.mu = MultiMap(2, 1, k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            if (i + j < k) a.mu.add({i, j}, {i + j}, Rational(1));
    a.alpha = MultiMap::identity(k);
    std::vector<Rational> u(k);
    u[0] = Rational(1);
    a.unit = u;
    return a;
}

inline HomAlgebra k_times_k() {
    HomAlgebra a;
    a.dim = 2;
    a.mu = MultiMap(2, 1, 2, 2);
    a.mu.add({0, 0}, {0}, Rational(1));
    a.mu.add({1, 1}, {1}, Rational(1));
    a.alpha = MultiMap::identity(2);
    a.unit = std::vector<Rational>{Rational(1), Rational(1)};
    return a;
}

// 2x2 matrix algebra, basis E11, E12, E21, E22 (index 2r + c)
inline HomAlgebra matrix2() {
    HomAlgebra a;
    a.dim = 4;
    a.mu = MultiMap(2, 1, 4, 4);
    for (long r = 0; r < 2; ++r)
        for (long s = 0; s < 2; ++s)
            for (long t = 0; t < 2; ++t)
                for (long u = 0; u < 2; ++u)
                    if (s == t) a.mu.add({2 * r + s, 2 * t + u}, {2 * r + u}, Rational(1));
    a.alpha = MultiMap::identity(4);
    a.unit = std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(1)};
    return a;
}

// nilpotent dim-3 algebra: a b = c, every other product zero
inline HomAlgebra heisenberg3() {
    HomAlgebra a;
    a.dim = 3;
    a.mu = MultiMap(2, 1, 3, 3);
    a.mu.add({0, 1}, {2}, Rational(1));
    a.alpha = MultiMap::identity(3);
    return a;
}

// upper triangular 2x2 matrices: basis e11, e12, e22
inline HomAlgebra upper_triangular2() {
    HomAlgebra a;
    a.dim = 3;
    a.mu = MultiMap(2, 1, 3, 3);
    a.mu.add({0, 0}, {0}, Rational(1));  // e11 e11
    a.mu.add({0, 1}, {1}, Rational(1));  // e11 e12
    a.mu.add({1, 2}, {1}, Rational(1));  // e12 e22
    a.mu.add({2, 2}, {2}, Rational(1));  // e22 e22
    a.alpha = MultiMap::identity(3);
    a.unit = std::vector<Rational>{Rational(1), Rational(0), Rational(1)};
    return a;
}

// truncated polynomial algebra K[x,y]/deg>=3, basis 1, x, y, x^2, xy, y^2
inline HomAlgebra t6_associative() { return examples::t6_associative(); }

// the multiplicative extension of x -> ax + by, y -> cx + dy to t6
inline MultiMap t6_extend_endomorphism(const Rational& ax, const Rational& bx,
                                       const Rational& cy, const Rational& dy) {
    return examples::t6_endomorphism(ax, bx, cy, dy);
}

// the five structure maps of the truncated-polynomial family
enum class T6Variant { Identity, Scalar2, Jordan2, Diag23, Diag24 };

inline HomAlgebra t6_variant(T6Variant v) {
    HomAlgebra base = t6_associative();
    switch (v) {
        case T6Variant::Identity:
            return base;
        case T6Variant::Scalar2:
            return yau_twist(base, t6_extend_endomorphism(Rational(2), Rational(0), Rational(0), Rational(2)));
        case T6Variant::Jordan2:
            return yau_twist(base, t6_extend_endomorphism(Rational(2), Rational(0), Rational(1), Rational(2)));
        case T6Variant::Diag23:
            return yau_twist(base, t6_extend_endomorphism(Rational(2), Rational(0), Rational(0), Rational(3)));
        case T6Variant::Diag24:
            return yau_twist(base, t6_extend_endomorphism(Rational(2), Rational(0), Rational(0), Rational(4)));
    }
    throw StructureError("unknown variant");
}

// group bialgebra K[Z/2]: basis 1, g
inline HomBialgebra kz2_bialgebra() { return examples::kz2_bialgebra(); }

inline HomBialgebra kz2_twisted() { return examples::kz2_twisted(); }

// deterministic splitmix64
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long below(long n) { return long(next() % std::uint64_t(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }  // inclusive
    Rational small_rational() {
        long num = range(-3, 3);
        long den = range(1, 3);
        return Rational(num, den);
    }
};

inline MultiMap random_linear(Rng& rng, long dim, int sparsity = 2) {
    MultiMap f(1, 1, dim, dim);
    for (long j = 0; j < dim; ++j)
        for (long k = 0; k < dim; ++k)
            if (rng.below(sparsity + 1) == 0) f.add(TupleKey(j), TupleKey(k), rng.small_rational());
    return f;
}

inline MultiMap random_bilinear(Rng& rng, long dim, int sparsity = 3) {
    MultiMap f(2, 1, dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            for (long k = 0; k < dim; ++k)
                if (rng.below(sparsity + 1) == 0) f.add({i, j}, {k}, rng.small_rational());
    return f;
}

// unit-triangular times unit-triangular change of basis (always invertible)
inline MultiMap random_basis_change(Rng& rng, long dim) {
    MultiMap low = MultiMap::identity(dim), up = MultiMap::identity(dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            if (i > j && rng.below(2) == 0) low.add(TupleKey(j), TupleKey(i), Rational(rng.range(-2, 2)));
            if (i < j && rng.below(2) == 0) up.add(TupleKey(j), TupleKey(i), Rational(rng.range(-2, 2)));
        }
    return low.then(up);
}

inline HomAlgebra conjugate_algebra(const HomAlgebra& a, const MultiMap& p) {
    auto pinv = invert_linear(p);
    HomAlgebra out;
    out.dim = a.dim;
    out.mu = a.mu.compose_full({&p, &p}).then(*pinv);
    out.alpha = p.then(a.alpha).then(*pinv);
    if (a.unit) {
        std::vector<Rational> u(a.dim);
        for (long k = 0; k < a.dim; ++k)
            for (long j = 0; j < a.dim; ++j) u[k] += pinv->coeff(TupleKey(j), TupleKey(k)) * (*a.unit)[j];
        out.unit = u;
    }
    return out;
}

inline MultiMap conjugate_map(const MultiMap& f, const MultiMap& p) {
    auto pinv = invert_linear(p);
    return p.then(f).then(*pinv);
}

// an associative algebra of dim <= 3 together with an algebra endomorphism,
// in a random basis
inline std::pair<HomAlgebra, MultiMap> random_assoc_with_endo(Rng& rng) {
    int which = int(rng.below(4));
    HomAlgebra a;
    MultiMap g;
    switch (which) {
        case 0: {  // K[x]/(x^2), gamma(x) = c x
            a = kx_truncated(2);
            g = MultiMap::identity(2);
            g.add({1}, {1}, Rational(rng.range(-2, 2)) - Rational(1));  // overwrite to c
            break;
        }
        case 1: {  // K[x]/(x^3), gamma(x) = c1 x + c2 x^2
            a = kx_truncated(3);
            Rational c1(rng.range(-2, 2)), c2(rng.range(-2, 2));
            g = MultiMap(1, 1, 3, 3);
            g.add({0}, {0}, Rational(1));
            g.add({1}, {1}, c1);
            g.add({1}, {2}, c2);
            g.add({2}, {2}, c1 * c1);
            break;
        }
        case 2: {  // K x K with one of its four unital endomorphisms
            a = k_times_k();
            g = MultiMap(1, 1, 2, 2);
            switch (rng.below(4)) {
                case 0:
                    g = MultiMap::identity(2);
                    break;
                case 1:  // swap
                    g.add({0}, {1}, Rational(1));
                    g.add({1}, {0}, Rational(1));
                    break;
                case 2:  // both idempotents to e1 + e2 ... project to first slot
                    g.add({0}, {0}, Rational(1));
                    g.add({0}, {1}, Rational(1));
                    break;
                default:
                    g.add({1}, {0}, Rational(1));
                    g.add({1}, {1}, Rational(1));
                    break;
            }
            break;
        }
        default: {  // heisenberg with gamma(a) = s a + u c, gamma(b) = t b + v c
            a = heisenberg3();
            Rational s(rng.range(-2, 2)), t(rng.range(-2, 2));
            g = MultiMap(1, 1, 3, 3);
            g.add({0}, {0}, s);
            g.add({0}, {2}, Rational(rng.range(-2, 2)));
            g.add({1}, {1}, t);
            g.add({1}, {2}, Rational(rng.range(-2, 2)));
            g.add({2}, {2}, s * t);
            break;
        }
    }
    MultiMap p = random_basis_change(rng, a.dim);
    return {conjugate_algebra(a, p), conjugate_map(g, p)};
}

// a random valid multiplicative Hom-associative algebra of dim <= 3
inline HomAlgebra random_valid_hom_algebra(Rng& rng) {
    switch (rng.below(3)) {
        case 0: {  // Yau twist of an associative fixture
            auto [a, g] = random_assoc_with_endo(rng);
            return yau_twist(a, g);
        }
        case 1: {  // alpha = 0: every bilinear map works
            long dim = rng.range(2, 3);
            HomAlgebra a;
            a.dim = dim;
            a.mu = random_bilinear(rng, dim);
            a.alpha = MultiMap::zero(1, 1, dim, dim);
            return a;
        }
        default: {  // mu = 0: every linear map works
            long dim = rng.range(2, 3);
            HomAlgebra a;
            a.dim = dim;
            a.mu = MultiMap::zero(2, 1, dim, dim);
            a.alpha = random_linear(rng, dim);
            return a;
        }
    }
}

}  // namespace fixtures
