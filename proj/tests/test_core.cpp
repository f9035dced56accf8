#include "doctest.h"

#include "fixtures.hpp"
#include "homcoho/algebra.hpp"
#include "homcoho/matrix.hpp"

using namespace homcoho;
using fixtures::Rng;

TEST_CASE("rational: canonical form and parsing") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+2/6") == Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), StructureError);
    CHECK_THROWS_AS(Rational::parse("1.5"), StructureError);
    CHECK_THROWS_AS(Rational::parse(""), StructureError);
    CHECK_THROWS_AS(Rational::parse("a/b"), StructureError);
}

TEST_CASE("rational: field laws on random values") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Rational a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("multimap: identity composition and tensor shapes") {
    MultiMap id = MultiMap::identity(3);
    CHECK(id.compose_at(id, 0) == id);
    MultiMap t = id.tensor(id);
    CHECK(t.arity_in() == 2);
    CHECK(t.arity_out() == 2);
    CHECK(t.nnz() == 9);
}

TEST_CASE("multimap: operadic composition examples") {
    HomAlgebra kx3 = fixtures::kx_truncated(3);
    // mu o_0 mu applied to (x, x, x) is x^3 = 0
    MultiMap m2 = kx3.mu.compose_at(kx3.mu, 0);
    for (long k = 0; k < 3; ++k) CHECK(m2.coeff({1, 1, 1}, {k}).is_zero());
    // on (1, x, x) it is x^2
    CHECK(m2.coeff({0, 1, 1}, {2}) == Rational(1));

    // psi o_1 mu for psi = alpha on E2: alpha(e1 e1) = e1 - e2
    HomAlgebra e2 = fixtures::e2_algebra();
    MultiMap pm = e2.alpha.compose_at(e2.mu, 0);
    CHECK(pm.coeff({0, 0}, {0}) == Rational(1));
    CHECK(pm.coeff({0, 0}, {1}) == Rational(-1));
}

TEST_CASE("multimap: operadic associativity on random maps") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        long dim = 2 + rng.below(2);
        MultiMap f = fixtures::random_bilinear(rng, dim);
        MultiMap g = fixtures::random_bilinear(rng, dim);
        MultiMap h = fixtures::random_bilinear(rng, dim);
        // sequential: (f o_0 g) o_0 h == f o_0 (g o_0 h)
        CHECK(f.compose_at(g, 0).compose_at(h, 0) == f.compose_at(g.compose_at(h, 0), 0));
        // disjoint slots: (f o_0 g) o_2 h == (f o_1 h) o_0 g
        CHECK(f.compose_at(g, 0).compose_at(h, 2) == f.compose_at(h, 1).compose_at(g, 0));
    }
}

TEST_CASE("multimap: linear inverse") {
    Rng rng(13);
    MultiMap p = fixtures::random_basis_change(rng, 4);
    auto pinv = invert_linear(p);
    REQUIRE(pinv.has_value());
    CHECK(p.then(*pinv) == MultiMap::identity(4));
    CHECK(pinv->then(p) == MultiMap::identity(4));
    MultiMap sing = MultiMap::zero(1, 1, 2, 2);
    sing.add({0}, {0}, Rational(1));
    CHECK_FALSE(invert_linear(sing).has_value());
}

TEST_CASE("matrix: echelon basics") {
    SparseMat id3(3, 3);
    for (long i = 0; i < 3; ++i) id3.add(i, i, Rational(1));
    KernelResult k = rational_kernel(id3);
    CHECK(k.rank == 3);
    CHECK(k.basis.empty());

    SparseMat z(2, 5);
    k = rational_kernel(z);
    CHECK(k.rank == 0);
    CHECK(k.basis.size() == 5);

    SparseMat prop(2, 2);
    prop.add(0, 0, Rational(1));
    prop.add(0, 1, Rational(2));
    prop.add(1, 0, Rational(2));
    prop.add(1, 1, Rational(4));
    k = rational_kernel(prop);
    CHECK(k.rank == 1);
    REQUIRE(k.basis.size() == 1);
    // canonical representative of the (2, -1) line
    CHECK(k.basis[0][0] == Rational(-2));
    CHECK(k.basis[0][1] == Rational(1));
}

TEST_CASE("matrix: rank-nullity and solve on random matrices") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        long rows = rng.range(1, 6), cols = rng.range(1, 6);
        SparseMat m(rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c)
                if (rng.below(2) == 0) m.add(r, c, rng.small_rational());
        KernelResult k = rational_kernel(m);
        CHECK(k.rank + long(k.basis.size()) == cols);
        for (const auto& v : k.basis)
            for (const Rational& y : m.apply(v)) CHECK(y.is_zero());

        // a consistent system: right-hand side in the column space
        std::vector<Rational> x0(cols);
        for (long c = 0; c < cols; ++c) x0[c] = rng.small_rational();
        std::vector<Rational> b = m.apply(x0);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("validate: corrected E2 passes, printed E2 fails multiplicativity at (e1,e1)") {
    CHECK(validate_hom_algebra(fixtures::e2_algebra(true)).ok());
    ValidationReport rep = validate_hom_algebra(fixtures::e2_algebra(false));
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.axiom == "multiplicativity" && v.where == std::vector<long>{0, 0}) found = true;
    CHECK(found);
}

TEST_CASE("validate: alpha = 0 accepts any multiplication") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        HomAlgebra a;
        a.dim = 3;
        a.mu = fixtures::random_bilinear(rng, 3);
        a.alpha = MultiMap::zero(1, 1, 3, 3);
        CHECK(validate_hom_algebra(a).ok());
    }
}

TEST_CASE("validate: non-associative product with alpha = id is rejected with witness") {
    HomAlgebra a;
    a.dim = 2;
    a.mu = MultiMap(2, 1, 2, 2);
    a.mu.add({0, 0}, {1}, Rational(1));  // e1 e1 = e2
    a.mu.add({1, 0}, {0}, Rational(1));  // e2 e1 = e1
    a.alpha = MultiMap::identity(2);
    ValidationReport rep = validate_hom_algebra(a);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().axiom == "hom-associativity");
    CHECK(rep.violations.front().where == std::vector<long>{0, 0, 0});
}

TEST_CASE("validate: structural error is distinct from axiom violations") {
    HomAlgebra a;
    a.dim = 2;
    a.mu = MultiMap(2, 1, 3, 3);  // wrong dims
    a.alpha = MultiMap::identity(2);
    CHECK_THROWS_AS(validate_hom_algebra(a), StructureError);
}

TEST_CASE("yau twist: K[x]/(x^3) by gamma(x) = 2x") {
    HomAlgebra kx3 = fixtures::kx_truncated(3);
    MultiMap g(1, 1, 3, 3);
    g.add({0}, {0}, Rational(1));
    g.add({1}, {1}, Rational(2));
    g.add({2}, {2}, Rational(4));
    HomAlgebra t = yau_twist(kx3, g);
    CHECK(t.alpha.coeff({1}, {1}) == Rational(2));
    CHECK(t.alpha.coeff({2}, {2}) == Rational(4));
    CHECK(t.mu.coeff({1, 1}, {2}) == Rational(4));  // x . x = 4 x^2
    CHECK(validate_hom_algebra(t).ok());
}

TEST_CASE("yau twist: identity leaves the algebra unchanged") {
    HomAlgebra e2 = fixtures::e2_algebra();
    HomAlgebra t = yau_twist(e2, MultiMap::identity(2));
    CHECK(t.mu == e2.mu);
    CHECK(t.alpha == e2.alpha);
}

TEST_CASE("yau twist: by alpha^{-1} recovers an associative algebra") {
    HomAlgebra a = fixtures::t6_variant(fixtures::T6Variant::Scalar2);
    auto ainv = invert_linear(a.alpha);
    REQUIRE(ainv.has_value());
    HomAlgebra assoc = yau_twist(a, *ainv);
    CHECK(assoc.alpha_is_identity());
    CHECK(validate_hom_algebra(assoc).ok());
}

TEST_CASE("yau twist: non-morphism gamma rejected with witness") {
    HomAlgebra kx3 = fixtures::kx_truncated(3);
    MultiMap g = MultiMap::identity(3);
    g.add({1}, {0}, Rational(1));  // gamma(x) = 1 + x is not multiplicative here
    CHECK_THROWS_AS(yau_twist(kx3, g), MathError);
}

TEST_CASE("yau twist of a valid algebra stays valid for commuting morphisms") {
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
        auto [a, g] = fixtures::random_assoc_with_endo(rng);
        REQUIRE(validate_hom_algebra(a).ok());
        HomAlgebra tw = yau_twist(a, g);
        CHECK(validate_hom_algebra(tw).ok());
        // twisting again by the same morphism also works: gamma is a morphism
        // of the twist and commutes with its structure map
        HomAlgebra tw2 = yau_twist(tw, g);
        CHECK(validate_hom_algebra(tw2).ok());
    }
}

TEST_CASE("derivations: product rule on K[x]/(x^2)") {
    HomAlgebra a = fixtures::kx_truncated(2);
    MultiMap f(1, 1, 2, 2);
    f.add({1}, {1}, Rational(1));  // f(x) = x, f(1) = 0
    CHECK(is_derivation(a, f));
    CHECK(is_alpha_derivation(a, f));  // alpha = id
}

TEST_CASE("derivations: alpha-derivation with phi(1) != 0 on twisted K[x]/(x^4)") {
    HomAlgebra kx4 = fixtures::kx_truncated(4);
    MultiMap g(1, 1, 4, 4);
    for (long k = 0; k < 4; ++k) g.add(TupleKey(k), TupleKey(k), Rational(1, 1 << k));  // x^k -> x^k / 2^k
    HomAlgebra tw = yau_twist(kx4, g);
    // phi(p) = x * alpha(p) with the plain polynomial product
    MultiMap phi(1, 1, 4, 4);
    for (long k = 0; k < 3; ++k) phi.add(TupleKey(k), TupleKey(k + 1), Rational(1, 1 << k));
    CHECK(is_alpha_derivation(tw, phi));
    CHECK_FALSE(phi.coeff({0}, {1}).is_zero());  // phi(1) = x
    CHECK_FALSE(is_derivation(tw, phi));
}

TEST_CASE("derivations: conjugate alpha-derivation matches when alpha and f commute") {
    HomAlgebra a = fixtures::t6_variant(fixtures::T6Variant::Scalar2);
    Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        // diagonal maps commute with the diagonal alpha
        MultiMap f(1, 1, 6, 6);
        for (long i = 0; i < 6; ++i) {
            Rational c = rng.small_rational();
            if (!c.is_zero()) f.add(TupleKey(i), TupleKey(i), c);
        }
        CHECK(is_conjugate_alpha_derivation(a, f) == is_alpha_derivation(a, f));
    }
    MultiMap der(1, 1, 6, 6);  // x d/dx scaled: actually test one known alpha-derivation
    CHECK_THROWS_AS(is_conjugate_alpha_derivation(fixtures::e2_algebra(), der = MultiMap::identity(2)),
                    MathError);  // E2 alpha is singular
}

TEST_CASE("iterated products") {
    HomAlgebra kx3 = fixtures::kx_truncated(3);
    CHECK(iterated_mu_alpha(kx3, 1) == MultiMap::identity(3));
    CHECK(iterated_mu_alpha(kx3, 2) == kx3.mu);
    // associative, alpha = id: mu^3 is the triple product
    MultiMap m3 = iterated_mu_alpha(kx3, 3);
    CHECK(m3.coeff({1, 1, 0}, {2}) == Rational(1));
    CHECK(m3.coeff({1, 1, 1}, {2}).is_zero());

    // group-like: Delta^3(g) = g (x) g (x) g
    HomBialgebra kz2 = fixtures::kz2_bialgebra();
    MultiMap d3 = iterated_delta_beta(kz2.delta, kz2.beta, 3);
    CHECK(d3.coeff({1}, {1, 1, 1}) == Rational(1));
    CHECK(d3.nnz() == 2);
}

TEST_CASE("iterated mu insertion identity on valid algebras") {
    // mu^n(alpha x_1, ..., x_i x_{i+1}, ..., alpha x_{n+1}) = mu^{n+1}(x)
    for (const HomAlgebra& a : {fixtures::e2_algebra(), fixtures::t6_variant(fixtures::T6Variant::Scalar2)}) {
        int n = 3;
        MultiMap mun = iterated_mu_alpha(a, n);
        MultiMap mun1 = iterated_mu_alpha(a, n + 1);
        for (int i = 1; i <= n; ++i) {
            MultiMap t = (i == 1) ? a.mu : a.alpha;
            for (int s = 2; s <= n; ++s) t = t.tensor(s == i ? a.mu : a.alpha);
            CHECK(t.then(mun) == mun1);
        }
    }
}

TEST_CASE("bimodule: regular bimodule of a valid algebra satisfies the axioms") {
    for (const HomAlgebra& a :
         {fixtures::e2_algebra(), fixtures::kx_truncated(3), fixtures::t6_variant(fixtures::T6Variant::Scalar2)}) {
        CHECK(validate_bimodule(a, Bimodule::regular(a)).ok());
    }
}
