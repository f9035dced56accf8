#include "homcoho/examples.hpp"

namespace homcoho::examples {

HomAlgebra e2_algebra(bool corrected) {
    HomAlgebra a;
    a.dim = 2;
    a.basis = {"e1", "e2"};
    a.mu = MultiMap(2, 1, 2, 2);
    a.mu.add({0, 0}, {0}, Rational(1));
    a.mu.add({0, 1}, {1}, Rational(1));
    a.mu.add({1, 0}, {1}, Rational(1));
    a.mu.add({1, 1}, {1}, Rational(1));
    a.alpha = MultiMap(1, 1, 2, 2);
    a.alpha.add({0}, {0}, Rational(1));
    a.alpha.add({0}, {1}, corrected ? Rational(-1) : Rational(1));
    return a;
}

namespace {
constexpr int kExpo[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};

long monomial_index(int ex, int ey) {
    for (long t = 0; t < 6; ++t)
        if (kExpo[t][0] == ex && kExpo[t][1] == ey) return t;
    return -1;
}
}  // namespace

HomAlgebra t6_associative() {
    HomAlgebra a;
    a.dim = 6;
    a.basis = {"1", "x", "y", "x2", "xy", "y2"};
    a.mu = MultiMap(2, 1, 6, 6);
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j) {
            int ex = kExpo[i][0] + kExpo[j][0], ey = kExpo[i][1] + kExpo[j][1];
            if (ex + ey <= 2) a.mu.add({i, j}, {monomial_index(ex, ey)}, Rational(1));
        }
    a.alpha = MultiMap::identity(6);
    a.unit = std::vector<Rational>(6);
    (*a.unit)[0] = Rational(1);
    return a;
}

MultiMap t6_endomorphism(const Rational& ax, const Rational& bx, const Rational& cy,
                         const Rational& dy) {
    HomAlgebra a = t6_associative();
    MultiMap g(1, 1, 6, 6);
    g.add({0}, {0}, Rational(1));
    g.add({1}, {1}, ax);
    g.add({1}, {2}, bx);
    g.add({2}, {1}, cy);
    g.add({2}, {2}, dy);
    auto lin = [&](long i) {
        std::vector<Rational> v(6);
        for (long k = 0; k < 6; ++k) v[k] = g.coeff(TupleKey(i), TupleKey(k));
        return v;
    };
    auto mult = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        std::vector<Rational> w(6);
        for (long i = 0; i < 6; ++i)
            for (long j = 0; j < 6; ++j)
                if (!u[i].is_zero() && !v[j].is_zero())
                    for (long k = 0; k < 6; ++k) w[k] += u[i] * v[j] * a.mu.coeff({i, j}, {k});
        return w;
    };
    std::vector<Rational> gx = lin(1), gy = lin(2);
    auto set_img = [&](long i, const std::vector<Rational>& v) {
        for (long k = 0; k < 6; ++k)
            if (!v[k].is_zero()) g.add(TupleKey(i), TupleKey(k), v[k]);
    };
    set_img(3, mult(gx, gx));
    set_img(4, mult(gx, gy));
    set_img(5, mult(gy, gy));
    return g;
}

HomAlgebra t6_twisted(const Rational& ax, const Rational& bx, const Rational& cy,
                      const Rational& dy) {
    return yau_twist(t6_associative(), t6_endomorphism(ax, bx, cy, dy));
}

HomBialgebra kz2_bialgebra() {
    HomBialgebra b;
    b.dim = 2;
    b.basis = {"1", "g"};
    b.mu = MultiMap(2, 1, 2, 2);
    b.mu.add({0, 0}, {0}, Rational(1));
    b.mu.add({0, 1}, {1}, Rational(1));
    b.mu.add({1, 0}, {1}, Rational(1));
    b.mu.add({1, 1}, {0}, Rational(1));
    b.alpha = MultiMap::identity(2);
    b.delta = MultiMap(1, 2, 2, 2);
    b.delta.add({0}, {0, 0}, Rational(1));
    b.delta.add({1}, {1, 1}, Rational(1));
    b.beta = MultiMap::identity(2);
    b.unit = {Rational(1), Rational(0)};
    b.counit = {Rational(1), Rational(1)};
    return b;
}

HomBialgebra kz2_twisted() {
    MultiMap g(1, 1, 2, 2);
    g.add({0}, {0}, Rational(1));
    g.add({1}, {0}, Rational(1));
    return yau_twist_bialgebra(kz2_bialgebra(), g);
}

}  // namespace homcoho::examples
