#pragma once

// Bundled example algebras: the dim-2 algebra whose structure map needs a
// sign correction, the truncated polynomial algebra K[x,y]/(deg >= 3) with
// its family of structure maps, and the group bialgebra K[Z/2].

#include "homcoho/algebra.hpp"
#include "homcoho/gs.hpp"

namespace homcoho::examples {

// e1 e1 = e1, all other products e2; alpha(e2) = 0 and alpha(e1) = e1 - e2
// (corrected) or e1 + e2 (as published, fails multiplicativity).
HomAlgebra e2_algebra(bool corrected = true);

// the associative K[x,y]/(deg >= 3) on basis 1, x, y, x^2, xy, y^2
HomAlgebra t6_associative();

// multiplicative extension of x -> ax x + bx y, y -> cy x + dy y
MultiMap t6_endomorphism(const Rational& ax, const Rational& bx, const Rational& cy,
                         const Rational& dy);

// Yau twist of t6_associative by t6_endomorphism(...)
HomAlgebra t6_twisted(const Rational& ax, const Rational& bx, const Rational& cy,
                      const Rational& dy);

HomBialgebra kz2_bialgebra();
HomBialgebra kz2_twisted();  // Yau twist by gamma(g) = 1

}  // namespace homcoho::examples
