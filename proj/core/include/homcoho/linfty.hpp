#pragma once

#include "homcoho/complex.hpp"

namespace homcoho {

// Argument of a graded bracket: a mu-part cochain (degree = arity) or an
// alpha-part cochain (degree = arity + 1); shifted degree is degree - 2.
struct GradedCochain {
    bool alpha_part = false;
    MultiMap map;

    int degree() const { return map.arity_in() + (alpha_part ? 1 : 0); }
    int shifted_degree() const { return degree() - 2; }
};

struct BracketValue {
    MultiMap value;
    bool listed = false;  // false: shape not among the printed brackets (value = 0)
};

// The explicit low-degree brackets, graded-symmetric in the arguments;
// unlisted shapes evaluate to zero with listed = false.
BracketValue bracket_mu(const std::vector<GradedCochain>& args, long dim);
BracketValue bracket_alpha(const std::vector<GradedCochain>& args, long dim);

// mu-part: hom-associativity defect alpha(x)(yz) - (xy)alpha(z);
// alpha-part: multiplicativity defect alpha o mu - mu o (alpha (x) alpha).
// Both vanish iff (mu, alpha) is a multiplicative Hom-associative structure.
std::pair<MultiMap, MultiMap> mc_residual(const MultiMap& mu, const MultiMap& alpha);

// The differential assembled from the brackets; degrees 2 and 3 only, equal
// to build_total_differential applied to c.
CochainPair differential_via_brackets(const HomAlgebra& a, const CochainPair& c);
SparseMat differential_via_brackets_matrix(const HomAlgebra& a, int n);

}  // namespace homcoho
