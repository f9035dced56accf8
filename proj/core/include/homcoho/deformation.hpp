#pragma once

#include "homcoho/complex.hpp"

namespace homcoho {

// Truncated one-parameter formal deformation: mu_* = sum mu_i t^i and
// alpha_* = sum alpha_i t^i through order N, with mu_0/alpha_0 the base
// structure.
struct TruncatedDeformation {
    HomAlgebra base;
    int order = 0;
    std::vector<MultiMap> mus;     // mus[i] = mu_i, 0 <= i <= order
    std::vector<MultiMap> alphas;  // alphas[i] = alpha_i

    void check_shape() const;
    static TruncatedDeformation undeformed(const HomAlgebra& base, int order);
};

// Order-n residuals, oriented so that the deformation equations read
// del(mu_n, alpha_n) = (R1_n, R2_n) exactly.
MultiMap residual_assoc(const TruncatedDeformation& d, int n);  // R1_n, (3 -> 1)
MultiMap residual_mult(const TruncatedDeformation& d, int n);   // R2_n, (2 -> 1)

// del(mu_n, alpha_n) evaluated through the complex-module builders.
CochainPair deformation_equation_lhs(const TruncatedDeformation& d, int n);

// Orders n <= N at which del(mu_n, alpha_n) != (R1_n, R2_n); empty iff d is a
// deformation up to its truncation order.
std::vector<int> check_deformation(const TruncatedDeformation& d);

struct InfinitesimalClass {
    bool cocycle = false;
    std::optional<MultiMap> coboundary_witness;  // S with del(S, 0) = (mu_1, alpha_1)
};
InfinitesimalClass infinitesimal_class(const TruncatedDeformation& d);

struct ObstructionResult {
    CochainPair pair;  // (R1_{n+1}, R2_{n+1}), degree 3
    bool verified_cocycle = false;
};
// Requires d to be a deformation up to order n (n <= truncation order).
ObstructionResult obstruction(const TruncatedDeformation& d, int n);

// Solve del(mu_{n+1}, alpha_{n+1}) = (R1_{n+1}, R2_{n+1}) at n = d.order;
// nullopt iff the obstruction class is nonzero in H~H^3.  Minimum-support
// solution under the canonical pivot rule.
std::optional<std::pair<MultiMap, MultiMap>> extend_one_order(const TruncatedDeformation& d);

// d and d2 must agree below order n and differ by a cocycle at order n;
// returns S_n with del(S_n, 0) = (mu_n - mu'_n, alpha_n - alpha'_n), if any.
std::optional<MultiMap> equivalence_step(const TruncatedDeformation& d,
                                         const TruncatedDeformation& d2, int n);

// Conjugation by T = id + sum_{i >= 1} ts[i-1] t^i, truncated at d.order:
// a *' b = T^{-1}(T(a) * T(b)), alpha' = T^{-1} alpha_* T.
TruncatedDeformation apply_equivalence(const TruncatedDeformation& d,
                                       const std::vector<MultiMap>& ts);

struct NormalizeResult {
    TruncatedDeformation deformation;
    bool trivialized = false;  // all terms killed within the truncation order
    int leading_order = 0;     // first nonzero order of the result; 0 when trivialized
};
// Repeatedly kills coboundary leading terms by equivalences.
NormalizeResult normalize_leading_term(const TruncatedDeformation& d);

struct HomPoisson {
    HomAlgebra base;  // commutative
    MultiMap bracket;
};

// bracket(a,b) = (mu_1(a,b) - mu_1(b,a)) / 2; base must be commutative and d
// a deformation up to order >= 2.
HomPoisson poisson_from_deformation(const TruncatedDeformation& d);

ValidationReport check_hom_poisson(const HomPoisson& p);

}  // namespace homcoho
