#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcoho/matrix.hpp"
#include "homcoho/multimap.hpp"

namespace homcoho {

// One violated axiom instance, with the basis tuple that witnesses it.
struct Violation {
    std::string axiom;
    std::vector<long> where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct HomAlgebra {
    long dim = 0;
    std::vector<std::string> basis;
    MultiMap mu;     // (2 -> 1)
    MultiMap alpha;  // (1 -> 1)
    std::optional<std::vector<Rational>> unit;

    void check_shape() const;  // throws StructureError
    bool alpha_is_identity() const { return alpha == MultiMap::identity(dim); }
};

// Enumerates every violated axiom instance: Hom-associativity
// alpha(x)(yz) = (xy)alpha(z) on basis triples, multiplicativity
// alpha o mu = mu o (alpha (x) alpha) on pairs, and the unit laws when a unit
// is present.
ValidationReport validate_hom_algebra(const HomAlgebra& a);

// Appends the nonzero in-tuples of `defect` to `report` under `axiom`.
void collect_violations(ValidationReport& report, const MultiMap& defect, const std::string& axiom);

bool is_algebra_morphism(const HomAlgebra& a, const MultiMap& gamma, Violation* witness = nullptr);

// (A, gamma o mu, gamma o alpha); gamma must be an algebra morphism commuting
// with alpha.  Throws MathError with a witness pair otherwise.
HomAlgebra yau_twist(const HomAlgebra& a, const MultiMap& gamma);

bool is_derivation(const HomAlgebra& a, const MultiMap& f);
bool is_alpha_derivation(const HomAlgebra& a, const MultiMap& f);
// Requires invertible alpha; throws MathError when singular.
bool is_conjugate_alpha_derivation(const HomAlgebra& a, const MultiMap& f);

// mu^n_alpha, the left-bracketed alpha-twisted product: mu^1 = id,
// mu^2 = mu, mu^{n+1} = mu o (mu^n (x) alpha^{n-1}).
MultiMap iterated_mu_alpha(const HomAlgebra& a, int n);
MultiMap iterated_mu_alpha(const MultiMap& mu, const MultiMap& alpha, int n);
// Dual iterated comultiplication: Delta^1 = id, Delta^2 = Delta,
// Delta^{n+1} = (Delta (x) beta^{(n-1)}) o Delta^n.
MultiMap iterated_delta_beta(const MultiMap& delta, const MultiMap& beta, int n);

// Sparse action table (a, m) -> sum c * m' for a bimodule over A.
struct ActionTable {
    long dim_alg = 0;
    long dim_mod = 0;
    std::unordered_map<std::uint64_t, std::vector<std::pair<long, Rational>>> at;

    void add(long a, long m, long m2, const Rational& c);
    const std::vector<std::pair<long, Rational>>* find(long a, long m) const;
    static ActionTable from_multimap(const MultiMap& action, int alg_slot);  // (2 -> 1) maps only
};

// Coefficients for the cochain complex: a Hom-bimodule (M, alpha_mod) with
// left action A (x) M -> M and right action M (x) A -> M.
struct Bimodule {
    long dim = 0;
    MultiMap alpha_mod;  // (1 -> 1) over dim
    ActionTable left;
    ActionTable right;

    static Bimodule regular(const HomAlgebra& a);
};

ValidationReport validate_bimodule(const HomAlgebra& a, const Bimodule& m);

}  // namespace homcoho
