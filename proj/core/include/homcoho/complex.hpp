#pragma once

#include <optional>
#include <vector>

#include "homcoho/algebra.hpp"
#include "homcoho/matrix.hpp"

namespace homcoho {

// Element of the degree-n cochain space Hom(A^n, M) + Hom(A^{n-1}, M);
// psi is absent exactly in degree 1 (and for degree-0 preimages).
struct CochainPair {
    int degree = 1;
    MultiMap phi;
    std::optional<MultiMap> psi;

    static CochainPair zero(long dim_alg, long dim_mod, int degree);
};

long cochain_dim(long dim_alg, long dim_mod, int n);
std::vector<Rational> flatten_cochain(const CochainPair& c);
CochainPair unflatten_cochain(long dim_alg, long dim_mod, int n, const std::vector<Rational>& v);

// The four differential blocks in matrix form, flattened per the convention:
// phi block first (lexicographic input tuple, then output index), psi after.
SparseMat build_del_mumu(const HomAlgebra& a, int n, const Bimodule& m);
SparseMat build_del_alal(const HomAlgebra& a, int n, const Bimodule& m);  // n >= 2
SparseMat build_del_mual(const HomAlgebra& a, int n, const Bimodule& m);
SparseMat build_del_almu(const HomAlgebra& a, int n, const Bimodule& m);  // n >= 2
SparseMat build_del_mumu(const HomAlgebra& a, int n);
SparseMat build_del_alal(const HomAlgebra& a, int n);
SparseMat build_del_mual(const HomAlgebra& a, int n);
SparseMat build_del_almu(const HomAlgebra& a, int n);

struct DifferentialMatrix {
    int degree = 1;
    long dim_alg = 0, dim_mod = 0;
    SparseMat mumu, almu, mual, alal;  // unsigned blocks; almu/alal empty for n = 1
    // [[mumu, -almu], [mual, -alal]]; only the phi column blocks for n = 1.
    SparseMat total() const;
};

DifferentialMatrix build_total_differential(const HomAlgebra& a, int n, const Bimodule& m);
DifferentialMatrix build_total_differential(const HomAlgebra& a, int n);

// dim ker del^n - rank del^{n-1}, with rank del^0 := 0.  Refuses invalid
// algebras (del^2 = 0 is not guaranteed) unless force is set.
long cohomology_dim(const HomAlgebra& a, int n, bool force = false);
std::vector<long> cohomology_dims(const HomAlgebra& a, int max_degree, bool force = false);
std::vector<CochainPair> cocycle_basis(const HomAlgebra& a, int n, bool force = false);
bool is_cocycle(const HomAlgebra& a, const CochainPair& c);
std::optional<CochainPair> is_coboundary(const HomAlgebra& a, const CochainPair& c);

// Cohomology of the alpha-commuting subcomplex {phi | alpha phi = phi alpha^n}
// under del_mumu alone (the previously known Hom-Hochschild cohomology).
long classical_subcomplex_dim(const HomAlgebra& a, int n);
std::vector<long> classical_subcomplex_dims(const HomAlgebra& a, int max_degree);

// phi_psi(x_1..x_n) = alpha^{n-2}(x_1) alpha^{-1}(psi(x_2..x_n))
//                   + (-1)^n alpha^{-1}(psi(x_1..x_{n-1})) alpha^{n-2}(x_n).
MultiMap phi_from_psi(const HomAlgebra& a, const MultiMap& psi);
// (phi_psi, psi) when the hypothesis del_alal psi = del_mual phi_psi holds;
// nullopt otherwise, with the defect vector written to *defect when given.
std::optional<CochainPair> cocycle_from_psi(const HomAlgebra& a, const MultiMap& psi,
                                            std::vector<Rational>* defect = nullptr);

// Complex of an associative algebra with an endomorphism: C^n = Hom(A^n, A)
// + Hom(A^{n-1}, A~) with the gamma-twisted bimodule A~, differential
// (phi, psi) -> (del_mu phi, del_gamma phi - del_mu~ psi).
class MorphismComplex {
public:
    MorphismComplex(HomAlgebra a, MultiMap gamma);  // requires alpha = id

    const HomAlgebra& algebra() const { return a_; }
    const MultiMap& gamma() const { return gamma_; }
    long dim(int n) const;
    SparseMat build_del_mu(int n) const;     // (phi, psi) -> (del_mu phi, -del_mu~ psi)
    SparseMat build_del_gamma(int n) const;  // (phi, psi) -> (0, del_gamma phi)
    SparseMat total(int n) const;
    long cohomology_dim(int n) const;
    // H(H(C, del_mu), del_gamma), the spectral-sequence route.
    long cohomology_dim_two_stage(int n) const;

private:
    HomAlgebra a_;
    MultiMap gamma_;
    Bimodule twisted_;
};

// Chain map Phi : C(A, gamma) -> HC~(A_gamma) and its inverse for invertible
// gamma.
CochainPair chain_map_phi(const HomAlgebra& a_assoc, const MultiMap& gamma, const CochainPair& c);
CochainPair inverse_phi(const HomAlgebra& a_assoc, const MultiMap& gamma, const CochainPair& c);
SparseMat chain_map_phi_matrix(const HomAlgebra& a_assoc, const MultiMap& gamma, int n);

// (gamma^{n-1} phi, gamma^{n-1} psi) on the Yau twist; input must be a
// cocycle of A commuting with gamma.  Verifies the output is a cocycle of
// the twist.
CochainPair yau_cocycle_transfer(const HomAlgebra& a, const MultiMap& gamma, const CochainPair& c);

}  // namespace homcoho
