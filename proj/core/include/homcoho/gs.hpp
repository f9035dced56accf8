#pragma once

#include "homcoho/complex.hpp"

namespace homcoho {

struct HomBialgebra {
    long dim = 0;
    std::vector<std::string> basis;
    MultiMap mu, alpha;    // algebra side
    MultiMap delta, beta;  // coalgebra side; delta is (1 -> 2)
    std::vector<Rational> unit;
    std::vector<Rational> counit;

    void check_shape() const;
    HomAlgebra algebra_part() const;
    bool alpha_equals_beta() const { return alpha == beta; }
};

// All bialgebra axioms itemized on basis elements: both Hom-(co)algebra
// structures, unit/counit laws and the nine compatibility identities.
ValidationReport validate_hom_bialgebra(const HomBialgebra& b);

// (A, gamma mu, Delta gamma, 1, eps, gamma alpha, gamma beta) for a bialgebra
// morphism gamma.
HomBialgebra yau_twist_bialgebra(const HomBialgebra& b, const MultiMap& gamma);

// Module and comodule structures on tensor powers used by the bicomplex.
struct TwistedActions {
    int m = 1;
    MultiMap left, right;          // actions on A^{(x) m}: (1+m -> m), (m+1 -> m)
    MultiMap left_tw, right_tw;    // beta-twisted actions on A^{(x) (m-1)}; empty maps for m = 1
    MultiMap coleft, coright;      // coactions on A^{(x) m}: (m -> 1+m), (m -> m+1)
    MultiMap coleft_tw, coright_tw;  // alpha-twisted coactions on A^{(x) (m-1)}
};
TwistedActions twisted_actions(const HomBialgebra& b, int m);

// The untwisted tensor-power coactions alone (comodule A^{(x) k}).
MultiMap coaction_left(const HomBialgebra& b, int k);
MultiMap coaction_right(const HomBialgebra& b, int k);

// Cell of the bicomplex: C_GS^{n,m} = H^{n,m} + H^{n-1,m} + H^{n,m-1} +
// H^{n-1,m-1}, components with a nonpositive index absent.
struct GSCell {
    int n = 1, m = 1;
    std::optional<MultiMap> phi;  // H^{n,m}
    std::optional<MultiMap> psi;  // H^{n-1,m}
    std::optional<MultiMap> chi;  // H^{n,m-1}
    std::optional<MultiMap> xi;   // H^{n-1,m-1}

    static GSCell zero(const HomBialgebra& b, int n, int m);
};

long gs_cell_dim(const HomBialgebra& b, int n, int m);
std::vector<Rational> flatten_cell(const HomBialgebra& b, const GSCell& c);
GSCell unflatten_cell(const HomBialgebra& b, int n, int m, const std::vector<Rational>& v);

SparseMat gs_horizontal_differential(const HomBialgebra& b, int n, int m);  // -> (n+1, m)
SparseMat gs_vertical_differential(const HomBialgebra& b, int n, int m);    // -> (n, m+1)

struct SquareReport {
    int n = 0, m = 0;
    bool horizontal_ok = true, vertical_ok = true, commute_ok = true;
    bool ok() const { return horizontal_ok && vertical_ok && commute_ok; }
};
struct BicomplexReport {
    std::vector<SquareReport> squares;
    bool ok() const {
        for (const auto& s : squares)
            if (!s.ok()) return false;
        return true;
    }
};
// d_h^2 = 0, d_v^2 = 0 and d_h d_v = d_v d_h on every cell in range.
BicomplexReport bicomplex_check(const HomBialgebra& b, int n_max, int m_max);

// alpha = beta reduction: degree-i space = (+)_{i'+j'=i+1} H^{i',j'} (mu
// parts) (+) (+)_{i'+j'=i} H^{i',j'} (alpha parts).
struct ReducedComplex {
    int degree = 0;
    std::vector<std::pair<int, int>> mu_cells;
    std::vector<std::pair<int, int>> alpha_cells;
    long dim = 0;
    SparseMat differential;  // C^i -> C^{i+1}
};
ReducedComplex alpha_equals_beta_subcomplex(const HomBialgebra& b, int degree);

// Embeds reduced degree-i cochains into the full bicomplex (with the signed
// identification), applies the total differential d_h + (-1)^n d_v, verifies
// the constraint pair (xi = 0, psi/chi matching) and that projecting back
// gives the reduced differential.
bool reduced_embedding_consistent(const HomBialgebra& b, int degree);

}  // namespace homcoho
