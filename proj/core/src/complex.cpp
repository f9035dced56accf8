#include "homcoho/complex.hpp"

#include <string>

namespace homcoho {

CochainPair CochainPair::zero(long dim_alg, long dim_mod, int degree) {
    CochainPair c;
    c.degree = degree;
    c.phi = MultiMap::zero(degree, 1, dim_alg, dim_mod);
    if (degree >= 2) c.psi = MultiMap::zero(degree - 1, 1, dim_alg, dim_mod);
    return c;
}

long cochain_dim(long dim_alg, long dim_mod, int n) {
    if (n <= 0) return 0;
    long d = long(pow_dim(dim_alg, n)) * dim_mod;
    if (n >= 2) d += long(pow_dim(dim_alg, n - 1)) * dim_mod;
    return d;
}

std::vector<Rational> flatten_cochain(const CochainPair& c) {
    long d = c.phi.dim_in(), dm = c.phi.dim_out();
    int n = c.degree;
    std::vector<Rational> v(cochain_dim(d, dm, n));
    for (const auto& [key, val] : c.phi.entries()) v[long(key.first) * dm + long(key.second)] = val;
    if (c.psi) {
        long off = long(pow_dim(d, n)) * dm;
        for (const auto& [key, val] : c.psi->entries())
            v[off + long(key.first) * dm + long(key.second)] = val;
    }
    return v;
}

CochainPair unflatten_cochain(long dim_alg, long dim_mod, int n, const std::vector<Rational>& v) {
    if (long(v.size()) != cochain_dim(dim_alg, dim_mod, n))
        throw StructureError("unflatten_cochain: wrong length");
    CochainPair c = CochainPair::zero(dim_alg, dim_mod, n);
    long phi_sz = long(pow_dim(dim_alg, n)) * dim_mod;
    for (long i = 0; i < phi_sz; ++i)
        if (!v[i].is_zero()) c.phi.add(TupleKey(i / dim_mod), TupleKey(i % dim_mod), v[i]);
    if (n >= 2)
        for (long i = phi_sz; i < long(v.size()); ++i)
            if (!v[i].is_zero()) {
                long j = i - phi_sz;
                c.psi->add(TupleKey(j / dim_mod), TupleKey(j % dim_mod), v[i]);
            }
    return c;
}

namespace {

// Hochschild-shaped block on q-ary cochains with values in m, edge
// coefficients alpha^exp:
//   (d f)(x_1..x_{q+1}) = alpha^exp(x_1).f(x_2..)
//                       + sum_i (-1)^i f(a(x_1),..,x_i x_{i+1},..,a(x_{q+1}))
//                       + (-1)^{q+1} f(x_1..x_q).alpha^exp(x_{q+1})
SparseMat hochschild_block(const HomAlgebra& a, const Bimodule& m, int q, int exp) {
    long d = a.dim, dm = m.dim;
    long rows = long(pow_dim(d, q + 1)) * dm, cols = long(pow_dim(d, q)) * dm;
    SparseMat out(rows, cols);
    std::uint64_t dq = pow_dim(d, q);
    MultiMap p = a.alpha.pow(exp);

    for (const auto& [key, pv] : p.entries()) {
        long x = long(key.first), img = long(key.second);
        for (long v = 0; v < dm; ++v) {
            if (const auto* row = m.left.find(img, v))
                for (const auto& [w, c] : *row)
                    for (std::uint64_t y = 0; y < dq; ++y)
                        out.add(long((std::uint64_t(x) * dq + y) * std::uint64_t(dm)) + w,
                                long(y * std::uint64_t(dm)) + v, pv * c);
            if (const auto* row = m.right.find(img, v)) {
                Rational sgn = (q + 1) % 2 == 0 ? Rational(1) : Rational(-1);
                for (const auto& [w, c] : *row)
                    for (std::uint64_t y = 0; y < dq; ++y)
                        out.add(long((y * std::uint64_t(d) + std::uint64_t(x)) * std::uint64_t(dm)) + w,
                                long(y * std::uint64_t(dm)) + v, sgn * pv * c);
            }
        }
    }
    for (int i = 1; i <= q; ++i) {
        MultiMap t = (i == 1) ? a.mu : a.alpha;
        for (int s = 2; s <= q; ++s) t = t.tensor(s == i ? a.mu : a.alpha);
        Rational sgn = i % 2 == 0 ? Rational(1) : Rational(-1);
        for (const auto& [key, tv] : t.entries())
            for (long v = 0; v < dm; ++v)
                out.add(long(key.first) * dm + v, long(key.second) * dm + v, sgn * tv);
    }
    return out;
}

// f -> alpha_out o f - f o alpha_in^{(x) q}
SparseMat commutator_block(const MultiMap& alpha_out, const MultiMap& alpha_in, int q, long dm) {
    long d = alpha_in.dim_in();
    long n = long(pow_dim(d, q)) * dm;
    SparseMat out(n, n);
    std::uint64_t dq = pow_dim(d, q);
    for (const auto& [key, c] : alpha_out.entries()) {
        long v = long(key.first), w = long(key.second);
        for (std::uint64_t y = 0; y < dq; ++y)
            out.add(long(y * std::uint64_t(dm)) + w, long(y * std::uint64_t(dm)) + v, c);
    }
    MultiMap t = alpha_in;
    for (int s = 2; s <= q; ++s) t = t.tensor(alpha_in);
    for (const auto& [key, tv] : t.entries())
        for (long v = 0; v < dm; ++v)
            out.add(long(key.first) * dm + v, long(key.second) * dm + v, -tv);
    return out;
}

// psi -> alpha^exp(x_1 x_2).psi(x_3..) - psi(..).alpha^exp(x_q+1 x_q+2)  on
// q-ary psi
SparseMat almu_block(const HomAlgebra& a, const Bimodule& m, int q, int exp) {
    long d = a.dim, dm = m.dim;
    long rows = long(pow_dim(d, q + 2)) * dm, cols = long(pow_dim(d, q)) * dm;
    SparseMat out(rows, cols);
    std::uint64_t dq = pow_dim(d, q);
    MultiMap p2 = a.mu.then(a.alpha.pow(exp));  // alpha^exp o mu, (2 -> 1)
    for (const auto& [key, pv] : p2.entries()) {
        std::uint64_t x12 = key.first;
        long img = long(key.second);
        for (long v = 0; v < dm; ++v) {
            if (const auto* row = m.left.find(img, v))
                for (const auto& [w, c] : *row)
                    for (std::uint64_t y = 0; y < dq; ++y)
                        out.add(long((x12 * dq + y) * std::uint64_t(dm)) + w,
                                long(y * std::uint64_t(dm)) + v, pv * c);
            if (const auto* row = m.right.find(img, v))
                for (const auto& [w, c] : *row)
                    for (std::uint64_t y = 0; y < dq; ++y)
                        out.add(long((y * std::uint64_t(d) * std::uint64_t(d) + x12) * std::uint64_t(dm)) + w,
                                long(y * std::uint64_t(dm)) + v, -(pv * c));
        }
    }
    return out;
}

}  // namespace

SparseMat build_del_mumu(const HomAlgebra& a, int n, const Bimodule& m) {
    if (n < 1) throw StructureError("del_mumu: n >= 1 required");
    return hochschild_block(a, m, n, n - 1);
}

SparseMat build_del_alal(const HomAlgebra& a, int n, const Bimodule& m) {
    if (n < 2) throw StructureError("del_alal: n >= 2 required");
    return hochschild_block(a, m, n - 1, n - 1);
}

SparseMat build_del_mual(const HomAlgebra& a, int n, const Bimodule& m) {
    if (n < 1) throw StructureError("del_mual: n >= 1 required");
    return commutator_block(m.alpha_mod, a.alpha, n, m.dim);
}

SparseMat build_del_almu(const HomAlgebra& a, int n, const Bimodule& m) {
    if (n < 2) throw StructureError("del_almu: n >= 2 required");
    return almu_block(a, m, n - 1, n - 2);
}

SparseMat build_del_mumu(const HomAlgebra& a, int n) { return build_del_mumu(a, n, Bimodule::regular(a)); }
SparseMat build_del_alal(const HomAlgebra& a, int n) { return build_del_alal(a, n, Bimodule::regular(a)); }
SparseMat build_del_mual(const HomAlgebra& a, int n) { return build_del_mual(a, n, Bimodule::regular(a)); }
SparseMat build_del_almu(const HomAlgebra& a, int n) { return build_del_almu(a, n, Bimodule::regular(a)); }

SparseMat DifferentialMatrix::total() const {
    long rows_phi = mumu.rows(), rows_psi = mual.rows();
    long cols_phi = mumu.cols(), cols_psi = degree >= 2 ? alal.cols() : 0;
    SparseMat t(rows_phi + rows_psi, cols_phi + cols_psi);
    t.add_scaled_block(mumu, 0, 0, Rational(1));
    t.add_scaled_block(mual, rows_phi, 0, Rational(1));
    if (degree >= 2) {
        t.add_scaled_block(almu, 0, cols_phi, Rational(-1));
        t.add_scaled_block(alal, rows_phi, cols_phi, Rational(-1));
    }
    return t;
}

DifferentialMatrix build_total_differential(const HomAlgebra& a, int n, const Bimodule& m) {
    DifferentialMatrix dm;
    dm.degree = n;
    dm.dim_alg = a.dim;
    dm.dim_mod = m.dim;
    dm.mumu = build_del_mumu(a, n, m);
    dm.mual = build_del_mual(a, n, m);
    if (n >= 2) {
        dm.almu = build_del_almu(a, n, m);
        dm.alal = build_del_alal(a, n, m);
    }
    return dm;
}

DifferentialMatrix build_total_differential(const HomAlgebra& a, int n) {
    return build_total_differential(a, n, Bimodule::regular(a));
}

static void require_valid(const HomAlgebra& a, bool force) {
    if (force) return;
    ValidationReport rep = validate_hom_algebra(a);
    if (!rep.ok())
        throw MathError("cohomology of an invalid Hom-algebra refused (" +
                        std::to_string(rep.violations.size()) +
                        " axiom violations; pass force to override)");
}

std::vector<long> cohomology_dims(const HomAlgebra& a, int max_degree, bool force) {
    require_valid(a, force);
    std::vector<long> dims;
    long prev_rank = 0;
    for (int n = 1; n <= max_degree; ++n) {
        SparseMat d = build_total_differential(a, n).total();
        long rank = rank_of(d);
        dims.push_back(d.cols() - rank - prev_rank);
        prev_rank = rank;
    }
    return dims;
}

long cohomology_dim(const HomAlgebra& a, int n, bool force) {
    require_valid(a, force);
    long prev_rank = n >= 2 ? rank_of(build_total_differential(a, n - 1).total()) : 0;
    SparseMat d = build_total_differential(a, n).total();
    return d.cols() - rank_of(d) - prev_rank;
}

std::vector<CochainPair> cocycle_basis(const HomAlgebra& a, int n, bool force) {
    require_valid(a, force);
    KernelResult k = rational_kernel(build_total_differential(a, n).total());
    std::vector<CochainPair> basis;
    basis.reserve(k.basis.size());
    for (const auto& v : k.basis) basis.push_back(unflatten_cochain(a.dim, a.dim, n, v));
    return basis;
}

bool is_cocycle(const HomAlgebra& a, const CochainPair& c) {
    SparseMat d = build_total_differential(a, c.degree).total();
    for (const Rational& v : d.apply(flatten_cochain(c)))
        if (!v.is_zero()) return false;
    return true;
}

std::optional<CochainPair> is_coboundary(const HomAlgebra& a, const CochainPair& c) {
    if (c.degree == 1) {
        if (c.phi.is_zero()) return CochainPair::zero(a.dim, a.dim, 0);
        return std::nullopt;
    }
    SparseMat d = build_total_differential(a, c.degree - 1).total();
    auto x = solve(d, flatten_cochain(c));
    if (!x) return std::nullopt;
    return unflatten_cochain(a.dim, a.dim, c.degree - 1, *x);
}

namespace {

// dim of the alpha-commuting subspace at degree q together with the rank of
// del_mumu restricted to it
std::pair<long, long> commutant_and_rank(const HomAlgebra& a, const Bimodule& reg, int q) {
    KernelResult comm = rational_kernel(build_del_mual(a, q, reg));
    SparseMat d = build_del_mumu(a, q, reg);
    SparseMat img(d.rows(), long(comm.basis.size()));
    for (long j = 0; j < long(comm.basis.size()); ++j) {
        std::vector<Rational> col = d.apply(comm.basis[j]);
        for (long r = 0; r < d.rows(); ++r)
            if (!col[r].is_zero()) img.add(r, j, col[r]);
    }
    return {long(comm.basis.size()), rank_of(img)};
}

}  // namespace

std::vector<long> classical_subcomplex_dims(const HomAlgebra& a, int max_degree) {
    Bimodule reg = Bimodule::regular(a);
    std::vector<long> dims;
    long prev_rank = 0;
    for (int q = 1; q <= max_degree; ++q) {
        auto [kdim, rank] = commutant_and_rank(a, reg, q);
        dims.push_back(kdim - rank - prev_rank);
        prev_rank = rank;
    }
    return dims;
}

long classical_subcomplex_dim(const HomAlgebra& a, int n) {
    Bimodule reg = Bimodule::regular(a);
    auto [kdim, rank] = commutant_and_rank(a, reg, n);
    long below = n >= 2 ? commutant_and_rank(a, reg, n - 1).second : 0;
    return kdim - rank - below;
}

MultiMap phi_from_psi(const HomAlgebra& a, const MultiMap& psi) {
    int n = psi.arity_in() + 1;
    if (n < 2) throw StructureError("phi_from_psi: psi must have arity >= 1");
    auto ainv = invert_linear(a.alpha);
    if (!ainv) throw MathError("phi_from_psi: alpha is not invertible");
    MultiMap apow = a.alpha.pow(n - 2);
    MultiMap aipsi = psi.then(*ainv);
    MultiMap t1 = a.mu.compose_full({&apow, &aipsi});
    MultiMap t2 = a.mu.compose_full({&aipsi, &apow});
    if (n % 2 != 0) t2 *= Rational(-1);
    return t1 + t2;
}

std::optional<CochainPair> cocycle_from_psi(const HomAlgebra& a, const MultiMap& psi,
                                            std::vector<Rational>* defect) {
    int n = psi.arity_in() + 1;
    MultiMap phi = phi_from_psi(a, psi);
    Bimodule reg = Bimodule::regular(a);
    CochainPair c{n, phi, psi};
    std::vector<Rational> flat = flatten_cochain(c);
    long phi_sz = long(pow_dim(a.dim, n)) * a.dim;
    std::vector<Rational> phi_v(flat.begin(), flat.begin() + phi_sz);
    std::vector<Rational> psi_v(flat.begin() + phi_sz, flat.end());
    std::vector<Rational> lhs = build_del_alal(a, n, reg).apply(psi_v);
    std::vector<Rational> rhs = build_del_mual(a, n, reg).apply(phi_v);
    bool ok = true;
    std::vector<Rational> diff(lhs.size());
    for (size_t i = 0; i < lhs.size(); ++i) {
        diff[i] = lhs[i] - rhs[i];
        if (!diff[i].is_zero()) ok = false;
    }
    if (!ok) {
        if (defect) *defect = std::move(diff);
        return std::nullopt;
    }
    return c;
}

MorphismComplex::MorphismComplex(HomAlgebra a, MultiMap gamma) : a_(std::move(a)), gamma_(std::move(gamma)) {
    a_.check_shape();
    if (!a_.alpha_is_identity()) throw MathError("morphism complex requires an associative algebra (alpha = id)");
    if (gamma_.arity_in() != 1 || gamma_.arity_out() != 1 || gamma_.dim_in() != a_.dim)
        throw StructureError("gamma must be a linear endomap");
    Violation w;
    if (!is_algebra_morphism(a_, gamma_, &w))
        throw MathError("morphism complex: gamma is not an algebra morphism: " + w.detail);
    const MultiMap id = MultiMap::identity(a_.dim);
    MultiMap lt = a_.mu.compose_full({&gamma_, &id});
    MultiMap rt = a_.mu.compose_full({&id, &gamma_});
    twisted_.dim = a_.dim;
    twisted_.alpha_mod = id;
    twisted_.left = ActionTable::from_multimap(lt, 0);
    twisted_.right = ActionTable::from_multimap(rt, 1);
}

long MorphismComplex::dim(int n) const { return cochain_dim(a_.dim, a_.dim, n); }

SparseMat MorphismComplex::build_del_mu(int n) const {
    Bimodule reg = Bimodule::regular(a_);
    SparseMat phi_blk = hochschild_block(a_, reg, n, 0);
    SparseMat t(dim(n + 1), dim(n));
    t.add_scaled_block(phi_blk, 0, 0, Rational(1));
    if (n >= 2) {
        SparseMat psi_blk = hochschild_block(a_, twisted_, n - 1, 0);
        t.add_scaled_block(psi_blk, phi_blk.rows(), phi_blk.cols(), Rational(-1));
    }
    return t;
}

SparseMat MorphismComplex::build_del_gamma(int n) const {
    SparseMat g = commutator_block(gamma_, gamma_, n, a_.dim);
    SparseMat t(dim(n + 1), dim(n));
    long rows_phi = long(pow_dim(a_.dim, n + 1)) * a_.dim;
    t.add_scaled_block(g, rows_phi, 0, Rational(1));
    return t;
}

SparseMat MorphismComplex::total(int n) const {
    SparseMat t = build_del_mu(n);
    t.add_scaled_block(build_del_gamma(n), 0, 0, Rational(1));
    return t;
}

long MorphismComplex::cohomology_dim(int n) const {
    long prev = n >= 2 ? rank_of(total(n - 1)) : 0;
    SparseMat d = total(n);
    return d.cols() - rank_of(d) - prev;
}

long MorphismComplex::cohomology_dim_two_stage(int n) const {
    auto h1_dim = [&](int k) -> long {
        if (k < 1) return 0;
        long prev = k >= 2 ? rank_of(build_del_mu(k - 1)) : 0;
        SparseMat d = build_del_mu(k);
        return d.cols() - rank_of(d) - prev;
    };
    // rank of the differential induced by del_gamma on H(C, del_mu) at degree
    // k: rank([del_gamma*ker | del_mu columns]) - rank(del_mu), since the
    // columns of del_mu at k generate the image inside degree k+1
    auto induced_rank = [&](int k) -> long {
        if (k < 1) return 0;
        KernelResult ker = rational_kernel(build_del_mu(k));
        SparseMat dg = build_del_gamma(k);
        SparseMat dmu = build_del_mu(k);
        SparseMat stacked(dim(k + 1), long(ker.basis.size()) + dim(k));
        for (long j = 0; j < long(ker.basis.size()); ++j) {
            std::vector<Rational> col = dg.apply(ker.basis[j]);
            for (long r = 0; r < long(col.size()); ++r)
                if (!col[r].is_zero()) stacked.add(r, j, col[r]);
        }
        stacked.add_scaled_block(dmu, 0, long(ker.basis.size()), Rational(1));
        return rank_of(stacked) - rank_of(dmu);
    };
    return h1_dim(n) - induced_rank(n) - induced_rank(n - 1);
}

// The correction term enters with the sign (-1)^{i+1}, which is what makes
// Phi intertwine the block conventions used here (checked by the chain-map
// identity tests).
CochainPair chain_map_phi(const HomAlgebra& a_assoc, const MultiMap& gamma, const CochainPair& c) {
    int n = c.degree;
    MultiMap gp1 = gamma.pow(n - 1);
    CochainPair out;
    out.degree = n;
    out.phi = c.phi.then(gp1);
    if (c.psi) {
        MultiMap gp2 = gamma.pow(n - 2);
        for (int i = 1; i <= n - 1; ++i) {
            MultiMap term = c.psi->compose_at(a_assoc.mu, i - 1).then(gp2);
            if (i % 2 == 0) term *= Rational(-1);
            out.phi += term;
        }
        out.psi = c.psi->then(gp2);
    }
    return out;
}

CochainPair inverse_phi(const HomAlgebra& a_assoc, const MultiMap& gamma, const CochainPair& c) {
    int n = c.degree;
    auto ginv = invert_linear(gamma);
    if (!ginv) throw MathError("inverse_phi: gamma is not invertible");
    CochainPair out;
    out.degree = n;
    out.phi = c.phi.then(ginv->pow(n - 1));
    if (c.psi) {
        MultiMap gpsi = c.psi->then(ginv->pow(n - 1));
        for (int i = 1; i <= n - 1; ++i) {
            MultiMap term = gpsi.compose_at(a_assoc.mu, i - 1);
            if (i % 2 != 0) term *= Rational(-1);
            out.phi += term;
        }
        out.psi = c.psi->then(ginv->pow(n - 2));
    }
    return out;
}

SparseMat chain_map_phi_matrix(const HomAlgebra& a_assoc, const MultiMap& gamma, int n) {
    long d = a_assoc.dim;
    long dimn = cochain_dim(d, d, n);
    SparseMat m(dimn, dimn);
    for (long col = 0; col < dimn; ++col) {
        std::vector<Rational> e(dimn);
        e[col] = Rational(1);
        CochainPair c = unflatten_cochain(d, d, n, e);
        std::vector<Rational> img = flatten_cochain(chain_map_phi(a_assoc, gamma, c));
        for (long r = 0; r < dimn; ++r)
            if (!img[r].is_zero()) m.add(r, col, img[r]);
    }
    return m;
}

CochainPair yau_cocycle_transfer(const HomAlgebra& a, const MultiMap& gamma, const CochainPair& c) {
    int n = c.degree;
    MultiMap gn = gamma;
    for (int s = 2; s <= n; ++s) gn = gn.tensor(gamma);
    if (!(c.phi.then(gamma) == c.phi.compose_full({&gn})))
        throw MathError("yau_cocycle_transfer: phi does not commute with gamma");
    if (c.psi) {
        MultiMap gn1 = gamma;
        for (int s = 2; s <= n - 1; ++s) gn1 = gn1.tensor(gamma);
        if (!(c.psi->then(gamma) == c.psi->compose_full({&gn1})))
            throw MathError("yau_cocycle_transfer: psi does not commute with gamma");
    }
    if (!is_cocycle(a, c)) throw MathError("yau_cocycle_transfer: input is not a cocycle");
    HomAlgebra twist = yau_twist(a, gamma);
    MultiMap gp = gamma.pow(n - 1);
    CochainPair out;
    out.degree = n;
    out.phi = c.phi.then(gp);
    if (c.psi) out.psi = c.psi->then(gp);
    if (!is_cocycle(twist, out))
        throw MathError("yau_cocycle_transfer: transferred pair failed the cocycle check");
    return out;
}

}  // namespace homcoho
