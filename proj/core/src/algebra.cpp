#include "homcoho/algebra.hpp"

#include <sstream>

namespace homcoho {

void HomAlgebra::check_shape() const {
    if (dim <= 0) throw StructureError("algebra dimension must be positive");
    if (mu.arity_in() != 2 || mu.arity_out() != 1 || mu.dim_in() != dim || mu.dim_out() != dim)
        throw StructureError("mu must be a (2 -> 1) map on the algebra");
    if (alpha.arity_in() != 1 || alpha.arity_out() != 1 || alpha.dim_in() != dim || alpha.dim_out() != dim)
        throw StructureError("alpha must be a (1 -> 1) map on the algebra");
    if (!basis.empty() && long(basis.size()) != dim)
        throw StructureError("basis label count does not match dim");
    if (unit && long(unit->size()) != dim)
        throw StructureError("unit vector length does not match dim");
}

namespace {

std::string format_out(const std::vector<std::pair<TupleKey, Rational>>& comps) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [out, v] : comps) {
        if (!first) os << " + ";
        os << v.str() << "*[" << out << "]";
        first = false;
    }
    return os.str();
}

MultiMap unit_map(const HomAlgebra& a) {
    MultiMap u(0, 1, a.dim, a.dim);
    for (long i = 0; i < a.dim; ++i) u.add(TupleKey(0), TupleKey(i), (*a.unit)[i]);
    return u;
}

}  // namespace

void collect_violations(ValidationReport& report, const MultiMap& defect, const std::string& axiom) {
    TupleKey cur = 0;
    bool have = false;
    std::vector<std::pair<TupleKey, Rational>> comps;
    auto flush = [&]() {
        if (!have) return;
        Violation v;
        v.axiom = axiom;
        v.where = unpack_tuple(cur, defect.dim_in(), defect.arity_in());
        v.detail = "defect " + format_out(comps);
        report.violations.push_back(std::move(v));
        comps.clear();
    };
    for (const auto& [key, v] : defect.entries()) {
        if (!have || key.first != cur) {
            flush();
            cur = key.first;
            have = true;
        }
        comps.emplace_back(key.second, v);
    }
    flush();
}

ValidationReport validate_hom_algebra(const HomAlgebra& a) {
    a.check_shape();
    ValidationReport rep;
    const MultiMap id = MultiMap::identity(a.dim);

    MultiMap homassoc = a.mu.compose_full({&a.alpha, &a.mu}) - a.mu.compose_full({&a.mu, &a.alpha});
    collect_violations(rep, homassoc, "hom-associativity");

    MultiMap mult = a.mu.then(a.alpha) - a.mu.compose_full({&a.alpha, &a.alpha});
    collect_violations(rep, mult, "multiplicativity");

    if (a.unit) {
        MultiMap u = unit_map(a);
        collect_violations(rep, a.mu.compose_full({&u, &id}) - a.alpha, "left unit");
        collect_violations(rep, a.mu.compose_full({&id, &u}) - a.alpha, "right unit");
        collect_violations(rep, u.then(a.alpha) - u, "alpha fixes unit");
    }
    return rep;
}

bool is_algebra_morphism(const HomAlgebra& a, const MultiMap& gamma, Violation* witness) {
    MultiMap defect = a.mu.compose_full({&gamma, &gamma}) - a.mu.then(gamma);
    if (defect.is_zero()) return true;
    if (witness) {
        ValidationReport rep;
        collect_violations(rep, defect, "gamma is not an algebra morphism");
        *witness = rep.violations.front();
    }
    return false;
}

HomAlgebra yau_twist(const HomAlgebra& a, const MultiMap& gamma) {
    a.check_shape();
    if (gamma.arity_in() != 1 || gamma.arity_out() != 1 || gamma.dim_in() != a.dim || gamma.dim_out() != a.dim)
        throw StructureError("gamma must be a linear endomap of the algebra");
    Violation w;
    if (!is_algebra_morphism(a, gamma, &w))
        throw MathError("yau_twist: " + w.axiom + " at (" + std::to_string(w.where[0]) + "," +
                        std::to_string(w.where[1]) + "): " + w.detail);
    MultiMap comm = a.alpha.then(gamma) - gamma.then(a.alpha);
    if (!comm.is_zero()) {
        long where = long(comm.entries().begin()->first.first);
        throw MathError("yau_twist: gamma does not commute with alpha at basis vector " +
                        std::to_string(where));
    }
    HomAlgebra t;
    t.dim = a.dim;
    t.basis = a.basis;
    t.mu = a.mu.then(gamma);
    t.alpha = a.alpha.then(gamma);
    if (a.unit) {
        MultiMap u = unit_map(a);
        if (u.then(gamma) == u) t.unit = a.unit;
    }
    return t;
}

bool is_derivation(const HomAlgebra& a, const MultiMap& f) {
    const MultiMap id = MultiMap::identity(a.dim);
    MultiMap defect = a.mu.then(f) - a.mu.compose_full({&f, &id}) - a.mu.compose_full({&id, &f});
    return defect.is_zero();
}

bool is_alpha_derivation(const HomAlgebra& a, const MultiMap& f) {
    MultiMap defect = a.mu.then(f) - a.mu.compose_full({&f, &a.alpha}) - a.mu.compose_full({&a.alpha, &f});
    return defect.is_zero();
}

bool is_conjugate_alpha_derivation(const HomAlgebra& a, const MultiMap& f) {
    auto ainv = invert_linear(a.alpha);
    if (!ainv) throw MathError("conjugate alpha-derivation: alpha is not invertible");
    MultiMap g = a.alpha.then(f).then(*ainv);  // alpha^{-1} o f o alpha
    MultiMap defect = a.mu.then(f) - a.mu.compose_full({&a.alpha, &g}) - a.mu.compose_full({&g, &a.alpha});
    return defect.is_zero();
}

MultiMap iterated_mu_alpha(const MultiMap& mu, const MultiMap& alpha, int n) {
    if (n < 1) throw StructureError("iterated_mu_alpha: n must be >= 1");
    MultiMap cur = MultiMap::identity(mu.dim_in());
    MultiMap apow = MultiMap::identity(mu.dim_in());  // alpha^{k-1} while cur = mu^k
    for (int k = 1; k < n; ++k) {
        cur = mu.compose_full({&cur, &apow});
        apow = apow.then(alpha);
    }
    return cur;
}

MultiMap iterated_mu_alpha(const HomAlgebra& a, int n) { return iterated_mu_alpha(a.mu, a.alpha, n); }

MultiMap iterated_delta_beta(const MultiMap& delta, const MultiMap& beta, int n) {
    if (n < 1) throw StructureError("iterated_delta_beta: n must be >= 1");
    MultiMap cur = MultiMap::identity(delta.dim_in());
    for (int k = 1; k < n; ++k) {
        MultiMap head = delta;  // Delta (x) beta^{(k-1)} applied to the first leg
        for (int i = 1; i < k; ++i) head = head.tensor(beta);
        cur = cur.then(head);
    }
    return cur;
}

void ActionTable::add(long a, long m, long m2, const Rational& c) {
    if (c.is_zero()) return;
    at[std::uint64_t(a) * std::uint64_t(dim_mod) + std::uint64_t(m)].emplace_back(m2, c);
}

const std::vector<std::pair<long, Rational>>* ActionTable::find(long a, long m) const {
    auto it = at.find(std::uint64_t(a) * std::uint64_t(dim_mod) + std::uint64_t(m));
    return it == at.end() ? nullptr : &it->second;
}

ActionTable ActionTable::from_multimap(const MultiMap& action, int alg_slot) {
    if (action.arity_in() != 2 || action.arity_out() != 1)
        throw StructureError("ActionTable: action must be (2 -> 1)");
    ActionTable t;
    t.dim_alg = action.dim_in();
    t.dim_mod = action.dim_in();
    for (const auto& [key, v] : action.entries()) {
        auto in = unpack_tuple(key.first, action.dim_in(), 2);
        long a = in[alg_slot], m = in[1 - alg_slot];
        t.add(a, m, long(key.second), v);
    }
    return t;
}

Bimodule Bimodule::regular(const HomAlgebra& a) {
    Bimodule m;
    m.dim = a.dim;
    m.alpha_mod = a.alpha;
    m.left = ActionTable::from_multimap(a.mu, 0);
    m.right = ActionTable::from_multimap(a.mu, 1);
    return m;
}

namespace {

using ModVec = std::map<long, Rational>;

void mv_add(ModVec& v, long i, const Rational& c) {
    auto it = v.find(i);
    if (it == v.end()) {
        if (!c.is_zero()) v.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

ModVec act(const ActionTable& t, long a, const ModVec& v) {
    ModVec out;
    for (const auto& [m, c] : v)
        if (const auto* row = t.find(a, m))
            for (const auto& [m2, c2] : *row) mv_add(out, m2, c * c2);
    return out;
}

ModVec apply_lin(const MultiMap& f, const ModVec& v) {
    ModVec out;
    auto idx = f.index_by_in();
    for (const auto& [m, c] : v) {
        auto it = idx.find(TupleKey(m));
        if (it == idx.end()) continue;
        for (const auto& [m2, c2] : it->second) mv_add(out, long(m2), c * c2);
    }
    return out;
}

ModVec mv_sub(ModVec a, const ModVec& b) {
    for (const auto& [i, c] : b) mv_add(a, i, -c);
    return a;
}

}  // namespace

ValidationReport validate_bimodule(const HomAlgebra& alg, const Bimodule& m) {
    alg.check_shape();
    ValidationReport rep;
    auto mu_at = [&](long i, long j) {
        ModVec out;
        for (long k = 0; k < alg.dim; ++k) {
            Rational c = alg.mu.coeff({i, j}, {k});
            if (!c.is_zero()) out.emplace(k, c);
        }
        return out;
    };
    auto alpha_alg = [&](long i) {
        ModVec out;
        for (long k = 0; k < alg.dim; ++k) {
            Rational c = alg.alpha.coeff(TupleKey(i), TupleKey(k));
            if (!c.is_zero()) out.emplace(k, c);
        }
        return out;
    };
    auto act_vec_left = [&](const ModVec& as, const ModVec& v) {
        ModVec out;
        for (const auto& [a, c] : as)
            for (const auto& [i, w] : act(m.left, a, v)) mv_add(out, i, c * w);
        return out;
    };
    auto act_vec_right = [&](const ModVec& v, const ModVec& as) {
        ModVec out;
        for (const auto& [a, c] : as)
            for (const auto& [i, w] : act(m.right, a, v)) mv_add(out, i, c * w);
        return out;
    };

    for (long a = 0; a < alg.dim; ++a)
        for (long b = 0; b < alg.dim; ++b)
            for (long v = 0; v < m.dim; ++v) {
                ModVec ev{{v, Rational(1)}};
                ModVec beta_v = apply_lin(m.alpha_mod, ev);
                // (ab) . beta(v) = alpha(a) . (b . v)
                ModVec lhs = act_vec_left(mu_at(a, b), beta_v);
                ModVec rhs = act_vec_left(alpha_alg(a), act(m.left, b, ev));
                if (!mv_sub(lhs, rhs).empty())
                    rep.violations.push_back({"left module law", {a, b, v}, ""});
                // beta(v) . (ab) = (v . a) . alpha(b)
                lhs = act_vec_right(beta_v, mu_at(a, b));
                rhs = act_vec_right(act(m.right, a, ev), alpha_alg(b));
                if (!mv_sub(lhs, rhs).empty())
                    rep.violations.push_back({"right module law", {a, b, v}, ""});
                // alpha(a) . (v . b) = (a . v) . alpha(b)
                lhs = act_vec_left(alpha_alg(a), act(m.right, b, ev));
                rhs = act_vec_right(act(m.left, a, ev), alpha_alg(b));
                if (!mv_sub(lhs, rhs).empty())
                    rep.violations.push_back({"bimodule compatibility", {a, b, v}, ""});
            }
    for (long a = 0; a < alg.dim; ++a)
        for (long v = 0; v < m.dim; ++v) {
            ModVec ev{{v, Rational(1)}};
            // beta(a . v) = alpha(a) . beta(v)
            ModVec lhs = apply_lin(m.alpha_mod, act(m.left, a, ev));
            ModVec rhs = act_vec_left(alpha_alg(a), apply_lin(m.alpha_mod, ev));
            if (!mv_sub(lhs, rhs).empty())
                rep.violations.push_back({"left multiplicativity", {a, v}, ""});
            lhs = apply_lin(m.alpha_mod, act(m.right, a, ev));
            rhs = act_vec_right(apply_lin(m.alpha_mod, ev), alpha_alg(a));
            if (!mv_sub(lhs, rhs).empty())
                rep.violations.push_back({"right multiplicativity", {a, v}, ""});
        }
    return rep;
}

}  // namespace homcoho
