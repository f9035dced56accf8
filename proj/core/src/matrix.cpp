#include "homcoho/matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace homcoho {

void SparseMat::add(long r, long c, const Rational& v) {
    if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_) throw StructureError("matrix index out of range");
    if (v.is_zero()) return;
    auto& row = rows_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

void SparseMat::add_scaled_block(const SparseMat& b, long row_off, long col_off, const Rational& s) {
    for (long r = 0; r < b.rows(); ++r)
        for (const auto& [c, v] : b.row(r)) add(row_off + r, col_off + c, s * v);
}

bool SparseMat::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

SparseMat SparseMat::multiply(const SparseMat& rhs) const {
    if (ncols_ != rhs.nrows_) throw StructureError("matrix product shape mismatch");
    SparseMat out(nrows_, rhs.ncols_);
    for (long r = 0; r < nrows_; ++r)
        for (const auto& [k, v] : rows_[r])
            for (const auto& [c, w] : rhs.rows_[k]) out.add(r, c, v * w);
    return out;
}

std::vector<Rational> SparseMat::apply(const std::vector<Rational>& x) const {
    if (long(x.size()) != ncols_) throw StructureError("matrix apply shape mismatch");
    std::vector<Rational> y(nrows_);
    for (long r = 0; r < nrows_; ++r)
        for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
    return y;
}

namespace {

using ZRow = std::vector<std::pair<long, Integer>>;

void normalize_content(ZRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

ZRow to_integer_row(const std::map<long, Rational>& row) {
    Integer l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    ZRow z;
    z.reserve(row.size());
    for (const auto& [c, v] : row) z.emplace_back(c, v.numerator() * (l / v.denominator()));
    normalize_content(z);
    return z;
}

// row <- (a*row + b*other), sorted merge; entries at the shared leading
// column cancel by construction.
ZRow combine(const ZRow& row, const Integer& a, const ZRow& other, const Integer& b) {
    ZRow out;
    out.reserve(row.size() + other.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, b * other[j].second);
            ++j;
        } else {
            Integer v = a * row[i].second + b * other[j].second;
            if (v != 0) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    normalize_content(out);
    return out;
}

struct Eliminator {
    std::vector<ZRow> pivots;
    std::unordered_map<long, size_t> by_col;

    // Returns the fully reduced row (empty if dependent); inserts a new pivot
    // otherwise.
    bool insert(ZRow row) {
        while (!row.empty()) {
            long lead = row.front().first;
            auto it = by_col.find(lead);
            if (it == by_col.end()) {
                by_col.emplace(lead, pivots.size());
                pivots.push_back(std::move(row));
                return true;
            }
            const ZRow& p = pivots[it->second];
            row = combine(row, p.front().second, p, -row.front().second);
        }
        return false;
    }
};

}  // namespace

EchelonForm echelon(const SparseMat& m, bool rref) {
    Eliminator e;
    for (long r = 0; r < m.rows(); ++r) {
        if (m.row(r).empty()) continue;
        e.insert(to_integer_row(m.row(r)));
    }

    // order pivot rows by pivot column
    std::vector<size_t> order(e.pivots.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return e.pivots[a].front().first < e.pivots[b].front().first;
    });

    EchelonForm f;
    f.ncols = m.cols();
    f.rank = long(e.pivots.size());
    f.pivot_cols.reserve(order.size());
    f.rows.reserve(order.size());
    for (size_t i : order) {
        f.pivot_cols.push_back(e.pivots[i].front().first);
        SparseVecR row;
        row.reserve(e.pivots[i].size());
        for (const auto& [c, v] : e.pivots[i]) row.emplace_back(c, Rational(v));
        f.rows.push_back(std::move(row));
    }

    if (rref) {
        std::unordered_map<long, size_t> pivot_of_col;
        for (size_t i = 0; i < f.pivot_cols.size(); ++i) pivot_of_col.emplace(f.pivot_cols[i], i);
        for (size_t i = f.rows.size(); i-- > 0;) {
            // scale to leading 1, then clear entries over later pivots
            Rational lead = f.rows[i].front().second;
            for (auto& [c, v] : f.rows[i]) v /= lead;
            std::map<long, Rational> acc(f.rows[i].begin(), f.rows[i].end());
            for (const auto& [c, v] : f.rows[i]) {
                if (c == f.pivot_cols[i]) continue;
                auto it = pivot_of_col.find(c);
                if (it == pivot_of_col.end() || it->second <= i) continue;
                auto fit = acc.find(c);
                if (fit == acc.end() || fit->second.is_zero()) continue;
                Rational factor = fit->second;
                for (const auto& [cc, vv] : f.rows[it->second]) {
                    auto a = acc.find(cc);
                    if (a == acc.end()) {
                        Rational nv = -(factor * vv);
                        if (!nv.is_zero()) acc.emplace(cc, nv);
                    } else {
                        a->second -= factor * vv;
                        if (a->second.is_zero()) acc.erase(a);
                    }
                }
            }
            f.rows[i].assign(acc.begin(), acc.end());
        }
    }
    return f;
}

long rank_of(const SparseMat& m) { return echelon(m, false).rank; }

KernelResult rational_kernel(const SparseMat& m) {
    EchelonForm f = echelon(m, true);
    KernelResult k;
    k.rank = f.rank;
    std::vector<long> pivot_row_of_col(m.cols(), -1);
    for (size_t i = 0; i < f.pivot_cols.size(); ++i) pivot_row_of_col[f.pivot_cols[i]] = long(i);
    for (long c = 0; c < m.cols(); ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<Rational> x(m.cols());
        x[c] = Rational(1);
        for (size_t i = 0; i < f.rows.size(); ++i)
            for (const auto& [cc, vv] : f.rows[i])
                if (cc == c) x[f.pivot_cols[i]] = -vv;
        k.basis.push_back(std::move(x));
    }
    return k;
}

std::optional<std::vector<Rational>> solve(const SparseMat& a, const std::vector<Rational>& b) {
    if (long(b.size()) != a.rows()) throw StructureError("solve: rhs length mismatch");
    SparseMat aug(a.rows(), a.cols() + 1);
    for (long r = 0; r < a.rows(); ++r) {
        for (const auto& [c, v] : a.row(r)) aug.add(r, c, v);
        aug.add(r, a.cols(), b[r]);
    }
    EchelonForm f = echelon(aug, true);
    std::vector<Rational> x(a.cols());
    for (size_t i = 0; i < f.pivot_cols.size(); ++i) {
        if (f.pivot_cols[i] >= a.cols()) return std::nullopt;  // pivot in the rhs column
        for (const auto& [c, v] : f.rows[i])
            if (c == a.cols()) x[f.pivot_cols[i]] = v;
    }
    return x;
}

}  // namespace homcoho
