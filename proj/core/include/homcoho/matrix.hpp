#pragma once

#include <map>
#include <optional>
#include <vector>

#include "homcoho/rational.hpp"

namespace homcoho {

using SparseVecR = std::vector<std::pair<long, Rational>>;  // sorted by index

// Row-major sparse matrix over Rational.
class SparseMat {
public:
    SparseMat() : nrows_(0), ncols_(0) {}
    SparseMat(long rows, long cols) : nrows_(rows), ncols_(cols), rows_(rows) {}

    long rows() const { return nrows_; }
    long cols() const { return ncols_; }

    void add(long r, long c, const Rational& v);
    void add_scaled_block(const SparseMat& b, long row_off, long col_off, const Rational& s);

    const std::map<long, Rational>& row(long r) const { return rows_[r]; }
    bool is_zero() const;
    std::size_t nnz() const;

    SparseMat multiply(const SparseMat& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    long nrows_, ncols_;
    std::vector<std::map<long, Rational>> rows_;
};

struct EchelonForm {
    long ncols = 0;
    long rank = 0;
    std::vector<long> pivot_cols;    // ascending
    std::vector<SparseVecR> rows;    // one per pivot; reduced echelon (leading 1) if rref
};

// Exact row echelon form.  Deterministic: rows are taken in input order and
// each reduces against earlier pivots by leading column; the reduced form
// (rref = true) is the canonical RREF of the matrix.
EchelonForm echelon(const SparseMat& m, bool rref);

long rank_of(const SparseMat& m);

struct KernelResult {
    long rank = 0;
    std::vector<std::vector<Rational>> basis;  // dense vectors of length ncols
};

// Exact rank and kernel basis (canonical: free columns ascending, each basis
// vector has 1 at its free column).
KernelResult rational_kernel(const SparseMat& m);

// Solve A x = b exactly; returns the particular solution with all free
// variables zero, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMat& a, const std::vector<Rational>& b);

}  // namespace homcoho
