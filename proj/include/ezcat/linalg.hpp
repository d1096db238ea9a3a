// Exact integer linear algebra: dense BigInt matrices, Smith normal form with
// unimodular transforms, integer kernels and exact linear solves.

#ifndef EZCAT_LINALG_HPP
#define EZCAT_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ezcat/bigint.hpp"

namespace ezcat {

class MatZ {
  public:
    MatZ() = default;
    MatZ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static MatZ identity(int n) {
        MatZ m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Row-major construction, mostly for tests.
    static MatZ from(int rows, int cols, const std::vector<long long>& entries) {
        if (static_cast<int>(entries.size()) != rows * cols)
            throw std::invalid_argument("MatZ::from: entry count mismatch");
        MatZ m(rows, cols);
        for (int i = 0; i < rows * cols; ++i) m.a_[i] = entries[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const MatZ& x, const MatZ& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend MatZ operator*(const MatZ& x, const MatZ& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("MatZ: dimension mismatch in product");
        MatZ r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    MatZ hcat(const MatZ& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("MatZ: row mismatch in hcat");
        MatZ r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    MatZ col(int j) const {
        MatZ r(rows_, 1);
        for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    void add_row(int dst, int src, const BigInt& f) {
        for (int k = 0; k < cols_; ++k) at(dst, k) += f * at(src, k);
    }
    void add_col(int dst, int src, const BigInt& f) {
        for (int k = 0; k < rows_; ++k) at(k, dst) += f * at(k, src);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + at(i, j).str();
            s += "\n";
        }
        return s;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct SmithResult {
    MatZ d;                       // p * input * q = d
    MatZ p, q;                    // unimodular transforms
    int rank = 0;                 // number of nonzero diagonal entries
    std::vector<BigInt> factors;  // positive invariant factors, d1 | d2 | ...
};

/// Smith normal form by elementary row/column operations, pivoting on the
/// entry of minimal absolute value; the pivot strictly shrinks each round, so
/// the reduction terminates, and divisibility fixups keep the factor chain.
inline SmithResult smith_normal_form(const MatZ& input) {
    SmithResult res;
    MatZ a = input;
    const int m = a.rows(), n = a.cols();
    res.p = MatZ::identity(m);
    res.q = MatZ::identity(n);
    int t = 0;
    const int nmin = m < n ? m : n;
    while (t < nmin) {
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (!a.at(i, j).is_zero() &&
                    (pi < 0 || a.at(i, j).abs() < a.at(pi, pj).abs())) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) {
            a.swap_rows(t, pi);
            res.p.swap_rows(t, pi);
        }
        if (pj != t) {
            a.swap_cols(t, pj);
            res.q.swap_cols(t, pj);
        }
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t).is_zero()) continue;
                BigInt f = -(a.at(i, t) / a.at(t, t));
                a.add_row(i, t, f);
                res.p.add_row(i, t, f);
                if (!a.at(i, t).is_zero()) {  // remainder is a smaller pivot
                    a.swap_rows(i, t);
                    res.p.swap_rows(i, t);
                    again = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j).is_zero()) continue;
                BigInt f = -(a.at(t, j) / a.at(t, t));
                a.add_col(j, t, f);
                res.q.add_col(j, t, f);
                if (!a.at(t, j).is_zero()) {
                    a.swap_cols(j, t);
                    res.q.swap_cols(j, t);
                    again = true;
                }
            }
        }
        bool fixed = false;
        for (int i = t + 1; i < m && !fixed; ++i)
            for (int j = t + 1; j < n && !fixed; ++j)
                if (!(a.at(i, j) % a.at(t, t)).is_zero()) {
                    a.add_row(t, i, 1);
                    res.p.add_row(t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;  // rerun reduction at the same position
        if (a.at(t, t).sign() < 0) {
            a.negate_row(t);
            res.p.negate_row(t);
        }
        ++t;
    }
    res.rank = t;
    for (int i = 0; i < t; ++i) res.factors.push_back(a.at(i, i));
    res.d = std::move(a);
    return res;
}

inline int rank(const MatZ& a) { return smith_normal_form(a).rank; }

/// Columns form a basis of the integer kernel lattice {x : a x = 0}.
inline MatZ kernel_basis(const MatZ& a) {
    SmithResult s = smith_normal_form(a);
    MatZ k(a.cols(), a.cols() - s.rank);
    for (int j = s.rank; j < a.cols(); ++j)
        for (int i = 0; i < a.cols(); ++i) k.at(i, j - s.rank) = s.q.at(i, j);
    return k;
}

/// Exact solve of a X = b over the integers (all columns simultaneously);
/// returns nullopt when some column has no integral solution.
inline std::optional<MatZ> solve(const MatZ& a, const MatZ& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    SmithResult s = smith_normal_form(a);
    MatZ pb = s.p * b;
    MatZ y(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < a.rows(); ++i) {
            if (i < s.rank) {
                BigInt qq, rr;
                BigInt::divmod(pb.at(i, c), s.d.at(i, i), qq, rr);
                if (!rr.is_zero()) return std::nullopt;
                y.at(i, c) = qq;
            } else if (!pb.at(i, c).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return s.q * y;
}

/// True iff the columns of a generate all of Z^rows.
inline bool coker_trivial(const MatZ& a) {
    SmithResult s = smith_normal_form(a);
    if (s.rank != a.rows()) return false;
    for (const auto& f : s.factors)
        if (!(f == BigInt(1))) return false;
    return true;
}

}  // namespace ezcat

#endif  // EZCAT_LINALG_HPP
