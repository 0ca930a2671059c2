#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "q3fold/rational.hpp"

namespace q3fold {

/// Dense row-major matrix over an exact scalar ring.
template <typename T>
class Mat {
public:
    Mat(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    }

    static Mat identity(int n, const T& like) {
        Mat m(n, n, scalar_traits<T>::zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar_traits<T>::one(like);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: product shape mismatch");
        const T z = scalar_traits<T>::zero(a.e_.empty() ? b.e_.at(0) : a.e_[0]);
        Mat r(a.rows_, b.cols_, z);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                for (int j = 0; j < b.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Mat transposed() const {
        if (e_.empty()) throw std::invalid_argument("Mat::transposed: empty matrix");
        Mat r(cols_, rows_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> e_;
};

namespace detail {

template <typename T>
T det_cofactor(const Mat<T>& m) {
    const int n = m.rows();
    const T z = scalar_traits<T>::zero(m.at(0, 0));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    T acc = z;
    // Expand along the first row.
    for (int j = 0; j < n; ++j) {
        if (scalar_traits<T>::is_zero(m.at(0, j))) continue;
        Mat<T> minor(n - 1, n - 1, z);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        T term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

/// Fraction-free Bareiss elimination with row pivoting; exact over any field
/// (and over integral domains, where the divisions are exact by construction).
template <typename T>
T det_bareiss(Mat<T> m) {
    const int n = m.rows();
    const T z = scalar_traits<T>::zero(m.at(0, 0));
    T prev = scalar_traits<T>::one(m.at(0, 0));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (scalar_traits<T>::is_zero(m.at(k, k))) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!scalar_traits<T>::is_zero(m.at(r, k))) { pivot = r; break; }
            }
            if (pivot < 0) return z;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = z;
        }
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace detail

/// Exact determinant, n <= 6: cofactor expansion up to 4x4, fraction-free
/// Bareiss for 5x5 and 6x6.
template <typename T>
T mat_det(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: non-square input");
    if (m.rows() == 0 || m.rows() > 6) throw std::invalid_argument("mat_det: size out of range");
    if (m.rows() <= 4) return detail::det_cofactor(m);
    if constexpr (scalar_traits<T>::is_field) {
        return detail::det_bareiss(m);
    } else {
        return det_laplace(m);
    }
}

/// Laplace expansion with memoization over column subsets. Works over any
/// commutative ring (no divisions); used for determinants with polynomial
/// entries where elimination is unavailable.
template <typename T>
T det_laplace(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_laplace: non-square input");
    const int n = m.rows();
    if (n == 0) throw std::invalid_argument("det_laplace: empty");
    const T z = scalar_traits<T>::zero(m.at(0, 0));
    // dp over subsets of columns consumed by the first popcount(mask) rows.
    std::vector<T> dp(static_cast<std::size_t>(1) << n, z);
    dp[0] = scalar_traits<T>::one(m.at(0, 0));
    std::vector<bool> seen(dp.size(), false);
    seen[0] = true;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!seen[mask] || scalar_traits<T>::is_zero(dp[mask])) continue;
        int row = __builtin_popcount(mask);
        if (row == n) continue;
        int parity = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) { ++parity; continue; }
            if (!scalar_traits<T>::is_zero(m.at(row, j))) {
                T term = dp[mask] * m.at(row, j);
                std::uint32_t next = mask | (1u << j);
                if (parity % 2 == 1) term = -term;
                dp[next] = seen[next] ? dp[next] + term : term;
                seen[next] = true;
            }
        }
    }
    std::uint32_t full = (1u << n) - 1;
    return seen[full] ? dp[full] : z;
}

/// Row echelon rank over a field.
template <typename T>
int mat_rank(Mat<T> m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!scalar_traits<T>::is_zero(m.at(r, col))) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        const T inv_head = scalar_traits<T>::one(m.at(rank, col)) / m.at(rank, col);
        for (int c = col; c < cols; ++c) m.at(rank, c) = m.at(rank, c) * inv_head;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || scalar_traits<T>::is_zero(m.at(r, col))) continue;
            const T f = m.at(r, col);
            for (int c = col; c < cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right kernel {x : Mx = 0} over a field.
template <typename T>
std::vector<std::vector<T>> mat_kernel(Mat<T> m) {
    const int rows = m.rows(), cols = m.cols();
    const T z = scalar_traits<T>::zero(m.at(0, 0));
    const T one = scalar_traits<T>::one(m.at(0, 0));
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!scalar_traits<T>::is_zero(m.at(r, col))) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        const T inv_head = one / m.at(rank, col);
        for (int c = col; c < cols; ++c) m.at(rank, c) = m.at(rank, c) * inv_head;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || scalar_traits<T>::is_zero(m.at(r, col))) continue;
            const T f = m.at(r, col);
            for (int c = col; c < cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<T> v(static_cast<std::size_t>(cols), z);
        v[static_cast<std::size_t>(free)] = one;
        for (int r = 0; r < rank; ++r) {
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = -m.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the left kernel {y : yM = 0} over a field.
template <typename T>
std::vector<std::vector<T>> mat_left_kernel(const Mat<T>& m) {
    return mat_kernel(m.transposed());
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix by exact congruence
/// diagonalization.
inline Inertia mat_inertia(Mat<Rat> m) {
    if (!m.is_symmetric()) throw std::invalid_argument("mat_inertia: not symmetric");
    const int n = m.rows();
    Inertia sig;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        // Find an unprocessed index with nonzero diagonal; failing that,
        // create one with the congruence e_i <- e_i + e_j.
        int k = -1;
        for (int i = 0; i < n; ++i) {
            if (!done[static_cast<std::size_t>(i)] && !m.at(i, i).is_zero()) { k = i; break; }
        }
        if (k < 0) {
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[static_cast<std::size_t>(i)]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[static_cast<std::size_t>(j)]) continue;
                    if (!m.at(i, j).is_zero()) { a = i; b = j; break; }
                }
            }
            if (a < 0) break;  // all-zero residual block
            for (int c = 0; c < n; ++c) m.at(a, c) += m.at(b, c);
            for (int r = 0; r < n; ++r) m.at(r, a) += m.at(r, b);
            k = a;
        }
        done[static_cast<std::size_t>(k)] = true;
        const Rat d = m.at(k, k);
        if (d > 0) ++sig.positive; else ++sig.negative;
        for (int r = 0; r < n; ++r) {
            if (r == k || done[static_cast<std::size_t>(r)]) continue;
            const Rat f = m.at(r, k) / d;
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) m.at(r, c) -= f * m.at(k, c);
            for (int c = 0; c < n; ++c) m.at(c, r) -= f * m.at(c, k);
        }
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

}  // namespace q3fold
