#pragma once

// Dense vectors and matrices over an arbitrary coefficient ring K.
//
// Everything here is written against scalar_traits<K>, so the same Gaussian
// elimination runs over exact Gaussian rationals, complex doubles and
// second-order jets. Pivots are chosen among invertible entries
// (value-part-invertible for jets); an elimination step that finds none
// reports a singular system instead of dividing blindly. Sizes in this
// project are tiny (ranks up to a few dozen), so no effort is spent on
// anything beyond the plain O(n^3) algorithms.

#include <optional>
#include <vector>

#include "kahlercone/scalar.hpp"

namespace kcone {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> vec_zero(int n) {
    return Vec<K>(static_cast<size_t>(n), scalar_traits<K>::zero());
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <class K>
Vec<K> vec_scale(const K& c, const Vec<K>& a) {
    Vec<K> r(a);
    for (auto& x : r) x = c * x;
    return r;
}

template <class K>
bool vec_is_zero(const Vec<K>& a) {
    for (const auto& x : a)
        if (!scalar_traits<K>::is_zero(x)) return false;
    return true;
}

template <class K>
double vec_mag(const Vec<K>& a) {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, scalar_traits<K>::mag(x));
    return m;
}

template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, scalar_traits<K>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar_traits<K>::one();
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    K& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator-() const {
        Mat m(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat m(x.r_, x.c_);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat m(x.r_, x.c_);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat m(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                const K& xik = x.at(i, k);
                if (scalar_traits<K>::is_zero(xik)) continue;
                for (int j = 0; j < y.c_; ++j) m.at(i, j) += xik * y.at(k, j);
            }
        return m;
    }
    friend Mat operator*(const K& c, const Mat& x) {
        Mat m(x.r_, x.c_);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = c * x.a_[i];
        return m;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    Vec<K> apply(const Vec<K>& v) const {
        Vec<K> r = vec_zero<K>(r_);
        for (int j = 0; j < c_; ++j) {
            if (scalar_traits<K>::is_zero(v[j])) continue;
            for (int i = 0; i < r_; ++i) r[i] += at(i, j) * v[j];
        }
        return r;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    Mat conj() const {
        Mat m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(i, j) = scalar_traits<K>::conj(at(i, j));
        return m;
    }
    Mat conj_transpose() const { return transpose().conj(); }

    Mat block(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Mat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m.at((int)i, (int)j) = at(rows[i], cols[j]);
        return m;
    }
    void set_block(const std::vector<int>& rows, const std::vector<int>& cols, const Mat& b) {
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) at(rows[i], cols[j]) = b.at((int)i, (int)j);
    }

    K trace() const {
        K t = scalar_traits<K>::zero();
        for (int i = 0; i < r_ && i < c_; ++i) t += at(i, i);
        return t;
    }

    double max_mag() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, scalar_traits<K>::mag(x));
        return m;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!scalar_traits<K>::is_zero(x)) return false;
        return true;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<K> a_;
};

// Solves A X = B in place via Gauss-Jordan with pivoting on invertible
// entries. Returns false when A has no invertible pivot in some column
// (singular over K).
template <class K>
bool solve_linear(Mat<K> A, Mat<K> B, Mat<K>& X) {
    using T = scalar_traits<K>;
    const int n = A.rows();
    if (A.cols() != n || B.rows() != n) throw InvalidArgument("solve_linear: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r) {
            double w = T::pivot_mag(A.at(r, col));
            if (w > best) { best = w; piv = r; }
        }
        if (piv < 0) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            for (int j = 0; j < B.cols(); ++j) std::swap(B.at(piv, j), B.at(col, j));
        }
        K inv = T::inverse(A.at(col, col));
        for (int j = col; j < n; ++j) A.at(col, j) = inv * A.at(col, j);
        for (int j = 0; j < B.cols(); ++j) B.at(col, j) = inv * B.at(col, j);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            K factor = A.at(r, col);
            if (T::is_zero(factor)) continue;
            for (int j = col; j < n; ++j) A.at(r, j) = A.at(r, j) - factor * A.at(col, j);
            for (int j = 0; j < B.cols(); ++j) B.at(r, j) = B.at(r, j) - factor * B.at(col, j);
        }
    }
    X = std::move(B);
    return true;
}

template <class K>
std::optional<Mat<K>> try_inverse(const Mat<K>& A) {
    Mat<K> X;
    if (!solve_linear(A, Mat<K>::identity(A.rows()), X)) return std::nullopt;
    return X;
}

template <class K>
std::optional<Vec<K>> try_solve(const Mat<K>& A, const Vec<K>& b) {
    Mat<K> B(A.rows(), 1);
    for (int i = 0; i < A.rows(); ++i) B.at(i, 0) = b[i];
    Mat<K> X;
    if (!solve_linear(A, B, X)) return std::nullopt;
    Vec<K> x = vec_zero<K>(A.rows());
    for (int i = 0; i < A.rows(); ++i) x[i] = X.at(i, 0);
    return x;
}

// Determinant by elimination; fields only (exact rationals or doubles).
template <class K>
K determinant(Mat<K> A) {
    using T = scalar_traits<K>;
    const int n = A.rows();
    K det = T::one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r) {
            double w = T::pivot_mag(A.at(r, col));
            if (w > best) { best = w; piv = r; }
        }
        if (piv < 0) return T::zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            det = -det;
        }
        det = det * A.at(col, col);
        K inv = T::inverse(A.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            K factor = A.at(r, col) * inv;
            if (T::is_zero(factor)) continue;
            for (int j = col; j < n; ++j) A.at(r, j) = A.at(r, j) - factor * A.at(col, j);
        }
    }
    return det;
}

// Row-echelon rank. tol is the float zero threshold relative to the largest
// entry; exact mode ignores it and tests exact zero.
template <class K>
int matrix_rank(Mat<K> A, double tol = 1e-12) {
    using T = scalar_traits<K>;
    const double scale = std::max(1.0, A.max_mag());
    auto negligible = [&](const K& x) {
        if constexpr (T::is_exact) return T::is_zero(x);
        else return T::mag(x) <= tol * scale;
    };
    int rank = 0;
    int rows = A.rows(), cols = A.cols();
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = rank; r < rows; ++r) {
            double w = T::pivot_mag(A.at(r, col));
            if (w > best && !negligible(A.at(r, col))) { best = w; piv = r; }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
        K inv = T::inverse(A.at(rank, col));
        for (int r = rank + 1; r < rows; ++r) {
            K factor = A.at(r, col) * inv;
            if (T::is_zero(factor)) continue;
            for (int j = col; j < cols; ++j) A.at(r, j) = A.at(r, j) - factor * A.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Basis of the null space of A (fields only).
template <class K>
std::vector<Vec<K>> kernel_basis(Mat<K> A, double tol = 1e-12) {
    using T = scalar_traits<K>;
    const double scale = std::max(1.0, A.max_mag());
    auto negligible = [&](const K& x) {
        if constexpr (T::is_exact) return T::is_zero(x);
        else return T::mag(x) <= tol * scale;
    };
    int rows = A.rows(), cols = A.cols();
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = rank; r < rows; ++r) {
            double w = T::pivot_mag(A.at(r, col));
            if (w > best && !negligible(A.at(r, col))) { best = w; piv = r; }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
        K inv = T::inverse(A.at(rank, col));
        for (int j = 0; j < cols; ++j) A.at(rank, j) = inv * A.at(rank, j);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            K factor = A.at(r, col);
            if (T::is_zero(factor)) continue;
            for (int j = 0; j < cols; ++j) A.at(r, j) = A.at(r, j) - factor * A.at(rank, j);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++rank;
    }
    std::vector<Vec<K>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        Vec<K> v = vec_zero<K>(cols);
        v[free_col] = T::one();
        for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -A.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Eigenvalues of a Hermitian complex matrix by cyclic Jacobi rotations.
// Good enough for the handful-of-rows Gram blocks this project sees.
inline std::vector<double> hermitian_eigenvalues(Mat<Cx> A) {
    const int n = A.rows();
    const double scale = std::max(1.0, A.max_mag());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A.at(p, q)));
        if (off < 1e-15 * scale) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double m = std::abs(A.at(p, q));
                if (m < 1e-18 * scale) continue;
                const Cx phase = A.at(p, q) / m;  // A(p,q) = m * phase
                const double app = A.at(p, p).real();
                const double aqq = A.at(q, q).real();
                // In the frame where A(p,q) is real m, use the classic rotation:
                // tau = (aqq-app)/(2m), t the smaller root of t^2 + 2 tau t - 1 = 0.
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Unitary U: U[p,p]=c, U[q,p]=-s*conj(phase), U[p,q]=s, U[q,q]=c*conj(phase).
                for (int k = 0; k < n; ++k) {  // A <- A U
                    Cx akp = A.at(k, p), akq = A.at(k, q);
                    A.at(k, p) = c * akp - s * std::conj(phase) * akq;
                    A.at(k, q) = s * akp + c * std::conj(phase) * akq;
                }
                for (int k = 0; k < n; ++k) {  // A <- U^H A
                    Cx apk = A.at(p, k), aqk = A.at(q, k);
                    A.at(p, k) = c * apk - s * phase * aqk;
                    A.at(q, k) = s * apk + c * phase * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = A.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

template <class K>
Mat<K> commutator(const Mat<K>& a, const Mat<K>& b) {
    return a * b - b * a;
}

}  // namespace kcone
