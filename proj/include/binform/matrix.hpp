#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

#include "binform/numeric.hpp"

namespace binform {

/// Dense row-major matrix over an exact scalar (Int or Rat).  Immutable in
/// spirit: all algorithms below are pure functions returning fresh values.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw error("entry count does not match shape");
    }
    /// Row-major nested braces: Mat<Int>{{1,2},{3,4}}.
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw error("ragged initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator*(const T& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const T& v : data_)
            if (v != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_col(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? "," : "") << to_string((*this)(i, j));
        }
        os << "]";
        return os.str();
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

/// Least common multiple of all entry denominators (1 for the empty matrix).
inline Int common_denominator(const RatMat& m) {
    Int d(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
    return d;
}

/// m = result / d with the smallest positive d clearing every denominator.
inline std::pair<IntMat, Int> clear_denominators(const RatMat& m) {
    Int d = common_denominator(m);
    IntMat z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = to_int(m(i, j) * Rat(d));
    return {z, d};
}

inline RatMat scale(const IntMat& m, const Rat& s) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j)) * s;
    return r;
}

inline bool is_integral(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline IntMat to_int(const RatMat& m) {
    IntMat z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = to_int(m(i, j));
    return z;
}

/// Fraction-free Bareiss determinant.
inline Int det(const IntMat& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMat a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

inline Rat det(const RatMat& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    auto [z, d] = clear_denominators(m);
    Rat dn(1);
    for (std::size_t i = 0; i < m.rows(); ++i) dn *= Rat(d);
    return Rat(det(z)) / dn;
}

/// Gauss-Jordan inverse over the rationals; throws on singular input.
inline RatMat inverse(const RatMat& m) {
    if (!m.is_square()) throw error("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw error("singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

inline RatMat inverse(const IntMat& m) { return inverse(to_rat(m)); }

/// Solves a x = b for square nonsingular a (b one column per system).
inline RatMat solve(const RatMat& a, const RatMat& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw error("solve shape mismatch");
    return inverse(a) * b;
}

inline std::vector<Rat> solve(const RatMat& a, const std::vector<Rat>& b) {
    RatMat rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    return solve(a, rhs).col(0);
}

}  // namespace binform
