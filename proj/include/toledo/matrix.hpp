#pragma once

#include "toledo/cyclotomic.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace toledo {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const CycloNum& x) { return x.is_zero(); }
inline Rational scalar_inv(const Rational& x) { return 1 / x; }
inline CycloNum scalar_inv(const CycloNum& x) { return inv(x); }
inline Rational scalar_conj(const Rational& x) { return x; }
inline CycloNum scalar_conj(const CycloNum& x) { return conjugate(x); }

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Mat(size_t rows, size_t cols, std::vector<T> data) : r_(rows), c_(cols), a_(std::move(data))
    {
        if (a_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    }

    static Mat identity(size_t n)
    {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat diag(const std::vector<T>& d)
    {
        Mat m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const std::vector<T>& data() const { return a_; }

    std::vector<T> col(size_t j) const
    {
        std::vector<T> v(r_);
        for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(size_t j, const std::vector<T>& v)
    {
        for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    Mat& operator+=(const Mat& b)
    {
        check_same(b);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& b)
    {
        check_same(b);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
        return *this;
    }
    Mat& operator*=(const T& s)
    {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const T& s) { return a *= s; }
    friend Mat operator*(const T& s, Mat a) { return a *= s; }
    Mat operator-() const
    {
        Mat m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    friend Mat operator*(const Mat& a, const Mat& b)
    {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (scalar_is_zero(x)) continue;
                for (size_t j = 0; j < b.c_; ++j)
                    if (!scalar_is_zero(b(k, j))) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend std::vector<T> operator*(const Mat& a, const std::vector<T>& v)
    {
        if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(a.r_, T(0));
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k)
                if (!scalar_is_zero(a(i, k)) && !scalar_is_zero(v[k])) out[i] += a(i, k) * v[k];
        return out;
    }
    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const
    {
        Mat m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    Mat adjoint() const
    {
        Mat m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = scalar_conj((*this)(i, j));
        return m;
    }
    T trace() const
    {
        T s(0);
        for (size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
        return s;
    }
    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }
    // Returns true and sets c when the matrix equals c * Id.
    bool is_scalar(T* c = nullptr) const
    {
        if (r_ != c_) return false;
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                if (i != j && !scalar_is_zero((*this)(i, j))) return false;
        for (size_t i = 1; i < r_; ++i)
            if ((*this)(i, i) != (*this)(0, 0)) return false;
        if (c) *c = r_ ? (*this)(0, 0) : T(1);
        return true;
    }

    Mat block(size_t i0, size_t j0, size_t nr, size_t nc) const
    {
        Mat m(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }
    void set_block(size_t i0, size_t j0, const Mat& b)
    {
        for (size_t i = 0; i < b.r_; ++i)
            for (size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

private:
    void check_same(const Mat& b) const
    {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<size_t> rref(Mat<T>& m)
{
    std::vector<size_t> piv;
    size_t row = 0;
    for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        size_t p = row;
        while (p < m.rows() && scalar_is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        T iv = scalar_inv(m(row, c));
        for (size_t j = c; j < m.cols(); ++j) m(row, j) *= iv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || scalar_is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                if (!scalar_is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

template <class T>
size_t rank(Mat<T> m)
{
    return rref(m).size();
}

// Columns form a basis of the right kernel.
template <class T>
Mat<T> nullspace(Mat<T> m)
{
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat<T> n(m.cols(), free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = T(1);
        for (size_t r = 0; r < piv.size(); ++r) n(piv[r], k) = -m(r, free[k]);
    }
    return n;
}

template <class T>
Mat<T> inverse(const Mat<T>& a)
{
    size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    Mat<T> aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Mat<T>::identity(n));
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return aug.block(0, n, n, n);
}

// Solves a x = b (b may have several columns); throws when inconsistent or
// when the solution is not unique.
template <class T>
Mat<T> solve(const Mat<T>& a, const Mat<T>& b)
{
    size_t n = a.cols();
    Mat<T> aug(a.rows(), n + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    auto piv = rref(aug);
    for (auto p : piv)
        if (p >= n) throw std::domain_error("inconsistent linear system");
    if (piv.size() < n) throw std::domain_error("linear system has no unique solution");
    return aug.block(0, n, n, b.cols());
}

template <class T>
T det(Mat<T> m)
{
    size_t n = m.rows();
    T d(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && scalar_is_zero(m(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        T iv = scalar_inv(m(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            if (scalar_is_zero(m(i, c))) continue;
            T f = m(i, c) * iv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Characteristic polynomial det(x - m), low degree first (Faddeev-LeVerrier).
template <class T>
std::vector<T> charpoly(const Mat<T>& m)
{
    size_t n = m.rows();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Mat<T> M = Mat<T>::identity(n) * T(0);
    for (size_t k = 1; k <= n; ++k) {
        for (size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        M = m * M;
        c[n - k] = -(M.trace() * T(Rational(1, static_cast<long>(k))));
    }
    return c;
}

template <class T>
Mat<T> matpow(const Mat<T>& a, long e)
{
    if (e < 0) return matpow(inverse(a), -e);
    Mat<T> r = Mat<T>::identity(a.rows()), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

using QMat = Mat<Rational>;
using CMat = Mat<CycloNum>;
using QVec = std::vector<Rational>;

inline CMat to_cyclo(const QMat& q)
{
    CMat m(q.rows(), q.cols());
    for (size_t i = 0; i < q.rows(); ++i)
        for (size_t j = 0; j < q.cols(); ++j) m(i, j) = CycloNum(q(i, j));
    return m;
}

}  // namespace toledo
