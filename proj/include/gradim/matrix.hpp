#pragma once

#include <vector>

#include "gradim/scalar.hpp"

namespace gradim {

/// Reduces any integer index to [0, n).
inline int mod_index(long long v, int n) {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

/// The cyclic grading of n x n matrices: the matrix unit E_{i,j} sits in the
/// component of degree (j - i) mod n, so component 0 is the diagonal and
/// component g is spanned by E_{1,1+g}, ..., E_{n,n+g} with wrapped columns.
struct Grading {
    int n;
    explicit Grading(int n_) : n(n_) {
        if (n_ < 1) throw DimensionError("grading modulus must be positive");
    }
    /// Degree of E_{i,j}; accepts any integers, indices taken mod n.
    int degree(long long i, long long j) const { return mod_index(j - i, n); }
};

template <class T>
class HomogeneousMatrix;

/// Dense n x n matrix over T. Row/column accessors ending in `at` use the
/// external 1-based convention with wrap-around; operator() is 0-based.
template <class T>
class Matrix {
  public:
    explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, scalar_traits<T>::zero()) {
        if (n < 1) throw DimensionError("matrix size must be positive");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
        return m;
    }
    /// E_{i,j} in the 1-based wrapped convention.
    static Matrix unit(int n, long long i, long long j) {
        Matrix m(n);
        m(mod_index(i - 1, n), mod_index(j - 1, n)) = scalar_traits<T>::one();
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
        return m;
    }

    int size() const { return n_; }

    T& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const T& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const T& at(long long i, long long j) const {
        return (*this)(mod_index(i - 1, n_), mod_index(j - 1, n_));
    }
    T& at(long long i, long long j) { return (*this)(mod_index(i - 1, n_), mod_index(j - 1, n_)); }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        check_same(o);
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const T& a = (*this)(i, k);
                if (scalar_traits<T>::is_zero(a)) continue;
                for (int j = 0; j < n_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }
    Matrix scaled(const T& c) const {
        Matrix r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (!scalar_traits<T>::equal(e_[k], o.e_[k])) return false;
        return true;
    }

    bool is_zero() const {
        for (const T& x : e_)
            if (!scalar_traits<T>::is_zero(x)) return false;
        return true;
    }

    T trace() const {
        T acc = scalar_traits<T>::zero();
        for (int i = 0; i < n_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

    /// Determinant: fraction-free (Bareiss) elimination for exact coefficient
    /// rings, partial-pivot LU for the floating backend.
    T det() const;

    /// N^{-k} A N^k for the cyclic permutation N = sum_i E_{i,i+1}; sends
    /// E_{i,j} to E_{i+k,j+k} and so permutes entries without arithmetic.
    Matrix shift_conjugate(long long k) const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r(mod_index(i + k, n_), mod_index(j + k, n_)) = (*this)(i, j);
        return r;
    }

    /// D A D^{-1} for D = diag(d); every d_i must be invertible.
    Matrix diag_conjugate(const std::vector<T>& d) const {
        if (static_cast<int>(d.size()) != n_)
            throw DimensionError("diagonal length does not match matrix size");
        for (const T& x : d)
            if (scalar_traits<T>::is_zero(x))
                throw ZeroDiagonalEntryError("diagonal conjugation requires invertible entries");
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                r(i, j) = d[i] * (*this)(i, j) * scalar_traits<T>::inverse(d[j]);
        return r;
    }

  private:
    int n_;
    std::vector<T> e_;
    void check_same(const Matrix& o) const {
        if (n_ != o.n_) throw DimensionError("matrix size mismatch");
    }
};

namespace detail {

template <class T>
T det_bareiss(Matrix<T> a) {
    using Tr = scalar_traits<T>;
    int n = a.size();
    T sign = Tr::one();
    T prev = Tr::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (Tr::is_zero(a(k, k))) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (!Tr::is_zero(a(r, k))) {
                    p = r;
                    break;
                }
            if (p < 0) return Tr::zero();
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = Tr::div_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline ComplexScalar det_lu(Matrix<ComplexScalar> a) {
    int n = a.size();
    std::complex<double> det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a(r, k).v) > std::abs(a(p, k).v)) p = r;
        if (std::abs(a(p, k).v) == 0.0) return ComplexScalar(0.0);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            det = -det;
        }
        det *= a(k, k).v;
        for (int i = k + 1; i < n; ++i) {
            std::complex<double> f = a(i, k).v / a(k, k).v;
            for (int j = k + 1; j < n; ++j) a(i, j) = ComplexScalar(a(i, j).v - f * a(k, j).v);
        }
    }
    return ComplexScalar(det);
}

}  // namespace detail

template <class T>
T Matrix<T>::det() const {
    if constexpr (std::is_same_v<T, ComplexScalar>)
        return detail::det_lu(*this);
    else
        return detail::det_bareiss(*this);
}

/// Result of testing membership in a single graded component. The zero
/// matrix is homogeneous with unspecified degree and gets its own kind.
struct Homogeneity {
    enum Kind { Zero, Graded, Mixed } kind;
    int degree = 0;  // meaningful only when kind == Graded

    bool is_homogeneous() const { return kind != Mixed; }
};

template <class T>
Homogeneity classify_homogeneity(const Matrix<T>& a) {
    int n = a.size();
    Grading gr(n);
    int found = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (scalar_traits<T>::is_zero(a(i, j))) continue;
            int g = gr.degree(i, j);
            if (found < 0)
                found = g;
            else if (found != g)
                return {Homogeneity::Mixed, 0};
        }
    if (found < 0) return {Homogeneity::Zero, 0};
    return {Homogeneity::Graded, found};
}

/// Element of the degree-g component, stored as the coefficient vector of
/// sum_i gamma_i E_{i,i+g} (1-based i, wrapped column).
template <class T>
class HomogeneousMatrix {
  public:
    HomogeneousMatrix(int n, int g)
        : n_(n), g_(mod_index(g, n)), gamma_(n, scalar_traits<T>::zero()) {
        if (n < 1) throw DimensionError("matrix size must be positive");
    }
    HomogeneousMatrix(int n, int g, std::vector<T> gamma) : HomogeneousMatrix(n, g) {
        if (static_cast<int>(gamma.size()) != n)
            throw DimensionError("coefficient vector length does not match size");
        gamma_ = std::move(gamma);
    }

    /// E_{i,i+g} (1-based, wrapped).
    static HomogeneousMatrix unit(int n, int g, long long i) {
        HomogeneousMatrix m(n, g);
        m.gamma_[mod_index(i - 1, n)] = scalar_traits<T>::one();
        return m;
    }
    static HomogeneousMatrix all_ones(int n, int g) {
        HomogeneousMatrix m(n, g);
        for (auto& x : m.gamma_) x = scalar_traits<T>::one();
        return m;
    }

    int size() const { return n_; }
    int degree() const { return g_; }
    const std::vector<T>& raw() const { return gamma_; }

    const T& gamma(long long i) const { return gamma_[mod_index(i - 1, n_)]; }
    T& gamma(long long i) { return gamma_[mod_index(i - 1, n_)]; }

    bool is_zero() const {
        for (const T& x : gamma_)
            if (!scalar_traits<T>::is_zero(x)) return false;
        return true;
    }

    bool operator==(const HomogeneousMatrix& o) const {
        if (n_ != o.n_) return false;
        if (g_ != o.g_) return is_zero() && o.is_zero();
        for (int i = 0; i < n_; ++i)
            if (!scalar_traits<T>::equal(gamma_[i], o.gamma_[i])) return false;
        return true;
    }

    Matrix<T> dense() const {
        Matrix<T> m(n_);
        for (int i = 0; i < n_; ++i) m(i, mod_index(i + g_, n_)) = gamma_[i];
        return m;
    }

    /// Product within the graded algebra: degrees add, and the coefficient of
    /// the product at row i is gamma_i * delta_{i+g}.
    HomogeneousMatrix operator*(const HomogeneousMatrix& o) const {
        check_same(o);
        HomogeneousMatrix r(n_, g_ + o.g_);
        for (int i = 0; i < n_; ++i)
            r.gamma_[i] = gamma_[i] * o.gamma_[mod_index(i + g_, n_)];
        return r;
    }

    HomogeneousMatrix operator+(const HomogeneousMatrix& o) const {
        check_same(o);
        if (g_ != o.g_) {
            if (o.is_zero()) return *this;
            if (is_zero()) return o;
            throw DegreeMismatchError("cannot add components of different degrees");
        }
        HomogeneousMatrix r(n_, g_);
        for (int i = 0; i < n_; ++i) r.gamma_[i] = gamma_[i] + o.gamma_[i];
        return r;
    }
    HomogeneousMatrix operator-() const {
        HomogeneousMatrix r(n_, g_);
        for (int i = 0; i < n_; ++i) r.gamma_[i] = -gamma_[i];
        return r;
    }
    HomogeneousMatrix operator-(const HomogeneousMatrix& o) const { return *this + (-o); }
    HomogeneousMatrix scaled(const T& c) const {
        HomogeneousMatrix r(n_, g_);
        for (int i = 0; i < n_; ++i) r.gamma_[i] = gamma_[i] * c;
        return r;
    }

    HomogeneousMatrix shift_conjugate(long long k) const {
        HomogeneousMatrix r(n_, g_);
        for (int i = 0; i < n_; ++i) r.gamma_[mod_index(i + k, n_)] = gamma_[i];
        return r;
    }

    /// Inverse of an invertible component element; defined exactly when every
    /// coefficient is invertible, with (a^{-1})_j = 1 / gamma_{j-g}.
    HomogeneousMatrix inverse() const {
        HomogeneousMatrix r(n_, -g_);
        for (int j = 0; j < n_; ++j)
            r.gamma_[j] = scalar_traits<T>::inverse(gamma_[mod_index(j - g_, n_)]);
        return r;
    }

  private:
    int n_, g_;
    std::vector<T> gamma_;
    void check_same(const HomogeneousMatrix& o) const {
        if (n_ != o.n_) throw DimensionError("matrix size mismatch");
    }
};

/// Component of degree g of a dense matrix.
template <class T>
HomogeneousMatrix<T> project(const Matrix<T>& a, int g) {
    int n = a.size();
    HomogeneousMatrix<T> r(n, g);
    for (int i = 0; i < n; ++i) r.gamma(i + 1) = a(i, mod_index(i + g, n));
    return r;
}

}  // namespace gradim
