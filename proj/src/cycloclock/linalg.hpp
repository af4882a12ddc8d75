#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cycloclock/cyclotomic.hpp"
#include "cycloclock/errors.hpp"

namespace cyclo::linalg {

// One arithmetic surface shared by the exact and the floating scalar kind,
// so every operator runs identically through both pipelines. Additive and
// multiplicative structure comes from the scalars' own operators; the traits
// supply what operators cannot: context-dependent zero and conjugation.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<exactcyc::CyclotomicNumber> {
    static exactcyc::CyclotomicNumber zero_like(const exactcyc::CyclotomicNumber& x) {
        return exactcyc::CyclotomicNumber::zero(x.order());
    }
    static exactcyc::CyclotomicNumber conj(const exactcyc::CyclotomicNumber& x) {
        return x.conj();
    }
};

template <>
struct scalar_traits<std::complex<double>> {
    static std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
};

/// Dense square matrix over an exact-cyclotomic or complex-double scalar.
template <class S>
class Matrix {
public:
    Matrix(std::size_t dim, const S& fill) : dim_(dim), entries_(dim * dim, fill) {
        if (dim == 0)
            throw DimMismatchError("matrix dimension must be >= 1");
    }

    std::size_t dim() const { return dim_; }
    const S& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    S& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

private:
    std::size_t dim_;
    std::vector<S> entries_;
};

/// Length-N coefficient vector in the azimuthal basis.
template <class S>
class Vector {
public:
    Vector(std::size_t dim, const S& fill) : entries_(dim, fill) {
        if (dim == 0)
            throw DimMismatchError("vector dimension must be >= 1");
    }

    std::size_t dim() const { return entries_.size(); }
    const S& at(std::size_t i) const { return entries_[i]; }
    S& at(std::size_t i) { return entries_[i]; }

    bool operator==(const Vector& o) const { return entries_ == o.entries_; }

private:
    std::vector<S> entries_;
};

namespace detail {
inline void check_dims(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimMismatchError(std::string(what) + ": dimension mismatch (" +
                               std::to_string(a) + " vs " + std::to_string(b) + ")");
}
} // namespace detail

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
    detail::check_dims(a.dim(), b.dim(), "matmul");
    const std::size_t n = a.dim();
    Matrix<S> r(n, scalar_traits<S>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const S& aik = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j)
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

template <class S>
Vector<S> matvec(const Matrix<S>& a, const Vector<S>& x) {
    detail::check_dims(a.dim(), x.dim(), "matvec");
    const std::size_t n = a.dim();
    Vector<S> r(n, scalar_traits<S>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i) = r.at(i) + a.at(i, j) * x.at(j);
    return r;
}

template <class S>
Matrix<S> adjoint(const Matrix<S>& a) {
    const std::size_t n = a.dim();
    Matrix<S> r(n, scalar_traits<S>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i, j) = scalar_traits<S>::conj(a.at(j, i));
    return r;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    detail::check_dims(a.dim(), b.dim(), "commutator");
    const Matrix<S> ab = matmul(a, b);
    const Matrix<S> ba = matmul(b, a);
    const std::size_t n = a.dim();
    Matrix<S> r(n, scalar_traits<S>::zero_like(a.at(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i, j) = ab.at(i, j) - ba.at(i, j);
    return r;
}

template <class S>
S trace(const Matrix<S>& a) {
    S t = a.at(0, 0);
    for (std::size_t i = 1; i < a.dim(); ++i)
        t = t + a.at(i, i);
    return t;
}

/// Conjugate-linear in the first argument: sum of conj(x_i) * y_i.
template <class S>
S inner_product(const Vector<S>& x, const Vector<S>& y) {
    detail::check_dims(x.dim(), y.dim(), "inner_product");
    S t = scalar_traits<S>::conj(x.at(0)) * y.at(0);
    for (std::size_t i = 1; i < x.dim(); ++i)
        t = t + scalar_traits<S>::conj(x.at(i)) * y.at(i);
    return t;
}

inline Matrix<std::complex<double>> embed(const Matrix<exactcyc::CyclotomicNumber>& a) {
    Matrix<std::complex<double>> r(a.dim(), {0.0, 0.0});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            r.at(i, j) = a.at(i, j).to_complex();
    return r;
}

inline Vector<std::complex<double>> embed(const Vector<exactcyc::CyclotomicNumber>& x) {
    Vector<std::complex<double>> r(x.dim(), {0.0, 0.0});
    for (std::size_t i = 0; i < x.dim(); ++i)
        r.at(i) = x.at(i).to_complex();
    return r;
}

inline double max_abs_diff(const Matrix<std::complex<double>>& a,
                           const Matrix<std::complex<double>>& b) {
    detail::check_dims(a.dim(), b.dim(), "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

inline bool is_zero(const Matrix<exactcyc::CyclotomicNumber>& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a.at(i, j).is_zero())
                return false;
    return true;
}

} // namespace cyclo::linalg
