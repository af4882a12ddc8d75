#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cycloclock/rational.hpp"

namespace cyclo::exactcyc {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
/// Computed by exact division in the recurrence x^n - 1 = prod_{d|n} Phi_d(x).
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

/**
 * Element of the N-th cyclotomic field Q(zeta_N), stored in the reduced power
 * basis 1, z, ..., z^{phi(N)-1} with z = zeta_N = e^{2*pi*i/N}. The
 * representation is canonical, so equality is a coefficient comparison.
 * Values are immutable; all operations return new values. Mixing orders
 * throws OrderMismatchError rather than lifting to a common field.
 */
class CyclotomicNumber {
public:
    static CyclotomicNumber zero(unsigned order);
    static CyclotomicNumber one(unsigned order);
    static CyclotomicNumber from_rational(unsigned order, const BigRational& value);
    static CyclotomicNumber from_integer(unsigned order, long long value);

    /// zeta_order^k, k reduced mod order.
    static CyclotomicNumber root_of_unity(unsigned order, long long k);

    unsigned order() const { return order_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when the value lies in Q (all coefficients above degree 0 vanish).
    bool is_rational() const;
    /// Degree-0 coefficient; equals the value itself when is_rational().
    const BigRational& rational_part() const { return coeffs_[0]; }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const BigRational& s) const;
    CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }
    bool operator==(const CyclotomicNumber& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    /// Complex conjugation: the automorphism z -> z^{order-1}.
    CyclotomicNumber conj() const;

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// Q[x] mod Phi_N. Throws DivisionByZeroError on zero.
    CyclotomicNumber inverse() const;

    CyclotomicNumber pow(unsigned long long e) const;

    /// Evaluate the coefficient polynomial at e^{2*pi*i/order}.
    std::complex<double> to_complex() const;

    /// Canonical text form, e.g. "1 - z^2" or "-1/2 + 3/2*z".
    std::string to_string() const;

private:
    CyclotomicNumber(unsigned order, std::vector<BigRational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    void check_same_order(const CyclotomicNumber& o) const;

    unsigned order_;
    std::vector<BigRational> coeffs_;
};

inline CyclotomicNumber operator*(const BigRational& s, const CyclotomicNumber& a) { return a * s; }

} // namespace cyclo::exactcyc
