#include "cycloclock/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace cyclo::exactcyc {

namespace {

// ---- polynomial helpers over BigInt (monic exact division) ----

// quotient of a / b where b is monic; asserts the remainder vanishes
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    assert(!b.empty() && b.back() == 1);
    const std::size_t db = b.size() - 1;
    assert(a.size() >= b.size());
    std::vector<BigInt> q(a.size() - db, BigInt(0));
    for (std::size_t i = a.size(); i-- > db;) {
        BigInt c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
#ifndef NDEBUG
    for (const auto& r : a)
        assert(r == 0);
#endif
    return q;
}

// ---- polynomial helpers over BigRational (extended Euclid) ----

using RatPoly = std::vector<BigRational>;

std::size_t degree_of(const RatPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1].is_zero()) --d;
    return d; // 0 means the zero polynomial; otherwise degree+1
}

RatPoly trim(RatPoly p) {
    p.resize(degree_of(p));
    return p;
}

RatPoly mul_poly(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

RatPoly sub_poly(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    return trim(std::move(a));
}

// (quotient, remainder) with deg(remainder) < deg(b)
std::pair<RatPoly, RatPoly> divmod_poly(RatPoly a, const RatPoly& b) {
    a = trim(std::move(a));
    const std::size_t nb = degree_of(b);
    assert(nb > 0);
    const BigRational lead_inv = b[nb - 1].reciprocal();
    if (a.size() < nb) return {{}, std::move(a)};
    RatPoly q(a.size() - nb + 1, BigRational(0));
    for (std::size_t qi = q.size(); qi-- > 0;) {
        BigRational c = a[qi + nb - 1] * lead_inv;
        if (!c.is_zero()) {
            q[qi] = c;
            for (std::size_t j = 0; j < nb; ++j)
                a[qi + j] -= c * b[j];
        }
    }
    return {std::move(q), trim(std::move(a))};
}

// ---- per-order reduction tables ----

struct FieldTable {
    unsigned order = 0;
    unsigned phi = 0;                       // deg(Phi_order)
    std::vector<BigInt> phi_poly;           // ascending, monic, size phi+1
    std::vector<RatPoly> monomials;         // x^j mod Phi, j = 0..max(order-1, 2*phi-2)
    std::vector<std::complex<double>> unit; // e^{2*pi*i*j/order}, j = 0..order-1
};

std::shared_mutex g_phi_mutex;
std::map<unsigned, std::shared_ptr<const std::vector<BigInt>>> g_phi_cache;

std::shared_mutex g_table_mutex;
std::map<unsigned, std::shared_ptr<const FieldTable>> g_table_cache;

std::shared_ptr<const std::vector<BigInt>> phi_poly_for(unsigned n) {
    {
        std::shared_lock lock(g_phi_mutex);
        if (auto it = g_phi_cache.find(n); it != g_phi_cache.end())
            return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<BigInt> poly(n + 1, BigInt(0));
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            poly = divide_exact(std::move(poly), *phi_poly_for(d));
    auto result = std::make_shared<const std::vector<BigInt>>(std::move(poly));
    std::unique_lock lock(g_phi_mutex);
    auto [it, _] = g_phi_cache.emplace(n, result);
    return it->second;
}

std::shared_ptr<const FieldTable> table_for(unsigned order) {
    {
        std::shared_lock lock(g_table_mutex);
        if (auto it = g_table_cache.find(order); it != g_table_cache.end())
            return it->second;
    }
    auto table = std::make_shared<FieldTable>();
    table->order = order;
    table->phi_poly = *phi_poly_for(order);
    table->phi = static_cast<unsigned>(table->phi_poly.size() - 1);
    const unsigned phi = table->phi;

    const unsigned maxdeg = std::max(order - 1, phi >= 1 ? 2 * phi - 2 : 0);
    table->monomials.reserve(maxdeg + 1);
    for (unsigned j = 0; j <= maxdeg; ++j) {
        if (j < phi) {
            RatPoly m(phi, BigRational(0));
            m[j] = BigRational(1);
            table->monomials.push_back(std::move(m));
        } else {
            // x^j = x * x^{j-1}; fold the overflow at degree phi through
            // x^phi = -(Phi_0 + Phi_1 x + ... + Phi_{phi-1} x^{phi-1})
            const RatPoly& prev = table->monomials[j - 1];
            RatPoly m(phi, BigRational(0));
            for (unsigned i = 0; i + 1 < phi; ++i)
                m[i + 1] = prev[i];
            const BigRational& carry = prev[phi - 1];
            if (!carry.is_zero())
                for (unsigned i = 0; i < phi; ++i)
                    m[i] -= carry * BigRational(table->phi_poly[i]);
            table->monomials.push_back(std::move(m));
        }
    }

    table->unit.reserve(order);
    for (unsigned j = 0; j < order; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
        table->unit.emplace_back(std::cos(angle), std::sin(angle));
    }

    std::unique_lock lock(g_table_mutex);
    auto [it, _] = g_table_cache.emplace(order, std::move(table));
    return it->second;
}

void require_positive_order(unsigned order) {
    if (order == 0)
        throw std::invalid_argument("cyclotomic order must be >= 1");
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
    require_positive_order(n);
    return *phi_poly_for(n);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned order) {
    require_positive_order(order);
    auto table = table_for(order);
    return CyclotomicNumber(order, std::vector<BigRational>(table->phi, BigRational(0)));
}

CyclotomicNumber CyclotomicNumber::one(unsigned order) {
    return from_rational(order, BigRational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned order, const BigRational& value) {
    auto c = zero(order);
    c.coeffs_[0] = value;
    return c;
}

CyclotomicNumber CyclotomicNumber::from_integer(unsigned order, long long value) {
    return from_rational(order, BigRational(value));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned order, long long k) {
    require_positive_order(order);
    auto table = table_for(order);
    long long r = k % static_cast<long long>(order);
    if (r < 0) r += order;
    return CyclotomicNumber(order, table->monomials[static_cast<std::size_t>(r)]);
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c.is_zero(); });
}

bool CyclotomicNumber::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const BigRational& c) { return c.is_zero(); });
}

void CyclotomicNumber::check_same_order(const CyclotomicNumber& o) const {
    if (order_ != o.order_)
        throw OrderMismatchError("cyclotomic order mismatch: " + std::to_string(order_) +
                                 " vs " + std::to_string(o.order_));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    check_same_order(o);
    std::vector<BigRational> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coeffs_[i];
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    check_same_order(o);
    std::vector<BigRational> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= o.coeffs_[i];
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<BigRational> c(coeffs_);
    for (auto& x : c)
        x = -x;
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    check_same_order(o);
    auto table = table_for(order_);
    const unsigned phi = table->phi;
    std::vector<BigRational> prod(2 * phi - 1, BigRational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<BigRational> c(prod.begin(), prod.begin() + phi);
    for (unsigned j = phi; j < prod.size(); ++j) {
        if (prod[j].is_zero()) continue;
        const RatPoly& m = table->monomials[j];
        for (unsigned i = 0; i < phi; ++i)
            c[i] += prod[j] * m[i];
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator*(const BigRational& s) const {
    std::vector<BigRational> c(coeffs_);
    for (auto& x : c)
        x *= s;
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::conj() const {
    auto table = table_for(order_);
    const unsigned phi = table->phi;
    std::vector<BigRational> c(phi, BigRational(0));
    for (unsigned j = 0; j < phi; ++j) {
        if (coeffs_[j].is_zero()) continue;
        const std::size_t image =
            (static_cast<std::size_t>(j) * (order_ - 1)) % order_;
        const RatPoly& m = table->monomials[image];
        for (unsigned i = 0; i < phi; ++i)
            c[i] += coeffs_[j] * m[i];
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero())
        throw DivisionByZeroError("cyclotomic inverse of zero");
    auto table = table_for(order_);
    RatPoly phi_rat(table->phi_poly.size());
    for (std::size_t i = 0; i < phi_rat.size(); ++i)
        phi_rat[i] = BigRational(table->phi_poly[i]);

    // extended Euclid: track s with s*this == r (mod Phi)
    RatPoly r0 = phi_rat, r1 = trim(coeffs_);
    RatPoly s0 = {}, s1 = {BigRational(1)};
    while (degree_of(r1) > 1) {
        auto [q, r2] = divmod_poly(std::move(r0), r1);
        RatPoly s2 = sub_poly(std::move(s0), mul_poly(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(degree_of(r1) == 1); // Phi irreducible, so gcd is a nonzero constant
    const BigRational g_inv = r1[0].reciprocal();
    std::vector<BigRational> c(table->phi, BigRational(0));
    for (std::size_t i = 0; i < s1.size(); ++i)
        c[i] = s1[i] * g_inv;
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long long e) const {
    CyclotomicNumber result = one(order_);
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::complex<double> CyclotomicNumber::to_complex() const {
    auto table = table_for(order_);
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        sum += coeffs_[j].to_double() * table->unit[j % order_];
    }
    return sum;
}

std::string CyclotomicNumber::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const BigRational& c = coeffs_[j];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const BigRational mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit_coeff = mag == BigRational(1);
        if (j == 0) {
            out += mag.to_string();
        } else {
            if (!unit_coeff)
                out += mag.to_string() + "*";
            out += (j == 1) ? "z" : "z^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace cyclo::exactcyc
