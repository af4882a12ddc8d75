#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <complex>
#include <random>
#include <thread>

#include "cycloclock/cyclotomic.hpp"

using cyclo::exactcyc::BigInt;
using cyclo::exactcyc::BigRational;
using cyclo::exactcyc::CyclotomicNumber;
using cyclo::exactcyc::SqrtRational;
using cyclo::exactcyc::cyclotomic_polynomial;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values) {
    std::vector<BigInt> out;
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("BigRational stays reduced with positive denominator") {
    BigRational q(BigInt(6), BigInt(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(q.to_string() == "-3/2");
    CHECK(BigRational(BigInt(0), BigInt(-7)) == BigRational(0));
    CHECK(BigRational(BigInt(2), BigInt(4)) + BigRational(BigInt(1), BigInt(4)) ==
          BigRational(BigInt(3), BigInt(4)));
    CHECK((BigRational(1) / BigRational(3)).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), cyclo::DivisionByZeroError);
    CHECK_THROWS_AS(BigRational(1).operator/(BigRational(0)), cyclo::DivisionByZeroError);
}

TEST_CASE("SqrtRational canonicalizes square factors") {
    CHECK(SqrtRational::inv_sqrt(4).radicand() == 1);
    CHECK(SqrtRational::inv_sqrt(4).rational_part() == BigRational(BigInt(1), BigInt(2)));
    const auto s12 = SqrtRational::inv_sqrt(12); // 1/(2*sqrt(3)) = (1/6)*sqrt(3)
    CHECK(s12.radicand() == 3);
    CHECK(s12.rational_part() == BigRational(BigInt(1), BigInt(6)));
    CHECK(s12.to_double() == doctest::Approx(1.0 / std::sqrt(12.0)));
    // (1/sqrt(n))^2 = 1/n exactly
    for (unsigned n = 1; n <= 30; ++n) {
        const auto sq = SqrtRational::inv_sqrt(n) * SqrtRational::inv_sqrt(n);
        CHECK(sq.radicand() == 1);
        CHECK(sq.rational_part() == BigRational(BigInt(1), BigInt(n)));
    }
}

TEST_CASE("cyclotomic polynomials from the divisor recurrence") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    // first order with a coefficient outside {-1, 0, 1}
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49); // phi(105) = 48
    CHECK(p105[7] == -2);
    CHECK(p105.back() == 1);
}

TEST_CASE("root_of_unity canonical forms") {
    CHECK(CyclotomicNumber::root_of_unity(7, 0) == CyclotomicNumber::one(7));
    const auto i = CyclotomicNumber::root_of_unity(4, 1);
    CHECK(i.to_complex().real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(i.to_complex().imag() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(CyclotomicNumber::root_of_unity(6, 3) == CyclotomicNumber::from_integer(6, -1));
    // negative exponents reduce mod n
    CHECK(CyclotomicNumber::root_of_unity(5, -2) == CyclotomicNumber::root_of_unity(5, 3));
}

TEST_CASE("field operations") {
    const auto z4 = CyclotomicNumber::root_of_unity(4, 1);
    CHECK(z4 + CyclotomicNumber::zero(4) == z4);
    CHECK(z4 * z4 == CyclotomicNumber::from_integer(4, -1));
    const auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    const auto z3sq = CyclotomicNumber::root_of_unity(3, 2);
    CHECK(z3 * z3sq == CyclotomicNumber::one(3));
    CHECK(-(-z3) == z3);
    CHECK_THROWS_AS((void)(z3 + z4), cyclo::OrderMismatchError);
    CHECK_THROWS_AS((void)(z3 * z4), cyclo::OrderMismatchError);
}

TEST_CASE("conjugation is the zeta -> zeta^{N-1} automorphism") {
    CHECK(CyclotomicNumber::one(5).conj() == CyclotomicNumber::one(5));
    const auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    CHECK(z3.conj() == CyclotomicNumber::root_of_unity(3, 2));
    const auto a = CyclotomicNumber::root_of_unity(8, 1) + CyclotomicNumber::root_of_unity(8, 3);
    const auto expected =
        CyclotomicNumber::root_of_unity(8, 5) + CyclotomicNumber::root_of_unity(8, 7);
    CHECK(a.conj() == expected);
}

TEST_CASE("to_complex embeddings") {
    CHECK(CyclotomicNumber::one(9).to_complex() == std::complex<double>(1.0, 0.0));
    const auto z3 = CyclotomicNumber::root_of_unity(3, 1).to_complex();
    CHECK(z3.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(z3.imag() == doctest::Approx(0.8660254037844387).epsilon(1e-12));
}

TEST_CASE("inverse via extended Euclid") {
    for (unsigned n : {2u, 3u, 5u, 8u, 12u, 35u}) {
        const auto a = CyclotomicNumber::one(n) - CyclotomicNumber::root_of_unity(n, 1);
        CHECK(a * a.inverse() == CyclotomicNumber::one(n));
        const auto b = CyclotomicNumber::root_of_unity(n, 1) +
                       CyclotomicNumber::from_rational(n, BigRational(BigInt(2), BigInt(3)));
        CHECK(b * b.inverse() == CyclotomicNumber::one(n));
    }
    CHECK_THROWS_AS(CyclotomicNumber::zero(6).inverse(), cyclo::DivisionByZeroError);
}

TEST_CASE("roots of unity have exact order") {
    // chain of repeated multiplications for small orders, all k
    for (unsigned n = 1; n <= 36; ++n)
        for (unsigned k = 0; k < n; ++k) {
            const auto z = CyclotomicNumber::root_of_unity(n, k);
            auto acc = CyclotomicNumber::one(n);
            for (unsigned i = 0; i < n; ++i)
                acc = acc * z;
            CHECK(acc == CyclotomicNumber::one(n));
        }
    // square-and-multiply for the rest up to 128, sampled k
    for (unsigned n = 37; n <= 128; n += 7)
        for (long long k : {1LL, 5LL, static_cast<long long>(n) - 1}) {
            const auto z = CyclotomicNumber::root_of_unity(n, k);
            CHECK(z.pow(n) == CyclotomicNumber::one(n));
        }
}

TEST_CASE("embedding is multiplicative") {
    std::mt19937_64 rng(2024);
    for (unsigned n : {5u, 12u, 24u, 60u, 128u}) {
        for (int trial = 0; trial < 8; ++trial) {
            auto a = CyclotomicNumber::zero(n);
            auto b = CyclotomicNumber::zero(n);
            for (int t = 0; t < 3; ++t) {
                const long long ka = static_cast<long long>(rng() % n);
                const long long kb = static_cast<long long>(rng() % n);
                const long long ca = static_cast<long long>(rng() % 7) - 3;
                const long long cb = static_cast<long long>(rng() % 7) - 3;
                a = a + CyclotomicNumber::root_of_unity(n, ka) * BigRational(ca);
                b = b + CyclotomicNumber::root_of_unity(n, kb) * BigRational(cb);
            }
            const auto lhs = (a * b).to_complex();
            const auto rhs = a.to_complex() * b.to_complex();
            CHECK(std::abs(lhs - rhs) < 1e-10);
            CHECK(a.conj().conj() == a);
            CHECK(std::abs((a * a.conj()).to_complex().imag()) < 1e-10);
        }
    }
}

TEST_CASE("geometric sum of all n-th roots vanishes") {
    for (unsigned n = 2; n <= 128; ++n) {
        auto sum = CyclotomicNumber::zero(n);
        for (unsigned k = 0; k < n; ++k)
            sum = sum + CyclotomicNumber::root_of_unity(n, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("reduction tables are safe for concurrent first use") {
    // many threads race to build the memoized tables for fresh orders
    std::atomic<int> failures{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([w, &failures] {
            for (unsigned n = 80; n <= 120; ++n) {
                const auto z = CyclotomicNumber::root_of_unity(n, w + 1);
                const auto back = z * z.conj();
                if (!(back == CyclotomicNumber::one(n)))
                    failures.fetch_add(1);
                if (cyclotomic_polynomial(n).size() == 0)
                    failures.fetch_add(1);
            }
        });
    for (auto& t : workers)
        t.join();
    CHECK(failures.load() == 0);
}

TEST_CASE("canonical text form") {
    CHECK(CyclotomicNumber::zero(5).to_string() == "0");
    CHECK(CyclotomicNumber::root_of_unity(5, 1).to_string() == "z");
    const auto a = CyclotomicNumber::one(5) - CyclotomicNumber::root_of_unity(5, 2);
    CHECK(a.to_string() == "1 - z^2");
    const auto b = CyclotomicNumber::root_of_unity(5, 1) *
                   BigRational(BigInt(3), BigInt(2));
    CHECK(b.to_string() == "3/2*z");
}
