#include "cycloclock/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo::numtheory {

namespace {

void require_positive(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("argument must be >= 1");
}

} // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    require_positive(n);
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        factors.emplace_back(p, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1u);
    return factors;
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n);
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

int moebius(std::uint64_t n) {
    require_positive(n);
    int result = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

CoprimeSet coprime_residues(std::uint64_t n) {
    require_positive(n);
    CoprimeSet set{n, {}};
    if (n == 1) {
        set.residues.push_back(0);
        return set;
    }
    for (std::uint64_t p = 0; p < n; ++p)
        if (std::gcd(p, n) == 1)
            set.residues.push_back(p);
    return set;
}

long long ramanujan_sum(std::uint64_t n, long long m) {
    require_positive(n);
    const auto sn = static_cast<long long>(n);
    std::uint64_t r = static_cast<std::uint64_t>(((m % sn) + sn) % sn);
    const std::uint64_t d = std::gcd(r, n);
    const std::uint64_t k = n / d;
    const int mu = moebius(k);
    if (mu == 0) return 0;
    return mu * static_cast<long long>(euler_phi(n) / euler_phi(k));
}

exactcyc::CyclotomicNumber weighted_coprime_sum(std::uint64_t n, long long m) {
    require_positive(n);
    const auto order = static_cast<unsigned>(n);
    const auto sn = static_cast<long long>(n);
    const auto mr = static_cast<std::uint64_t>(((m % sn) + sn) % sn);
    auto sum = exactcyc::CyclotomicNumber::zero(order);
    for (std::uint64_t p : coprime_residues(n).residues) {
        if (p == 0) continue;
        const auto exponent = static_cast<long long>((p * mr) % n);
        sum = sum + exactcyc::CyclotomicNumber::root_of_unity(order, exponent) *
                        exactcyc::BigRational(static_cast<long long>(p));
    }
    return sum;
}

} // namespace cyclo::numtheory
