#pragma once

#include <cstdint>
#include <vector>

#include "cycloclock/cyclotomic.hpp"

namespace cyclo::numtheory {

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function, in {-1, 0, 1}.
int moebius(std::uint64_t n);

/**
 * Residues p in [0, n) with gcd(p, n) = 1, ascending. For n = 1 the set is
 * {0} (gcd(0, 1) = 1), which keeps the coprime-restricted sums total.
 */
struct CoprimeSet {
    std::uint64_t modulus;
    std::vector<std::uint64_t> residues;
};

CoprimeSet coprime_residues(std::uint64_t n);

/// Ramanujan sum c_n(m) by Hoelder's formula mu(n/d)*phi(n)/phi(n/d),
/// d = gcd(m mod n, n).
long long ramanujan_sum(std::uint64_t n, long long m);

/// S_n(m) = sum over coprime p of p * zeta_n^{p*m}, exact in Q(zeta_n).
/// Satisfies 2*Re(S_n(m)) = n*c_n(m) for n >= 2.
exactcyc::CyclotomicNumber weighted_coprime_sum(std::uint64_t n, long long m);

} // namespace cyclo::numtheory
