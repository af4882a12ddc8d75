#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cycloclock/linalg.hpp"
#include "cycloclock/numtheory.hpp"

namespace cyclo::clock {

using exactcyc::BigRational;
using exactcyc::CyclotomicNumber;
using exactcyc::SqrtRational;

using ExactMatrix = linalg::Matrix<CyclotomicNumber>;
using ExactVector = linalg::Vector<CyclotomicNumber>;
using ComplexMatrix = linalg::Matrix<std::complex<double>>;
using ComplexVector = linalg::Vector<std::complex<double>>;

/// Azimuthal index convention: levels m = 0..N-1, or m = -j..j with N = 2j+1.
enum class Convention { ZeroBased, Symmetric };

/// Which basis a matrix element refers to: azimuthal u_n or pointer v_k.
enum class Basis { Azimuthal, Pointer };

/**
 * An N-state clock in natural units: tau = 1, hbar = 1, omega = 2*pi/N.
 * The Symmetric convention requires odd N.
 */
class ClockModel {
public:
    explicit ClockModel(unsigned dim, Convention convention = Convention::ZeroBased);

    unsigned dim() const { return dim_; }
    Convention convention() const { return convention_; }

    /// Energy quantum number of azimuthal slot n (0-based): n, or n - j.
    long long level(unsigned slot) const;

    /// omega = 2*pi/(N*tau); omega*tau*N = 2*pi identically.
    double omega() const;

private:
    unsigned dim_;
    Convention convention_;
};

/**
 * Exact scalar of the form value * sqrt(radicand) * omega^p with value in
 * Q(zeta_N) and radicand a squarefree positive integer. omega = 2*pi/N is
 * kept symbolic so exact arithmetic never touches pi. Canonical form: a
 * radicand of 1 always, a zero value forces radicand 1 and p 0.
 */
class ExactScalar {
public:
    ExactScalar(CyclotomicNumber value, SqrtRational scale, int omega_power);
    static ExactScalar zero(unsigned order) {
        return ExactScalar(CyclotomicNumber::zero(order), SqrtRational::one(), 0);
    }

    const CyclotomicNumber& value() const { return value_; }
    std::uint64_t radicand() const { return radicand_; }
    int omega_power() const { return omega_power_; }
    bool is_zero() const { return value_.is_zero(); }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar operator*(const ExactScalar& o) const;
    bool operator==(const ExactScalar& o) const;

    ExactScalar conj() const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    CyclotomicNumber value_;
    std::uint64_t radicand_;
    int omega_power_;
};

/// Dense operator in the azimuthal basis times a symbolic omega^p factor.
struct ExactOperator {
    ExactMatrix matrix;
    int omega_power = 0;

    std::size_t dim() const { return matrix.dim(); }
    bool operator==(const ExactOperator& o) const;
};

ExactOperator matmul(const ExactOperator& a, const ExactOperator& b);
ExactOperator adjoint(const ExactOperator& a);
ExactOperator commutator(const ExactOperator& a, const ExactOperator& b);
bool is_hermitian(const ExactOperator& a);
ExactScalar trace(const ExactOperator& a);
ComplexMatrix embed(const ExactOperator& a);

/// Azimuthal-basis coefficients times an exact sqrt scale (e.g. 1/sqrt(N)).
struct ExactState {
    ExactVector vec;
    SqrtRational scale;
    int omega_power = 0;

    std::size_t dim() const { return vec.dim(); }
    bool operator==(const ExactState& o) const;
};

ExactState matvec(const ExactOperator& a, const ExactState& x);
ExactScalar inner_product(const ExactState& x, const ExactState& y);
ComplexVector embed(const ExactState& x);

// ---- states and wavefunctions ----

/// u_n(theta) = (2*pi)^{-1/2} e^{i n theta}. Throws IndexError unless n < N.
std::complex<double> azimuthal_wavefunction(const ClockModel& model, unsigned n, double theta);

/// v_k in the azimuthal basis: coefficients zeta_N^{-k n} at scale 1/sqrt(N).
ExactState pointer_state_vector(const ClockModel& model, unsigned k);

/// Float counterpart of pointer_state_vector.
ComplexVector complex_pointer_state(const ClockModel& model, unsigned k);

/// Dirichlet-kernel form (2*pi*N)^{-1/2} sin(N x/2)/sin(x/2), x = theta - 2*pi*k/N,
/// with the removable singularity replaced by its limit N*(2*pi*N)^{-1/2}.
double pointer_wavefunction_closed_form(const ClockModel& model, unsigned k, double theta);

/// Finite-sum route N^{-1/2} sum_n zeta^{-kn} u_n(theta); agrees with the
/// closed form in modulus, and exactly after the e^{i(N-1)x/2} phase factor.
std::complex<double> pointer_wavefunction_sum(const ClockModel& model, unsigned k, double theta);

// ---- operators ----

/// P_k = |v_k><v_k| in the azimuthal basis (entries rational/N).
ExactOperator pointer_projector(const ClockModel& model, unsigned k);

/// T_c = tau * sum_k k P_k. Diagonal entries all equal tau*(N-1)/2.
ExactOperator clock_time_operator(const ClockModel& model);

/// H_c: diagonal m*hbar*omega over the convention's index set; omega symbolic.
ExactOperator hamiltonian(const ClockModel& model);

/// exp(-i H_c t/hbar) at t = steps*tau: diagonal zeta_N^{-m*steps}, exact.
ExactOperator evolution_operator(const ClockModel& model, std::uint64_t steps);

/// T_cyclot = tau * sum over p coprime with N of p |v_p><v_p|.
ExactOperator cyclotomic_time_operator(const ClockModel& model);

/// Brute-force [T_c, H_c] via matrix arithmetic.
ExactOperator commutator_tc_hc(const ClockModel& model);

/// Brute-force [T_cyclot, H_c]; the oracle for cyclo_commutator_element.
ExactOperator commutator_tcyclot_hc(const ClockModel& model);

// Float pipeline counterparts (assembled directly from complex outer
// products; never touch the exact types).
ComplexMatrix complex_clock_time_operator(const ClockModel& model);
ComplexMatrix complex_hamiltonian(const ClockModel& model);
ComplexMatrix complex_cyclotomic_time_operator(const ClockModel& model);

// ---- closed forms ----

/**
 * Closed form of the classic commutator element: 0 for n = m, and
 * i*hbar*(2*pi*i/N)(n-m) / (1 - zeta_N^{n-m}) otherwise, evaluated exactly in
 * Q(zeta_N) as -(n-m)*(1-zeta^{n-m})^{-1} * omega. The basis flag records
 * which element the value is being claimed for; the closed form itself is
 * basis-independent (the measured u/v relation is basis_relation_report's job).
 */
ExactScalar commutator_tc_hc_element(const ClockModel& model, unsigned m, unsigned n,
                                     Basis basis = Basis::Azimuthal);

/// Same closed form evaluated directly in complex doubles.
std::complex<double> commutator_tc_hc_element_complex(const ClockModel& model, unsigned m,
                                                      unsigned n);

/// hbar*omega*(tau/N)*(l-n)*S_N(l-n), exact; the (row n, col l) element of
/// [T_cyclot, H_c] in the azimuthal basis.
ExactScalar cyclo_commutator_element(const ClockModel& model, unsigned l, unsigned n);

/// Float route of cyclo_commutator_element via a direct weighted sum.
std::complex<double> cyclo_commutator_element_complex(const ClockModel& model, unsigned l,
                                                      unsigned n);

/// <row| op |col> in the requested basis, exact.
ExactScalar matrix_element(const ExactOperator& op, const ClockModel& model, Basis basis,
                           unsigned row, unsigned col);

// ---- measured relation between the u and v matrix elements of [T_c, H_c] ----

struct BasisPair {
    ExactScalar u_element;
    ExactScalar v_element;
    bool phase_relation_exact; // v == zeta^{n-m} * u, exactly
    bool literal_equal;        // v == u, exactly
};

BasisPair basis_pair(const ClockModel& model, unsigned m, unsigned n);

struct BasisRelationReport {
    bool phase_relation_exact_all; // holds at every pair
    bool literal_claim_all;        // the phase-free equality at every pair
    bool literal_claim_diagonal;   // ... on the diagonal (always expected)
    double max_literal_abs_dev;    // max |v - u| over all pairs, embedded
};

/// When v_elements is non-null it receives the embedded <v_m|C|v_n> table.
BasisRelationReport basis_relation_report(const ClockModel& model,
                                          ComplexMatrix* v_elements = nullptr);

// ---- energetics ----

struct EnergyStats {
    BigRational mean_in_omega;              // <H> / (hbar*omega)
    BigRational variance_in_omega2;         // (Delta H)^2 / (hbar*omega)^2
    BigRational raw_second_moment_in_omega2; // (1/N) sum_{m=0}^{N-1} m^2
    double mean;              // <H> * tau/hbar
    double delta;             // Delta H * tau/hbar
    double raw_second_moment; // hbar^2 omega^2 (1/N) sum m^2, in (hbar/tau)^2
};

/// Pointer-state energy statistics, computed exactly then embedded.
/// Independent of k: every v_k averages the full spectrum uniformly.
EnergyStats energy_uncertainty(const ClockModel& model);

// ---- time evolution ----

/// Frequency offset omega_0 plus per-level amplitudes a_k (sum |a_k|^2 = 1).
struct EvolutionSpec {
    double omega0 = 0.0;
    std::vector<std::complex<double>> amplitudes;

    static EvolutionSpec uniform(const ClockModel& model, double omega0 = 0.0);
};

/// phi(t) with entries a_k e^{-i omega_k t}, omega_k = omega_0 + k*omega.
ComplexVector wavefunction_evolution(const ClockModel& model, const EvolutionSpec& spec,
                                     double t);

/// |<v_k | phi>| for k = 0..N-1.
std::vector<double> pointer_overlaps(const ClockModel& model, const ComplexVector& phi);

struct StepResult {
    unsigned index;         // pointer index reached
    bool exact;             // coefficients matched with no phase adjustment
    CyclotomicNumber phase; // unit phase such that result = phase * v_index
};

/// Apply the exact evolution operator `steps` times to v_k and identify the
/// pointer state reached. Under ZeroBased the match is exact; under Symmetric
/// the state picks up a global unit phase zeta_N^{j*steps}, reported here.
StepResult step_pointer(const ClockModel& model, unsigned k, std::uint64_t steps);

// ---- general superpositions ----

struct SuperpositionResult {
    std::complex<double> formula_value;  // hbar*omega*(tau/N) * sum conj(c_n) c_l a_{ln}
    std::complex<double> sandwich_value; // <f| [T_cyclot, H_c] |f> via matrices
};

/// Both routes to <f|[T_cyclot, H_c]|f> for |f> = sum c_n |u_n>.
/// Throws NotNormalizedError unless sum |c_n|^2 = 1 within 1e-9.
SuperpositionResult superposition_expectation(const ClockModel& model,
                                              const std::vector<std::complex<double>>& coeffs);

/// Reproducible normalized coefficients: mt19937_64, top 53 bits mapped to
/// [-1, 1) for each of the 2N real draws, then L2-normalized.
std::vector<std::complex<double>> random_normalized_coeffs(unsigned n, std::uint64_t seed);

} // namespace cyclo::clock
