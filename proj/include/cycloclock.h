/*
 * cycloclock — exact-arithmetic laboratory for the Salecker-Wigner-Peres
 * quantum clock and its cyclotomic (coprimality-restricted) extension.
 *
 * C interface to the shared library. All objects are opaque handles created
 * and destroyed through this API; every function returns a cc_status, with
 * results written through out-parameters. cc_last_error() gives a
 * thread-local detail message for the most recent failure on this thread.
 *
 * Conventions baked into the library: natural units tau = 1 and hbar = 1,
 * omega = 2*pi/N. Exact values (elements of the cyclotomic field Q(zeta_N))
 * are rendered as polynomial strings in "z" (= zeta_N = e^{2*pi*i/N}), with
 * "sqrt(r)" and "omega" factors appended where they apply.
 */

#ifndef CYCLOCLOCK_H
#define CYCLOCLOCK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
    CC_OK = 0,
    CC_ERR_INVALID_ARGUMENT = 1, /* bad configuration (e.g. symmetric with even N) */
    CC_ERR_INDEX = 2,            /* index out of range for the model dimension */
    CC_ERR_DIM_MISMATCH = 3,
    CC_ERR_ORDER_MISMATCH = 4,   /* mixed cyclotomic field orders */
    CC_ERR_SCALE_MISMATCH = 5,   /* incompatible sqrt/omega factors in exact sums */
    CC_ERR_NOT_NORMALIZED = 6,   /* state coefficients not unit-norm */
    CC_ERR_DIVISION_BY_ZERO = 7,
    CC_ERR_BUFFER_TOO_SMALL = 8,
    CC_ERR_NULL_POINTER = 9,
    CC_ERR_INTERNAL = 10
} cc_status;

typedef enum cc_convention {
    CC_CONVENTION_ZERO_BASED = 0, /* levels m = 0..N-1 */
    CC_CONVENTION_SYMMETRIC = 1   /* levels m = -j..j, N = 2j+1 (odd N only) */
} cc_convention;

typedef enum cc_commutator_variant {
    CC_COMMUTATOR_CLASSIC = 0,   /* [T_c, H_c] */
    CC_COMMUTATOR_CYCLOTOMIC = 1 /* [T_cyclot, H_c] */
} cc_commutator_variant;

/* An N-state clock model (dimension + index convention). */
typedef struct cc_clock cc_clock;

/* A dense exact operator in the azimuthal basis (entries in Q(zeta_N) times
 * a symbolic omega power). */
typedef struct cc_matrix cc_matrix;

const char* cc_status_message(cc_status status);
const char* cc_last_error(void);
void cc_version(int* major, int* minor, int* patch);

/* ---- clock model ---- */

cc_status cc_clock_create(uint32_t n, cc_convention convention, cc_clock** out);
void cc_clock_free(cc_clock* clock);
cc_status cc_clock_dim(const cc_clock* clock, uint32_t* out);
/* omega = 2*pi/N in units 1/tau */
cc_status cc_clock_omega(const cc_clock* clock, double* out);

/* ---- number theory ---- */

cc_status cc_euler_phi(uint64_t n, uint64_t* out);
cc_status cc_moebius(uint64_t n, int32_t* out);
/* Writes the ascending coprime residues of n into buf; *count receives the
 * number written. Fails with CC_ERR_BUFFER_TOO_SMALL if capacity < phi(n)
 * (1 for n = 1). */
cc_status cc_coprime_residues(uint64_t n, uint64_t* buf, size_t capacity, size_t* count);
/* Ramanujan sum c_n(m) by Hoelder's formula. */
cc_status cc_ramanujan_sum(uint64_t n, int64_t m, int64_t* out);
/* Unweighted coprime exponential sum, brute force in doubles. */
cc_status cc_coprime_exp_sum(uint64_t n, int64_t m, double* re, double* im);
/* S_n(m) = sum over coprime p of p*zeta_n^{pm}: complex embedding and exact
 * string form of the exact sum. */
cc_status cc_weighted_coprime_sum(uint64_t n, int64_t m, double* re, double* im);
cc_status cc_weighted_coprime_sum_str(uint64_t n, int64_t m, char* buf, size_t capacity);
/* Exact check of 2*Re(S_n(m)) == n*c_n(m) in cyclotomic arithmetic.
 * Vacuously true for n = 1 (degenerate single-state clock). */
cc_status cc_ramanujan_identity_check(uint64_t n, int64_t m, int* holds);

/* ---- states ---- */

/* u_n(theta) = (2*pi)^{-1/2} e^{i n theta} */
cc_status cc_azimuthal_wavefunction(const cc_clock* clock, uint32_t n, double theta,
                                    double* re, double* im);
/* Exact coefficient of |u_n> in v_k (a monomial zeta_N^{-kn} in reduced
 * form), without the 1/sqrt(N) scale. */
cc_status cc_pointer_coefficient_str(const cc_clock* clock, uint32_t k, uint32_t n,
                                     char* buf, size_t capacity);
/* Complex embedding of the full v_k entry, 1/sqrt(N) scale included. */
cc_status cc_pointer_entry(const cc_clock* clock, uint32_t k, uint32_t n,
                           double* re, double* im);
/* Dirichlet-kernel closed form of v_k(theta); removable singularity is
 * replaced by its limit N*(2*pi*N)^{-1/2}. */
cc_status cc_pointer_wavefunction(const cc_clock* clock, uint32_t k, double theta, double* out);

/* ---- operators ---- */

cc_status cc_clock_time_operator(const cc_clock* clock, cc_matrix** out);
cc_status cc_hamiltonian(const cc_clock* clock, cc_matrix** out);
cc_status cc_cyclotomic_time_operator(const cc_clock* clock, cc_matrix** out);
cc_status cc_evolution_operator(const cc_clock* clock, uint64_t steps, cc_matrix** out);
cc_status cc_commutator(const cc_matrix* a, const cc_matrix* b, cc_matrix** out);
cc_status cc_matrix_adjoint(const cc_matrix* a, cc_matrix** out);
cc_status cc_matrix_multiply(const cc_matrix* a, const cc_matrix* b, cc_matrix** out);
void cc_matrix_free(cc_matrix* m);

cc_status cc_matrix_dim(const cc_matrix* m, uint32_t* out);
/* Complex embedding of the (row, col) entry, symbolic factors applied. */
cc_status cc_matrix_entry(const cc_matrix* m, uint32_t row, uint32_t col,
                          double* re, double* im);
cc_status cc_matrix_entry_str(const cc_matrix* m, uint32_t row, uint32_t col,
                              char* buf, size_t capacity);
/* Exact equality (canonical-form comparison). */
cc_status cc_matrix_equal(const cc_matrix* a, const cc_matrix* b, int* out);
cc_status cc_matrix_is_hermitian(const cc_matrix* m, int* out);

/* ---- commutator closed forms and comparisons ---- */

/* Closed form of <u_m|[T_c,H_c]|u_n>: i*hbar*(2*pi*i/N)(n-m)/(1-zeta^{n-m}),
 * 0 on the diagonal. Exact string and complex embedding. */
cc_status cc_classic_element(const cc_clock* clock, uint32_t m, uint32_t n,
                             double* re, double* im);
cc_status cc_classic_element_str(const cc_clock* clock, uint32_t m, uint32_t n,
                                 char* buf, size_t capacity);
/* Closed form hbar*omega*(tau/N)*(l-n)*S_N(l-n) of the cyclotomic commutator
 * element at (row n, col l) in the azimuthal basis. */
cc_status cc_cyclotomic_element(const cc_clock* clock, uint32_t l, uint32_t n,
                                double* re, double* im);
cc_status cc_cyclotomic_element_str(const cc_clock* clock, uint32_t l, uint32_t n,
                                    char* buf, size_t capacity);

/* Fill two row-major N*N complex tables (interleaved re, im; each buffer
 * must hold 2*N*N doubles): the closed form and the brute-force commutator,
 * both through the floating pipeline. */
cc_status cc_commutator_table(const cc_clock* clock, cc_commutator_variant variant,
                              double* closed_form, double* brute_force);
/* 1 iff the exact closed form equals the exact brute-force element for every
 * pair (coefficient-level equality in Q(zeta_N)). */
cc_status cc_commutator_exact_equal(const cc_clock* clock, cc_commutator_variant variant,
                                    int* out);

/* Measured relation between the u- and v-basis elements of [T_c, H_c].
 * v_elements (2*N*N doubles, interleaved) receives <v_m|C|v_n>; the flags
 * report whether v == zeta^{n-m} * u exactly everywhere, whether the
 * literal u == v claim holds everywhere / on the diagonal, and the largest
 * |v - u| deviation. Any output pointer may be NULL to skip it. */
cc_status cc_basis_relation(const cc_clock* clock, double* v_elements,
                            int* phase_relation_exact, int* literal_equal_all,
                            int* literal_equal_diagonal, double* max_literal_dev);

/* ---- energetics ---- */

/* Pointer-state energy statistics in natural units (independent of k):
 * mean = <H_c>*tau/hbar, delta = Delta H_c*tau/hbar, raw_second_moment =
 * hbar^2 omega^2 (1/N) sum_{m=0}^{N-1} m^2 in (hbar/tau)^2 (the zero-based
 * second moment ~ N^2/3, distinct from the variance). NULL skips an output. */
cc_status cc_energy_stats(const cc_clock* clock, double* mean, double* delta,
                          double* raw_second_moment);

/* ---- time evolution ---- */

/* Apply the exact evolution operator `steps` times to v_k. *index receives
 * the pointer state reached; *exact is 1 when coefficients match with no
 * global phase (always, under the zero-based convention). */
cc_status cc_step_pointer(const cc_clock* clock, uint32_t k, uint64_t steps,
                          uint32_t* index, int* exact);
/* Overlaps |<v_k|phi(t)>| for k = 0..N-1 with uniform amplitudes
 * a_k = N^{-1/2} and omega_k = omega0 + 2*pi*k/(N*tau). Buffer holds N. */
cc_status cc_evolution_overlaps(const cc_clock* clock, double omega0, double t,
                                double* magnitudes);

/* ---- general superpositions ---- */

/* coeffs: 2*N doubles, interleaved re, im, unit norm within 1e-9. Returns
 * both routes to <f|[T_cyclot, H_c]|f>: the a_{ln} weighted-sum formula and
 * the direct matrix sandwich. */
cc_status cc_superposition_expectation(const cc_clock* clock, const double* coeffs,
                                       double* formula_re, double* formula_im,
                                       double* sandwich_re, double* sandwich_im);
/* Reproducible normalized coefficients (mt19937_64; each of the 2*N draws
 * maps the top 53 bits to [-1, 1), then the vector is L2-normalized).
 * Writes 2*N doubles, interleaved re, im. */
cc_status cc_random_coefficients(uint32_t n, uint64_t seed, double* coeffs);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CYCLOCLOCK_H */
