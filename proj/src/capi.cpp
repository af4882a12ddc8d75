#include "cycloclock.h"

#include <complex>
#include <cstring>
#include <numbers>
#include <string>

#include "cycloclock/clock.hpp"

using cyclo::clock::ClockModel;
using cyclo::clock::Convention;
using cyclo::clock::ExactOperator;

struct cc_clock {
    ClockModel model;
};

struct cc_matrix {
    ExactOperator op;
};

namespace {

constexpr int kVersionMajor = 1;
constexpr int kVersionMinor = 0;
constexpr int kVersionPatch = 0;

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what ? what : ""; }

template <class F>
cc_status guard(F&& body) noexcept {
    try {
        return body();
    } catch (const cyclo::OrderMismatchError& e) {
        set_error(e.what());
        return CC_ERR_ORDER_MISMATCH;
    } catch (const cyclo::DimMismatchError& e) {
        set_error(e.what());
        return CC_ERR_DIM_MISMATCH;
    } catch (const cyclo::ScaleMismatchError& e) {
        set_error(e.what());
        return CC_ERR_SCALE_MISMATCH;
    } catch (const cyclo::NotNormalizedError& e) {
        set_error(e.what());
        return CC_ERR_NOT_NORMALIZED;
    } catch (const cyclo::IndexError& e) {
        set_error(e.what());
        return CC_ERR_INDEX;
    } catch (const cyclo::DivisionByZeroError& e) {
        set_error(e.what());
        return CC_ERR_DIVISION_BY_ZERO;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return CC_ERR_INDEX;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return CC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return CC_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return CC_ERR_INTERNAL;
    }
}

cc_status require(bool ok, const char* what) {
    if (ok) return CC_OK;
    set_error(what);
    return CC_ERR_NULL_POINTER;
}

cc_status copy_string(const std::string& s, char* buf, size_t capacity) {
    if (!buf) {
        set_error("output buffer is null");
        return CC_ERR_NULL_POINTER;
    }
    if (s.size() + 1 > capacity) {
        set_error(("buffer too small: need " + std::to_string(s.size() + 1) + " bytes").c_str());
        return CC_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return CC_OK;
}

Convention to_convention(cc_convention c) {
    return c == CC_CONVENTION_SYMMETRIC ? Convention::Symmetric : Convention::ZeroBased;
}

template <class F>
cc_status make_matrix(cc_matrix** out, F&& build) {
    if (auto s = require(out != nullptr, "out is null"); s != CC_OK) return s;
    return guard([&] {
        *out = new cc_matrix{build()};
        return CC_OK;
    });
}

} // namespace

extern "C" {

const char* cc_status_message(cc_status status) {
    switch (status) {
    case CC_OK: return "ok";
    case CC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CC_ERR_INDEX: return "index out of range";
    case CC_ERR_DIM_MISMATCH: return "dimension mismatch";
    case CC_ERR_ORDER_MISMATCH: return "cyclotomic order mismatch";
    case CC_ERR_SCALE_MISMATCH: return "scale mismatch";
    case CC_ERR_NOT_NORMALIZED: return "state not normalized";
    case CC_ERR_DIVISION_BY_ZERO: return "division by zero";
    case CC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CC_ERR_NULL_POINTER: return "null pointer";
    case CC_ERR_INTERNAL: return "internal error";
    }
    return "unrecognized status";
}

const char* cc_last_error(void) { return t_last_error.c_str(); }

void cc_version(int* major, int* minor, int* patch) {
    if (major) *major = kVersionMajor;
    if (minor) *minor = kVersionMinor;
    if (patch) *patch = kVersionPatch;
}

/* ---- clock model ---- */

cc_status cc_clock_create(uint32_t n, cc_convention convention, cc_clock** out) {
    if (auto s = require(out != nullptr, "out is null"); s != CC_OK) return s;
    return guard([&] {
        *out = new cc_clock{ClockModel(n, to_convention(convention))};
        return CC_OK;
    });
}

void cc_clock_free(cc_clock* clock) { delete clock; }

cc_status cc_clock_dim(const cc_clock* clock, uint32_t* out) {
    if (auto s = require(clock && out, "null argument"); s != CC_OK) return s;
    *out = clock->model.dim();
    return CC_OK;
}

cc_status cc_clock_omega(const cc_clock* clock, double* out) {
    if (auto s = require(clock && out, "null argument"); s != CC_OK) return s;
    *out = clock->model.omega();
    return CC_OK;
}

/* ---- number theory ---- */

cc_status cc_euler_phi(uint64_t n, uint64_t* out) {
    if (auto s = require(out != nullptr, "out is null"); s != CC_OK) return s;
    return guard([&] {
        *out = cyclo::numtheory::euler_phi(n);
        return CC_OK;
    });
}

cc_status cc_moebius(uint64_t n, int32_t* out) {
    if (auto s = require(out != nullptr, "out is null"); s != CC_OK) return s;
    return guard([&] {
        *out = cyclo::numtheory::moebius(n);
        return CC_OK;
    });
}

cc_status cc_coprime_residues(uint64_t n, uint64_t* buf, size_t capacity, size_t* count) {
    if (auto s = require(buf && count, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto set = cyclo::numtheory::coprime_residues(n);
        if (set.residues.size() > capacity) {
            set_error("buffer too small for coprime residues");
            return CC_ERR_BUFFER_TOO_SMALL;
        }
        std::memcpy(buf, set.residues.data(), set.residues.size() * sizeof(uint64_t));
        *count = set.residues.size();
        return CC_OK;
    });
}

cc_status cc_ramanujan_sum(uint64_t n, int64_t m, int64_t* out) {
    if (auto s = require(out != nullptr, "out is null"); s != CC_OK) return s;
    return guard([&] {
        *out = cyclo::numtheory::ramanujan_sum(n, m);
        return CC_OK;
    });
}

cc_status cc_coprime_exp_sum(uint64_t n, int64_t m, double* re, double* im) {
    if (auto s = require(re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto set = cyclo::numtheory::coprime_residues(n);
        std::complex<double> sum(0.0, 0.0);
        for (uint64_t p : set.residues) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(p) * static_cast<double>(m) /
                static_cast<double>(n);
            sum += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        *re = sum.real();
        *im = sum.imag();
        return CC_OK;
    });
}

cc_status cc_weighted_coprime_sum(uint64_t n, int64_t m, double* re, double* im) {
    if (auto s = require(re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto sum = cyclo::numtheory::weighted_coprime_sum(n, m).to_complex();
        *re = sum.real();
        *im = sum.imag();
        return CC_OK;
    });
}

cc_status cc_weighted_coprime_sum_str(uint64_t n, int64_t m, char* buf, size_t capacity) {
    return guard([&] {
        return copy_string(cyclo::numtheory::weighted_coprime_sum(n, m).to_string(), buf,
                           capacity);
    });
}

cc_status cc_ramanujan_identity_check(uint64_t n, int64_t m, int* holds) {
    if (auto s = require(holds != nullptr, "holds is null"); s != CC_OK) return s;
    return guard([&] {
        if (n == 1) {
            *holds = 1; // degenerate single-state clock, identity is vacuous
            return CC_OK;
        }
        using cyclo::exactcyc::BigRational;
        using cyclo::exactcyc::CyclotomicNumber;
        const auto sum = cyclo::numtheory::weighted_coprime_sum(n, m);
        const auto twice_re = sum + sum.conj();
        const long long c = cyclo::numtheory::ramanujan_sum(n, m);
        const auto rhs = CyclotomicNumber::from_rational(
            static_cast<unsigned>(n),
            BigRational(static_cast<long long>(n)) * BigRational(c));
        *holds = (twice_re == rhs) ? 1 : 0;
        return CC_OK;
    });
}

/* ---- states ---- */

cc_status cc_azimuthal_wavefunction(const cc_clock* clock, uint32_t n, double theta,
                                    double* re, double* im) {
    if (auto s = require(clock && re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto v = cyclo::clock::azimuthal_wavefunction(clock->model, n, theta);
        *re = v.real();
        *im = v.imag();
        return CC_OK;
    });
}

cc_status cc_pointer_coefficient_str(const cc_clock* clock, uint32_t k, uint32_t n,
                                     char* buf, size_t capacity) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return guard([&] {
        const auto state = cyclo::clock::pointer_state_vector(clock->model, k);
        if (n >= state.dim()) {
            set_error("entry index out of range");
            return CC_ERR_INDEX;
        }
        return copy_string(state.vec.at(n).to_string(), buf, capacity);
    });
}

cc_status cc_pointer_entry(const cc_clock* clock, uint32_t k, uint32_t n,
                           double* re, double* im) {
    if (auto s = require(clock && re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto state = cyclo::clock::pointer_state_vector(clock->model, k);
        if (n >= state.dim()) {
            set_error("entry index out of range");
            return CC_ERR_INDEX;
        }
        const auto embedded = cyclo::clock::embed(state);
        *re = embedded.at(n).real();
        *im = embedded.at(n).imag();
        return CC_OK;
    });
}

cc_status cc_pointer_wavefunction(const cc_clock* clock, uint32_t k, double theta, double* out) {
    if (auto s = require(clock && out, "null argument"); s != CC_OK) return s;
    return guard([&] {
        *out = cyclo::clock::pointer_wavefunction_closed_form(clock->model, k, theta);
        return CC_OK;
    });
}

/* ---- operators ---- */

cc_status cc_clock_time_operator(const cc_clock* clock, cc_matrix** out) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::clock_time_operator(clock->model); });
}

cc_status cc_hamiltonian(const cc_clock* clock, cc_matrix** out) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::hamiltonian(clock->model); });
}

cc_status cc_cyclotomic_time_operator(const cc_clock* clock, cc_matrix** out) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::cyclotomic_time_operator(clock->model); });
}

cc_status cc_evolution_operator(const cc_clock* clock, uint64_t steps, cc_matrix** out) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::evolution_operator(clock->model, steps); });
}

cc_status cc_commutator(const cc_matrix* a, const cc_matrix* b, cc_matrix** out) {
    if (auto s = require(a && b, "null operand"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::commutator(a->op, b->op); });
}

cc_status cc_matrix_adjoint(const cc_matrix* a, cc_matrix** out) {
    if (auto s = require(a != nullptr, "null operand"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::adjoint(a->op); });
}

cc_status cc_matrix_multiply(const cc_matrix* a, const cc_matrix* b, cc_matrix** out) {
    if (auto s = require(a && b, "null operand"); s != CC_OK) return s;
    return make_matrix(out, [&] { return cyclo::clock::matmul(a->op, b->op); });
}

void cc_matrix_free(cc_matrix* m) { delete m; }

cc_status cc_matrix_dim(const cc_matrix* m, uint32_t* out) {
    if (auto s = require(m && out, "null argument"); s != CC_OK) return s;
    *out = static_cast<uint32_t>(m->op.dim());
    return CC_OK;
}

cc_status cc_matrix_entry(const cc_matrix* m, uint32_t row, uint32_t col,
                          double* re, double* im) {
    if (auto s = require(m && re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        if (row >= m->op.dim() || col >= m->op.dim()) {
            set_error("matrix index out of range");
            return CC_ERR_INDEX;
        }
        const double factor =
            m->op.omega_power == 0
                ? 1.0
                : std::pow(2.0 * std::numbers::pi / m->op.matrix.at(0, 0).order(),
                           m->op.omega_power);
        const auto v = m->op.matrix.at(row, col).to_complex() * factor;
        *re = v.real();
        *im = v.imag();
        return CC_OK;
    });
}

cc_status cc_matrix_entry_str(const cc_matrix* m, uint32_t row, uint32_t col,
                              char* buf, size_t capacity) {
    if (auto s = require(m != nullptr, "matrix is null"); s != CC_OK) return s;
    return guard([&] {
        if (row >= m->op.dim() || col >= m->op.dim()) {
            set_error("matrix index out of range");
            return CC_ERR_INDEX;
        }
        const cyclo::clock::ExactScalar value(m->op.matrix.at(row, col),
                                              cyclo::exactcyc::SqrtRational::one(),
                                              m->op.omega_power);
        return copy_string(value.to_string(), buf, capacity);
    });
}

cc_status cc_matrix_equal(const cc_matrix* a, const cc_matrix* b, int* out) {
    if (auto s = require(a && b && out, "null argument"); s != CC_OK) return s;
    return guard([&] {
        *out = (a->op == b->op) ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_matrix_is_hermitian(const cc_matrix* m, int* out) {
    if (auto s = require(m && out, "null argument"); s != CC_OK) return s;
    return guard([&] {
        *out = cyclo::clock::is_hermitian(m->op) ? 1 : 0;
        return CC_OK;
    });
}

/* ---- commutator closed forms and comparisons ---- */

cc_status cc_classic_element(const cc_clock* clock, uint32_t m, uint32_t n,
                             double* re, double* im) {
    if (auto s = require(clock && re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto v = cyclo::clock::commutator_tc_hc_element_complex(clock->model, m, n);
        *re = v.real();
        *im = v.imag();
        return CC_OK;
    });
}

cc_status cc_classic_element_str(const cc_clock* clock, uint32_t m, uint32_t n,
                                 char* buf, size_t capacity) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return guard([&] {
        return copy_string(
            cyclo::clock::commutator_tc_hc_element(clock->model, m, n).to_string(), buf,
            capacity);
    });
}

cc_status cc_cyclotomic_element(const cc_clock* clock, uint32_t l, uint32_t n,
                                double* re, double* im) {
    if (auto s = require(clock && re && im, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto v = cyclo::clock::cyclo_commutator_element_complex(clock->model, l, n);
        *re = v.real();
        *im = v.imag();
        return CC_OK;
    });
}

cc_status cc_cyclotomic_element_str(const cc_clock* clock, uint32_t l, uint32_t n,
                                    char* buf, size_t capacity) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return guard([&] {
        return copy_string(cyclo::clock::cyclo_commutator_element(clock->model, l, n).to_string(),
                           buf, capacity);
    });
}

cc_status cc_commutator_table(const cc_clock* clock, cc_commutator_variant variant,
                              double* closed_form, double* brute_force) {
    if (auto s = require(clock && closed_form && brute_force, "null argument"); s != CC_OK)
        return s;
    return guard([&] {
        const auto& model = clock->model;
        const unsigned n = model.dim();
        const auto h = cyclo::clock::complex_hamiltonian(model);
        const auto t = variant == CC_COMMUTATOR_CLASSIC
                           ? cyclo::clock::complex_clock_time_operator(model)
                           : cyclo::clock::complex_cyclotomic_time_operator(model);
        const auto brute = cyclo::linalg::commutator(t, h);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                const std::complex<double> closed =
                    variant == CC_COMMUTATOR_CLASSIC
                        ? cyclo::clock::commutator_tc_hc_element_complex(model, r, c)
                        : cyclo::clock::cyclo_commutator_element_complex(model, c, r);
                const std::size_t base = 2 * (static_cast<std::size_t>(r) * n + c);
                closed_form[base] = closed.real();
                closed_form[base + 1] = closed.imag();
                brute_force[base] = brute.at(r, c).real();
                brute_force[base + 1] = brute.at(r, c).imag();
            }
        return CC_OK;
    });
}

cc_status cc_commutator_exact_equal(const cc_clock* clock, cc_commutator_variant variant,
                                    int* out) {
    if (auto s = require(clock && out, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto& model = clock->model;
        const unsigned n = model.dim();
        const auto brute = variant == CC_COMMUTATOR_CLASSIC
                               ? cyclo::clock::commutator_tc_hc(model)
                               : cyclo::clock::commutator_tcyclot_hc(model);
        bool all = true;
        for (unsigned r = 0; r < n && all; ++r)
            for (unsigned c = 0; c < n && all; ++c) {
                const auto lhs = cyclo::clock::matrix_element(brute, model,
                                                              cyclo::clock::Basis::Azimuthal,
                                                              r, c);
                const auto rhs =
                    variant == CC_COMMUTATOR_CLASSIC
                        ? cyclo::clock::commutator_tc_hc_element(model, r, c)
                        : cyclo::clock::cyclo_commutator_element(model, c, r);
                all = lhs == rhs;
            }
        *out = all ? 1 : 0;
        return CC_OK;
    });
}

// TODO: share the brute-force commutator with cc_commutator_exact_equal;
// callers that want both currently pay for the exact matmuls twice.
cc_status cc_basis_relation(const cc_clock* clock, double* v_elements,
                            int* phase_relation_exact, int* literal_equal_all,
                            int* literal_equal_diagonal, double* max_literal_dev) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return guard([&] {
        const auto& model = clock->model;
        const unsigned n = model.dim();
        cyclo::clock::ComplexMatrix table(n, {0.0, 0.0});
        const auto report = cyclo::clock::basis_relation_report(model, &table);
        if (v_elements)
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) {
                    const std::size_t base = 2 * (static_cast<std::size_t>(r) * n + c);
                    v_elements[base] = table.at(r, c).real();
                    v_elements[base + 1] = table.at(r, c).imag();
                }
        if (phase_relation_exact) *phase_relation_exact = report.phase_relation_exact_all;
        if (literal_equal_all) *literal_equal_all = report.literal_claim_all;
        if (literal_equal_diagonal) *literal_equal_diagonal = report.literal_claim_diagonal;
        if (max_literal_dev) *max_literal_dev = report.max_literal_abs_dev;
        return CC_OK;
    });
}

/* ---- energetics ---- */

cc_status cc_energy_stats(const cc_clock* clock, double* mean, double* delta,
                          double* raw_second_moment) {
    if (auto s = require(clock != nullptr, "clock is null"); s != CC_OK) return s;
    return guard([&] {
        const auto stats = cyclo::clock::energy_uncertainty(clock->model);
        if (mean) *mean = stats.mean;
        if (delta) *delta = stats.delta;
        if (raw_second_moment) *raw_second_moment = stats.raw_second_moment;
        return CC_OK;
    });
}

/* ---- time evolution ---- */

cc_status cc_step_pointer(const cc_clock* clock, uint32_t k, uint64_t steps,
                          uint32_t* index, int* exact) {
    if (auto s = require(clock && index, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto result = cyclo::clock::step_pointer(clock->model, k, steps);
        *index = result.index;
        if (exact) *exact = result.exact ? 1 : 0;
        return CC_OK;
    });
}

cc_status cc_evolution_overlaps(const cc_clock* clock, double omega0, double t,
                                double* magnitudes) {
    if (auto s = require(clock && magnitudes, "null argument"); s != CC_OK) return s;
    return guard([&] {
        const auto& model = clock->model;
        const auto spec = cyclo::clock::EvolutionSpec::uniform(model, omega0);
        const auto phi = cyclo::clock::wavefunction_evolution(model, spec, t);
        const auto mags = cyclo::clock::pointer_overlaps(model, phi);
        for (unsigned i = 0; i < model.dim(); ++i)
            magnitudes[i] = mags[i];
        return CC_OK;
    });
}

/* ---- general superpositions ---- */

cc_status cc_superposition_expectation(const cc_clock* clock, const double* coeffs,
                                       double* formula_re, double* formula_im,
                                       double* sandwich_re, double* sandwich_im) {
    if (auto s = require(clock && coeffs && formula_re && formula_im && sandwich_re &&
                             sandwich_im,
                         "null argument");
        s != CC_OK)
        return s;
    return guard([&] {
        const unsigned n = clock->model.dim();
        std::vector<std::complex<double>> c(n);
        for (unsigned i = 0; i < n; ++i)
            c[i] = {coeffs[2 * i], coeffs[2 * i + 1]};
        const auto result = cyclo::clock::superposition_expectation(clock->model, c);
        *formula_re = result.formula_value.real();
        *formula_im = result.formula_value.imag();
        *sandwich_re = result.sandwich_value.real();
        *sandwich_im = result.sandwich_value.imag();
        return CC_OK;
    });
}

cc_status cc_random_coefficients(uint32_t n, uint64_t seed, double* coeffs) {
    if (auto s = require(coeffs != nullptr, "coeffs is null"); s != CC_OK) return s;
    return guard([&] {
        const auto c = cyclo::clock::random_normalized_coeffs(n, seed);
        for (uint32_t i = 0; i < n; ++i) {
            coeffs[2 * i] = c[i].real();
            coeffs[2 * i + 1] = c[i].imag();
        }
        return CC_OK;
    });
}

} /* extern "C" */
