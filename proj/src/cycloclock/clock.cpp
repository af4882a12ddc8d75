#include "cycloclock/clock.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cyclo::clock {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> unit_phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

void check_index(unsigned i, unsigned n, const char* what) {
    if (i >= n)
        throw IndexError(std::string(what) + ": index " + std::to_string(i) +
                         " out of range for N = " + std::to_string(n));
}

// (-level * steps) mod N, safe for negative levels
long long evolution_exponent(long long level, std::uint64_t steps, unsigned n) {
    const long long sn = static_cast<long long>(n);
    const long long lm = ((level % sn) + sn) % sn;
    const long long sm = static_cast<long long>(steps % n);
    return (sn - (lm * sm) % sn) % sn;
}

} // namespace

// ---- ClockModel ----

ClockModel::ClockModel(unsigned dim, Convention convention)
    : dim_(dim), convention_(convention) {
    if (dim == 0)
        throw std::invalid_argument("clock dimension must be >= 1");
    if (convention == Convention::Symmetric && dim % 2 == 0)
        throw std::invalid_argument("symmetric convention requires odd N (N = 2j+1)");
}

long long ClockModel::level(unsigned slot) const {
    check_index(slot, dim_, "level");
    if (convention_ == Convention::ZeroBased)
        return static_cast<long long>(slot);
    return static_cast<long long>(slot) - static_cast<long long>((dim_ - 1) / 2);
}

double ClockModel::omega() const { return 2.0 * kPi / dim_; }

// ---- ExactScalar ----

ExactScalar::ExactScalar(CyclotomicNumber value, SqrtRational scale, int omega_power)
    : value_(std::move(value)), radicand_(scale.radicand()), omega_power_(omega_power) {
    value_ = value_ * scale.rational_part();
    if (value_.is_zero()) {
        radicand_ = 1;
        omega_power_ = 0;
    }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (radicand_ != o.radicand_)
        throw ScaleMismatchError("ExactScalar: sqrt scales differ");
    if (omega_power_ != o.omega_power_)
        throw ScaleMismatchError("ExactScalar: omega powers differ");
    return ExactScalar(value_ + o.value_, SqrtRational::sqrt_of(radicand_), omega_power_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator-() const {
    return ExactScalar(-value_, SqrtRational::sqrt_of(radicand_), omega_power_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    return ExactScalar(value_ * o.value_, SqrtRational::sqrt_of(radicand_ * o.radicand_),
                       omega_power_ + o.omega_power_);
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    return radicand_ == o.radicand_ && omega_power_ == o.omega_power_ && value_ == o.value_;
}

ExactScalar ExactScalar::conj() const {
    return ExactScalar(value_.conj(), SqrtRational::sqrt_of(radicand_), omega_power_);
}

std::complex<double> ExactScalar::to_complex() const {
    std::complex<double> v = value_.to_complex();
    if (radicand_ != 1)
        v *= std::sqrt(static_cast<double>(radicand_));
    if (omega_power_ != 0)
        v *= std::pow(2.0 * kPi / value_.order(), omega_power_);
    return v;
}

std::string ExactScalar::to_string() const {
    std::string core = value_.to_string();
    if (radicand_ == 1 && omega_power_ == 0)
        return core;
    std::string out = "(" + core + ")";
    if (radicand_ != 1)
        out += "*sqrt(" + std::to_string(radicand_) + ")";
    if (omega_power_ == 1)
        out += "*omega";
    else if (omega_power_ != 0)
        out += "*omega^" + std::to_string(omega_power_);
    return out;
}

// ---- ExactOperator / ExactState ----

bool ExactOperator::operator==(const ExactOperator& o) const {
    if (linalg::is_zero(matrix) && linalg::is_zero(o.matrix))
        return matrix.dim() == o.matrix.dim();
    return omega_power == o.omega_power && matrix == o.matrix;
}

ExactOperator matmul(const ExactOperator& a, const ExactOperator& b) {
    return {linalg::matmul(a.matrix, b.matrix), a.omega_power + b.omega_power};
}

ExactOperator adjoint(const ExactOperator& a) {
    return {linalg::adjoint(a.matrix), a.omega_power};
}

ExactOperator commutator(const ExactOperator& a, const ExactOperator& b) {
    return {linalg::commutator(a.matrix, b.matrix), a.omega_power + b.omega_power};
}

bool is_hermitian(const ExactOperator& a) { return adjoint(a) == a; }

ExactScalar trace(const ExactOperator& a) {
    return ExactScalar(linalg::trace(a.matrix), SqrtRational::one(), a.omega_power);
}

ComplexMatrix embed(const ExactOperator& a) {
    ComplexMatrix m = linalg::embed(a.matrix);
    if (a.omega_power != 0) {
        const double factor = std::pow(2.0 * kPi / a.matrix.at(0, 0).order(), a.omega_power);
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                m.at(i, j) *= factor;
    }
    return m;
}

bool ExactState::operator==(const ExactState& o) const {
    return scale == o.scale && omega_power == o.omega_power && vec == o.vec;
}

ExactState matvec(const ExactOperator& a, const ExactState& x) {
    return {linalg::matvec(a.matrix, x.vec), x.scale, x.omega_power + a.omega_power};
}

ExactScalar inner_product(const ExactState& x, const ExactState& y) {
    return ExactScalar(linalg::inner_product(x.vec, y.vec), x.scale * y.scale,
                       x.omega_power + y.omega_power);
}

ComplexVector embed(const ExactState& x) {
    ComplexVector v = linalg::embed(x.vec);
    double factor = x.scale.to_double();
    if (x.omega_power != 0)
        factor *= std::pow(2.0 * kPi / x.vec.at(0).order(), x.omega_power);
    for (std::size_t i = 0; i < v.dim(); ++i)
        v.at(i) *= factor;
    return v;
}

// ---- states and wavefunctions ----

std::complex<double> azimuthal_wavefunction(const ClockModel& model, unsigned n, double theta) {
    check_index(n, model.dim(), "azimuthal_wavefunction");
    return unit_phase(n * theta) / std::sqrt(2.0 * kPi);
}

ExactState pointer_state_vector(const ClockModel& model, unsigned k) {
    const unsigned n = model.dim();
    check_index(k, n, "pointer_state_vector");
    ExactVector vec(n, CyclotomicNumber::zero(n));
    for (unsigned slot = 0; slot < n; ++slot) {
        const long long e = -static_cast<long long>(k) * static_cast<long long>(slot);
        vec.at(slot) = CyclotomicNumber::root_of_unity(n, e);
    }
    return {std::move(vec), SqrtRational::inv_sqrt(n), 0};
}

ComplexVector complex_pointer_state(const ClockModel& model, unsigned k) {
    const unsigned n = model.dim();
    check_index(k, n, "complex_pointer_state");
    ComplexVector vec(n, {0.0, 0.0});
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (unsigned slot = 0; slot < n; ++slot)
        vec.at(slot) = norm * unit_phase(-2.0 * kPi * k * slot / n);
    return vec;
}

double pointer_wavefunction_closed_form(const ClockModel& model, unsigned k, double theta) {
    const unsigned n = model.dim();
    check_index(k, n, "pointer_wavefunction_closed_form");
    const double x = theta - 2.0 * kPi * k / n;
    const double norm = 1.0 / std::sqrt(2.0 * kPi * n);
    if (std::abs(std::remainder(x, 2.0 * kPi)) < 1e-12)
        return n * norm;
    return norm * std::sin(0.5 * n * x) / std::sin(0.5 * x);
}

std::complex<double> pointer_wavefunction_sum(const ClockModel& model, unsigned k, double theta) {
    const unsigned n = model.dim();
    check_index(k, n, "pointer_wavefunction_sum");
    std::complex<double> sum(0.0, 0.0);
    for (unsigned slot = 0; slot < n; ++slot)
        sum += unit_phase(-2.0 * kPi * k * slot / n) * azimuthal_wavefunction(model, slot, theta);
    return sum / std::sqrt(static_cast<double>(n));
}

// ---- operators ----

ExactOperator pointer_projector(const ClockModel& model, unsigned k) {
    const unsigned n = model.dim();
    check_index(k, n, "pointer_projector");
    ExactMatrix m(n, CyclotomicNumber::zero(n));
    const BigRational inv_n(exactcyc::BigInt(1), exactcyc::BigInt(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            const long long e = static_cast<long long>(k) *
                                (static_cast<long long>(b) - static_cast<long long>(a));
            m.at(a, b) = CyclotomicNumber::root_of_unity(n, e) * inv_n;
        }
    return {std::move(m), 0};
}

namespace {

// tau * sum of weight(k) * P_k over the given pointer indices
ExactOperator weighted_projector_sum(const ClockModel& model,
                                     const std::vector<std::uint64_t>& indices) {
    const unsigned n = model.dim();
    ExactMatrix m(n, CyclotomicNumber::zero(n));
    const BigRational inv_n(exactcyc::BigInt(1), exactcyc::BigInt(n));
    for (std::uint64_t k : indices) {
        if (k == 0) continue; // zero weight contributes nothing
        const BigRational w = BigRational(static_cast<long long>(k)) * inv_n;
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                const long long e = static_cast<long long>(k) *
                                    (static_cast<long long>(b) - static_cast<long long>(a));
                m.at(a, b) = m.at(a, b) + CyclotomicNumber::root_of_unity(n, e) * w;
            }
    }
    return {std::move(m), 0};
}

} // namespace

ExactOperator clock_time_operator(const ClockModel& model) {
    std::vector<std::uint64_t> all(model.dim());
    for (unsigned k = 0; k < model.dim(); ++k)
        all[k] = k;
    return weighted_projector_sum(model, all);
}

ExactOperator cyclotomic_time_operator(const ClockModel& model) {
    return weighted_projector_sum(model, numtheory::coprime_residues(model.dim()).residues);
}

ExactOperator hamiltonian(const ClockModel& model) {
    const unsigned n = model.dim();
    ExactMatrix m(n, CyclotomicNumber::zero(n));
    for (unsigned slot = 0; slot < n; ++slot)
        m.at(slot, slot) = CyclotomicNumber::from_integer(n, model.level(slot));
    return {std::move(m), 1};
}

ExactOperator evolution_operator(const ClockModel& model, std::uint64_t steps) {
    const unsigned n = model.dim();
    ExactMatrix m(n, CyclotomicNumber::zero(n));
    for (unsigned slot = 0; slot < n; ++slot)
        m.at(slot, slot) =
            CyclotomicNumber::root_of_unity(n, evolution_exponent(model.level(slot), steps, n));
    return {std::move(m), 0};
}

ExactOperator commutator_tc_hc(const ClockModel& model) {
    return commutator(clock_time_operator(model), hamiltonian(model));
}

ExactOperator commutator_tcyclot_hc(const ClockModel& model) {
    return commutator(cyclotomic_time_operator(model), hamiltonian(model));
}

ComplexMatrix complex_clock_time_operator(const ClockModel& model) {
    const unsigned n = model.dim();
    ComplexMatrix m(n, {0.0, 0.0});
    for (unsigned k = 1; k < n; ++k) {
        const ComplexVector v = complex_pointer_state(model, k);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                m.at(a, b) += static_cast<double>(k) * v.at(a) * std::conj(v.at(b));
    }
    return m;
}

ComplexMatrix complex_cyclotomic_time_operator(const ClockModel& model) {
    const unsigned n = model.dim();
    ComplexMatrix m(n, {0.0, 0.0});
    for (std::uint64_t p : numtheory::coprime_residues(n).residues) {
        if (p == 0) continue;
        const ComplexVector v = complex_pointer_state(model, static_cast<unsigned>(p));
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                m.at(a, b) += static_cast<double>(p) * v.at(a) * std::conj(v.at(b));
    }
    return m;
}

ComplexMatrix complex_hamiltonian(const ClockModel& model) {
    const unsigned n = model.dim();
    ComplexMatrix m(n, {0.0, 0.0});
    for (unsigned slot = 0; slot < n; ++slot)
        m.at(slot, slot) = model.level(slot) * model.omega();
    return m;
}

// ---- closed forms ----

ExactScalar commutator_tc_hc_element(const ClockModel& model, unsigned m, unsigned n,
                                     Basis /*basis*/) {
    const unsigned dim = model.dim();
    check_index(m, dim, "commutator_tc_hc_element");
    check_index(n, dim, "commutator_tc_hc_element");
    if (m == n)
        return ExactScalar::zero(dim);
    const long long d = static_cast<long long>(n) - static_cast<long long>(m);
    // i*hbar*(2*pi*i/N)(n-m) / (1 - zeta^{n-m}) = -omega*(n-m)/(1 - zeta^{n-m})
    const CyclotomicNumber denom =
        CyclotomicNumber::one(dim) - CyclotomicNumber::root_of_unity(dim, d);
    const CyclotomicNumber value = denom.inverse() * BigRational(-d);
    return ExactScalar(value, SqrtRational::one(), 1);
}

std::complex<double> commutator_tc_hc_element_complex(const ClockModel& model, unsigned m,
                                                      unsigned n) {
    const unsigned dim = model.dim();
    check_index(m, dim, "commutator_tc_hc_element_complex");
    check_index(n, dim, "commutator_tc_hc_element_complex");
    if (m == n)
        return {0.0, 0.0};
    const double d = static_cast<double>(n) - static_cast<double>(m);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> arg = 2.0 * kPi * i * d / static_cast<double>(dim);
    return i * arg / (1.0 - std::exp(arg));
}

ExactScalar cyclo_commutator_element(const ClockModel& model, unsigned l, unsigned n) {
    const unsigned dim = model.dim();
    check_index(l, dim, "cyclo_commutator_element");
    check_index(n, dim, "cyclo_commutator_element");
    const long long d = static_cast<long long>(l) - static_cast<long long>(n);
    if (d == 0)
        return ExactScalar::zero(dim);
    const CyclotomicNumber value = numtheory::weighted_coprime_sum(dim, d) *
                                   (BigRational(d) * BigRational(exactcyc::BigInt(1),
                                                                 exactcyc::BigInt(dim)));
    return ExactScalar(value, SqrtRational::one(), 1);
}

std::complex<double> cyclo_commutator_element_complex(const ClockModel& model, unsigned l,
                                                      unsigned n) {
    const unsigned dim = model.dim();
    check_index(l, dim, "cyclo_commutator_element_complex");
    check_index(n, dim, "cyclo_commutator_element_complex");
    const double d = static_cast<double>(l) - static_cast<double>(n);
    if (d == 0.0)
        return {0.0, 0.0};
    std::complex<double> sum(0.0, 0.0);
    for (std::uint64_t p : numtheory::coprime_residues(dim).residues)
        sum += static_cast<double>(p) * unit_phase(2.0 * kPi * p * d / dim);
    return model.omega() / static_cast<double>(dim) * d * sum;
}

ExactScalar matrix_element(const ExactOperator& op, const ClockModel& model, Basis basis,
                           unsigned row, unsigned col) {
    check_index(row, model.dim(), "matrix_element");
    check_index(col, model.dim(), "matrix_element");
    if (basis == Basis::Azimuthal)
        return ExactScalar(op.matrix.at(row, col), SqrtRational::one(), op.omega_power);
    const ExactState bra = pointer_state_vector(model, row);
    const ExactState ket = pointer_state_vector(model, col);
    return inner_product(bra, matvec(op, ket));
}

// ---- u-vs-v relation report ----

BasisPair basis_pair(const ClockModel& model, unsigned m, unsigned n) {
    const ExactOperator c = commutator_tc_hc(model);
    ExactScalar u = matrix_element(c, model, Basis::Azimuthal, m, n);
    ExactScalar v = matrix_element(c, model, Basis::Pointer, m, n);
    const ExactScalar phase(
        CyclotomicNumber::root_of_unity(model.dim(),
                                        static_cast<long long>(n) - static_cast<long long>(m)),
        SqrtRational::one(), 0);
    const bool phase_ok = v == phase * u;
    const bool literal = v == u;
    return {std::move(u), std::move(v), phase_ok, literal};
}

BasisRelationReport basis_relation_report(const ClockModel& model, ComplexMatrix* v_elements) {
    const unsigned dim = model.dim();
    const ExactOperator c = commutator_tc_hc(model);
    BasisRelationReport report{true, true, true, 0.0};
    std::vector<ExactState> pointers;
    pointers.reserve(dim);
    for (unsigned k = 0; k < dim; ++k)
        pointers.push_back(pointer_state_vector(model, k));
    for (unsigned n = 0; n < dim; ++n) {
        const ExactState image = matvec(c, pointers[n]);
        for (unsigned m = 0; m < dim; ++m) {
            const ExactScalar u = matrix_element(c, model, Basis::Azimuthal, m, n);
            const ExactScalar v = inner_product(pointers[m], image);
            if (v_elements)
                v_elements->at(m, n) = v.to_complex();
            const ExactScalar phase(
                CyclotomicNumber::root_of_unity(dim, static_cast<long long>(n) -
                                                         static_cast<long long>(m)),
                SqrtRational::one(), 0);
            if (!(v == phase * u))
                report.phase_relation_exact_all = false;
            const bool literal = v == u;
            if (!literal) {
                report.literal_claim_all = false;
                if (m == n)
                    report.literal_claim_diagonal = false;
            }
            report.max_literal_abs_dev =
                std::max(report.max_literal_abs_dev, std::abs(v.to_complex() - u.to_complex()));
        }
    }
    return report;
}

// ---- energetics ----

EnergyStats energy_uncertainty(const ClockModel& model) {
    const unsigned n = model.dim();
    BigRational sum1(0), sum2(0), raw(0);
    for (unsigned slot = 0; slot < n; ++slot) {
        const BigRational m(model.level(slot));
        sum1 += m;
        sum2 += m * m;
        const BigRational z(static_cast<long long>(slot));
        raw += z * z;
    }
    const BigRational inv_n(exactcyc::BigInt(1), exactcyc::BigInt(n));
    EnergyStats stats{sum1 * inv_n,
                      sum2 * inv_n - (sum1 * inv_n) * (sum1 * inv_n),
                      raw * inv_n,
                      0.0,
                      0.0,
                      0.0};
    const double w = model.omega();
    stats.mean = stats.mean_in_omega.to_double() * w;
    stats.delta = std::sqrt(stats.variance_in_omega2.to_double()) * w;
    stats.raw_second_moment = stats.raw_second_moment_in_omega2.to_double() * w * w;
    return stats;
}

// ---- time evolution ----

EvolutionSpec EvolutionSpec::uniform(const ClockModel& model, double omega0) {
    EvolutionSpec spec;
    spec.omega0 = omega0;
    const double a = 1.0 / std::sqrt(static_cast<double>(model.dim()));
    spec.amplitudes.assign(model.dim(), {a, 0.0});
    return spec;
}

ComplexVector wavefunction_evolution(const ClockModel& model, const EvolutionSpec& spec,
                                     double t) {
    const unsigned n = model.dim();
    if (spec.amplitudes.size() != n)
        throw DimMismatchError("EvolutionSpec: amplitude count != N");
    double norm2 = 0.0;
    for (const auto& a : spec.amplitudes)
        norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw NotNormalizedError("EvolutionSpec: sum |a_k|^2 != 1");
    ComplexVector phi(n, {0.0, 0.0});
    for (unsigned k = 0; k < n; ++k) {
        const double omega_k = spec.omega0 + k * model.omega();
        phi.at(k) = spec.amplitudes[k] * unit_phase(-omega_k * t);
    }
    return phi;
}

std::vector<double> pointer_overlaps(const ClockModel& model, const ComplexVector& phi) {
    const unsigned n = model.dim();
    if (phi.dim() != n)
        throw DimMismatchError("pointer_overlaps: state dimension != N");
    std::vector<double> mags(n, 0.0);
    for (unsigned k = 0; k < n; ++k) {
        const ComplexVector v = complex_pointer_state(model, k);
        mags[k] = std::abs(linalg::inner_product(v, phi));
    }
    return mags;
}

StepResult step_pointer(const ClockModel& model, unsigned k, std::uint64_t steps) {
    const unsigned n = model.dim();
    check_index(k, n, "step_pointer");
    const ExactOperator u = evolution_operator(model, steps);
    const ExactState moved = matvec(u, pointer_state_vector(model, k));
    // the expected landing index first, then the rest
    const unsigned landing = static_cast<unsigned>((k + steps % n) % n);
    for (unsigned offset = 0; offset < n; ++offset) {
        const unsigned j = (landing + offset) % n;
        const ExactState candidate = pointer_state_vector(model, j);
        if (moved == candidate)
            return {j, true, CyclotomicNumber::one(n)};
        // match up to a global unit phase (Symmetric convention)
        const CyclotomicNumber ratio = moved.vec.at(0) * candidate.vec.at(0).inverse();
        if ((ratio * ratio.conj()) == CyclotomicNumber::one(n)) {
            bool all = true;
            for (unsigned i = 0; i < n && all; ++i)
                all = moved.vec.at(i) == candidate.vec.at(i) * ratio;
            if (all && moved.scale == candidate.scale)
                return {j, false, ratio};
        }
    }
    throw std::logic_error("step_pointer: evolved state matches no pointer state");
}

// ---- general superpositions ----

SuperpositionResult superposition_expectation(const ClockModel& model,
                                              const std::vector<std::complex<double>>& coeffs) {
    const unsigned n = model.dim();
    if (coeffs.size() != n)
        throw DimMismatchError("superposition_expectation: coefficient count != N");
    double norm2 = 0.0;
    for (const auto& c : coeffs)
        norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw NotNormalizedError("superposition_expectation: sum |c_n|^2 != 1");

    // a_{ln} route: cache S_N(d) for d in (-N, N)
    const auto residues = numtheory::coprime_residues(n).residues;
    std::vector<std::complex<double>> s_cache(2 * n - 1, {0.0, 0.0});
    for (long long d = -(static_cast<long long>(n) - 1); d < static_cast<long long>(n); ++d) {
        std::complex<double> s(0.0, 0.0);
        for (std::uint64_t p : residues)
            s += static_cast<double>(p) * unit_phase(2.0 * kPi * p * d / n);
        s_cache[static_cast<std::size_t>(d + n - 1)] = s;
    }
    std::complex<double> formula(0.0, 0.0);
    for (unsigned nn = 0; nn < n; ++nn)
        for (unsigned l = 0; l < n; ++l) {
            const long long d = static_cast<long long>(l) - static_cast<long long>(nn);
            if (d == 0) continue;
            formula += std::conj(coeffs[nn]) * coeffs[l] * static_cast<double>(d) *
                       s_cache[static_cast<std::size_t>(d + n - 1)];
        }
    formula *= model.omega() / static_cast<double>(n);

    // direct matrix sandwich through the float pipeline
    const ComplexMatrix c =
        linalg::commutator(complex_cyclotomic_time_operator(model), complex_hamiltonian(model));
    ComplexVector f(n, {0.0, 0.0});
    for (unsigned i = 0; i < n; ++i)
        f.at(i) = coeffs[i];
    const ComplexVector cf = linalg::matvec(c, f);
    const std::complex<double> sandwich = linalg::inner_product(f, cf);

    return {formula, sandwich};
}

std::vector<std::complex<double>> random_normalized_coeffs(unsigned n, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("random_normalized_coeffs: n must be >= 1");
    std::mt19937_64 rng(seed);
    const auto draw = [&rng]() {
        // top 53 bits -> [0, 1), affinely mapped to [-1, 1)
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    };
    std::vector<std::complex<double>> coeffs(n);
    double norm2 = 0.0;
    for (auto& c : coeffs) {
        const double re = draw();
        const double im = draw();
        c = {re, im};
        norm2 += std::norm(c);
    }
    if (norm2 == 0.0) {
        coeffs[0] = {1.0, 0.0};
        return coeffs;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : coeffs)
        c *= inv;
    return coeffs;
}

} // namespace cyclo::clock
