#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "cycloclock.h"

namespace {

struct Clock {
    cc_clock* ptr = nullptr;
    explicit Clock(uint32_t n, cc_convention conv = CC_CONVENTION_ZERO_BASED) {
        REQUIRE(cc_clock_create(n, conv, &ptr) == CC_OK);
    }
    ~Clock() { cc_clock_free(ptr); }
};

struct Matrix {
    cc_matrix* ptr = nullptr;
    Matrix() = default;
    explicit Matrix(cc_matrix* p) : ptr(p) {}
    Matrix(const Matrix&) = delete;
    ~Matrix() { cc_matrix_free(ptr); }
};

} // namespace

TEST_CASE("version and status strings") {
    int major = -1, minor = -1, patch = -1;
    cc_version(&major, &minor, &patch);
    CHECK(major >= 1);
    CHECK(minor >= 0);
    CHECK(patch >= 0);
    CHECK(std::strcmp(cc_status_message(CC_OK), "ok") == 0);
    CHECK(std::strlen(cc_status_message(CC_ERR_ORDER_MISMATCH)) > 0);
}

TEST_CASE("clock creation and validation") {
    Clock c(5);
    uint32_t dim = 0;
    CHECK(cc_clock_dim(c.ptr, &dim) == CC_OK);
    CHECK(dim == 5);
    double omega = 0.0;
    CHECK(cc_clock_omega(c.ptr, &omega) == CC_OK);
    CHECK(omega == doctest::Approx(2.0 * 3.14159265358979 / 5.0));

    cc_clock* bad = nullptr;
    CHECK(cc_clock_create(0, CC_CONVENTION_ZERO_BASED, &bad) == CC_ERR_INVALID_ARGUMENT);
    CHECK(cc_clock_create(4, CC_CONVENTION_SYMMETRIC, &bad) == CC_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(cc_last_error()) > 0);
    CHECK(cc_clock_create(5, CC_CONVENTION_ZERO_BASED, nullptr) == CC_ERR_NULL_POINTER);
}

TEST_CASE("number theory surface") {
    uint64_t phi = 0;
    CHECK(cc_euler_phi(12, &phi) == CC_OK);
    CHECK(phi == 4);
    CHECK(cc_euler_phi(0, &phi) == CC_ERR_INVALID_ARGUMENT);

    int32_t mu = 0;
    CHECK(cc_moebius(30, &mu) == CC_OK);
    CHECK(mu == -1);

    uint64_t buf[8] = {0};
    size_t count = 0;
    CHECK(cc_coprime_residues(6, buf, 8, &count) == CC_OK);
    CHECK(count == 2);
    CHECK(buf[0] == 1);
    CHECK(buf[1] == 5);
    CHECK(cc_coprime_residues(6, buf, 1, &count) == CC_ERR_BUFFER_TOO_SMALL);
    CHECK(cc_coprime_residues(1, buf, 8, &count) == CC_OK);
    CHECK(count == 1);
    CHECK(buf[0] == 0);

    int64_t c = 0;
    CHECK(cc_ramanujan_sum(6, 2, &c) == CC_OK);
    CHECK(c == -1);

    double re = 0, im = 0;
    CHECK(cc_weighted_coprime_sum(3, 1, &re, &im) == CC_OK);
    CHECK(re == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(im == doctest::Approx(-0.8660254037844387).epsilon(1e-12));

    char text[128];
    CHECK(cc_weighted_coprime_sum_str(3, 1, text, sizeof text) == CC_OK);
    CHECK(std::string(text) == "-2 - z");
    CHECK(cc_weighted_coprime_sum_str(3, 1, text, 2) == CC_ERR_BUFFER_TOO_SMALL);

    int holds = 0;
    for (uint64_t n = 1; n <= 20; ++n)
        for (int64_t m = 0; m < static_cast<int64_t>(n); ++m) {
            CHECK(cc_ramanujan_identity_check(n, m, &holds) == CC_OK);
            CHECK(holds == 1);
        }
}

TEST_CASE("operator handles and exact equality") {
    Clock c(6);
    Matrix t, h, tcyc, comm;
    REQUIRE(cc_clock_time_operator(c.ptr, &t.ptr) == CC_OK);
    REQUIRE(cc_hamiltonian(c.ptr, &h.ptr) == CC_OK);
    REQUIRE(cc_cyclotomic_time_operator(c.ptr, &tcyc.ptr) == CC_OK);
    REQUIRE(cc_commutator(t.ptr, h.ptr, &comm.ptr) == CC_OK);

    uint32_t dim = 0;
    CHECK(cc_matrix_dim(comm.ptr, &dim) == CC_OK);
    CHECK(dim == 6);

    int hermitian = 0;
    CHECK(cc_matrix_is_hermitian(t.ptr, &hermitian) == CC_OK);
    CHECK(hermitian == 1);
    CHECK(cc_matrix_is_hermitian(h.ptr, &hermitian) == CC_OK);
    CHECK(hermitian == 1);
    CHECK(cc_matrix_is_hermitian(tcyc.ptr, &hermitian) == CC_OK);
    CHECK(hermitian == 1);

    // U(1)^dagger U(1) equals U(0) exactly
    Matrix u1, u0, u1t, prod;
    REQUIRE(cc_evolution_operator(c.ptr, 1, &u1.ptr) == CC_OK);
    REQUIRE(cc_evolution_operator(c.ptr, 0, &u0.ptr) == CC_OK);
    REQUIRE(cc_matrix_adjoint(u1.ptr, &u1t.ptr) == CC_OK);
    REQUIRE(cc_matrix_multiply(u1t.ptr, u1.ptr, &prod.ptr) == CC_OK);
    int equal = 0;
    CHECK(cc_matrix_equal(prod.ptr, u0.ptr, &equal) == CC_OK);
    CHECK(equal == 1);

    // entry access: string and embedding agree with the closed form
    char text[256];
    CHECK(cc_matrix_entry_str(t.ptr, 0, 0, text, sizeof text) == CC_OK);
    CHECK(std::string(text) == "5/2"); // tau (N-1)/2 at N = 6
    double re = 0, im = 0;
    CHECK(cc_matrix_entry(comm.ptr, 0, 1, &re, &im) == CC_OK);
    double cre = 0, cim = 0;
    CHECK(cc_classic_element(c.ptr, 0, 1, &cre, &cim) == CC_OK);
    CHECK(re == doctest::Approx(cre).epsilon(1e-10));
    CHECK(im == doctest::Approx(cim).epsilon(1e-10));
    CHECK(cc_matrix_entry(comm.ptr, 9, 0, &re, &im) == CC_ERR_INDEX);

    // order mismatch across models surfaces through the C API
    Clock c5(5);
    Matrix h5;
    REQUIRE(cc_hamiltonian(c5.ptr, &h5.ptr) == CC_OK);
    Matrix bad;
    CHECK(cc_commutator(t.ptr, h5.ptr, &bad.ptr) == CC_ERR_DIM_MISMATCH);
}

TEST_CASE("closed-form elements through the C surface") {
    Clock c2(2);
    double re = 0, im = 0;
    CHECK(cc_classic_element(c2.ptr, 0, 1, &re, &im) == CC_OK);
    CHECK(re == doctest::Approx(-3.14159265358979 / 2.0).epsilon(1e-10));
    char text[128];
    CHECK(cc_classic_element_str(c2.ptr, 0, 1, text, sizeof text) == CC_OK);
    CHECK(std::string(text) == "(-1/2)*omega");

    Clock c6(6);
    CHECK(cc_cyclotomic_element(c6.ptr, 1, 0, &re, &im) == CC_OK);
    CHECK(re == doctest::Approx((2.0 * 3.141592653589793 / 6.0) / 6.0 * 3.0).epsilon(1e-9));
    CHECK(cc_cyclotomic_element_str(c6.ptr, 1, 0, text, sizeof text) == CC_OK);
    CHECK(std::strlen(text) > 0);
    CHECK(cc_classic_element(c2.ptr, 2, 0, &re, &im) == CC_ERR_INDEX);
}

TEST_CASE("commutator tables and the basis relation") {
    Clock c(5);
    std::vector<double> closed(2 * 25, 0.0), brute(2 * 25, 0.0);
    CHECK(cc_commutator_table(c.ptr, CC_COMMUTATOR_CLASSIC, closed.data(), brute.data()) ==
          CC_OK);
    double maxdiff = 0.0;
    for (size_t i = 0; i < closed.size(); ++i)
        maxdiff = std::max(maxdiff, std::abs(closed[i] - brute[i]));
    CHECK(maxdiff < 1e-10);

    int exact = 0;
    CHECK(cc_commutator_exact_equal(c.ptr, CC_COMMUTATOR_CLASSIC, &exact) == CC_OK);
    CHECK(exact == 1);
    CHECK(cc_commutator_exact_equal(c.ptr, CC_COMMUTATOR_CYCLOTOMIC, &exact) == CC_OK);
    CHECK(exact == 1);

    std::vector<double> v_elems(2 * 25, 0.0);
    int phase = 0, literal = 0, diag = 0;
    double dev = 0.0;
    CHECK(cc_basis_relation(c.ptr, v_elems.data(), &phase, &literal, &diag, &dev) == CC_OK);
    CHECK(phase == 1);
    CHECK(literal == 0);
    CHECK(diag == 1);
    CHECK(dev > 0.1);
    // diagonal v elements vanish
    for (unsigned k = 0; k < 5; ++k) {
        CHECK(v_elems[2 * (k * 5 + k)] == 0.0);
        CHECK(v_elems[2 * (k * 5 + k) + 1] == 0.0);
    }
}

TEST_CASE("energetics, stepping, overlaps, superposition") {
    Clock sym(1001, CC_CONVENTION_SYMMETRIC);
    double mean = 1.0, delta = 0.0, raw = 0.0;
    CHECK(cc_energy_stats(sym.ptr, &mean, &delta, &raw) == CC_OK);
    CHECK(mean == 0.0);
    CHECK(std::abs(delta - 1.8137993642342178) / 1.8137993642342178 < 0.01);
    CHECK(raw > 0.0);

    Clock c(5);
    uint32_t index = 0;
    int exact = 0;
    CHECK(cc_step_pointer(c.ptr, 0, 7, &index, &exact) == CC_OK);
    CHECK(index == 2);
    CHECK(exact == 1);
    CHECK(cc_step_pointer(c.ptr, 9, 1, &index, &exact) == CC_ERR_INDEX);

    std::vector<double> mags(5, 0.0);
    CHECK(cc_evolution_overlaps(c.ptr, 0.0, 3.0, mags.data()) == CC_OK);
    CHECK(mags[3] == doctest::Approx(1.0).epsilon(1e-10));

    std::vector<double> coeffs(10, 0.0);
    CHECK(cc_random_coefficients(5, 123, coeffs.data()) == CC_OK);
    std::vector<double> coeffs2(10, 0.0);
    CHECK(cc_random_coefficients(5, 123, coeffs2.data()) == CC_OK);
    CHECK(coeffs == coeffs2);

    double fre = 0, fim = 0, sre = 0, sim = 0;
    CHECK(cc_superposition_expectation(c.ptr, coeffs.data(), &fre, &fim, &sre, &sim) == CC_OK);
    CHECK(std::hypot(fre - sre, fim - sim) < 1e-10);

    std::vector<double> unnormalized(10, 1.0);
    CHECK(cc_superposition_expectation(c.ptr, unnormalized.data(), &fre, &fim, &sre, &sim) ==
          CC_ERR_NOT_NORMALIZED);
}

TEST_CASE("pointer state surface") {
    Clock c(3);
    char text[128];
    CHECK(cc_pointer_coefficient_str(c.ptr, 1, 2, text, sizeof text) == CC_OK);
    CHECK(std::string(text) == "z"); // zeta_3^{-2} = zeta_3
    double re = 0, im = 0;
    CHECK(cc_pointer_entry(c.ptr, 1, 2, &re, &im) == CC_OK);
    CHECK(re == doctest::Approx(-0.5 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(im == doctest::Approx(0.8660254037844387 / std::sqrt(3.0)).epsilon(1e-12));
    double val = 0.0;
    CHECK(cc_pointer_wavefunction(c.ptr, 0, 0.0, &val) == CC_OK);
    CHECK(val == doctest::Approx(3.0 / std::sqrt(2.0 * 3.141592653589793 * 3.0)));
    CHECK(cc_pointer_wavefunction(c.ptr, 3, 0.0, &val) == CC_ERR_INDEX);

    double are = 0, aim = 0;
    CHECK(cc_azimuthal_wavefunction(c.ptr, 1, 0.0, &are, &aim) == CC_OK);
    CHECK(are == doctest::Approx(1.0 / std::sqrt(2.0 * 3.141592653589793)));
}
