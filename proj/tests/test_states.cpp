#include <cmath>

#include "doctest.h"
#include "esdlab/measures.hpp"
#include "esdlab/states.hpp"
#include "test_support.hpp"

using namespace esdlab;

namespace {

double vector_norm(const Matrix& psi) {
    double s = 0.0;
    for (std::size_t i = 0; i < psi.rows(); ++i) s += std::norm(psi(i, 0));
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("StateId parsing round-trips and validates") {
    CHECK(StateId::parse("w:3").kind == StateKind::W);
    CHECK(StateId::parse("w:3").n_qubits == 3);
    CHECK(StateId::parse("ghz:4").n_qubits == 4);
    CHECK(StateId::parse("cluster4").n_qubits == 4);
    CHECK(StateId::parse("w:5").to_string() == "w:5");

    CHECK_THROWS(StateId::parse("w:1"));
    CHECK_THROWS(StateId::parse("ghz:x"));
    CHECK_THROWS(StateId::parse("bell"));
    CHECK_THROWS(StateId::parse("w:3junk"));
}

TEST_CASE("W3 amplitudes sit on the single-excitation indices") {
    const Matrix psi = make_pure(StateId::w(3));
    const double amp = 1.0 / std::sqrt(3.0);
    CHECK(psi(1, 0).real() == doctest::Approx(amp).epsilon(1e-15));  // |001>
    CHECK(psi(2, 0).real() == doctest::Approx(amp).epsilon(1e-15));  // |010>
    CHECK(psi(4, 0).real() == doctest::Approx(amp).epsilon(1e-15));  // |100>
    CHECK(std::abs(psi(0, 0)) == 0.0);
    CHECK(std::abs(psi(7, 0)) == 0.0);
}

TEST_CASE("cluster state amplitude pattern") {
    const Matrix psi = make_pure(StateId::cluster4());
    CHECK(psi(0, 0).real() == doctest::Approx(0.5));
    CHECK(psi(3, 0).real() == doctest::Approx(0.5));
    CHECK(psi(12, 0).real() == doctest::Approx(0.5));
    CHECK(psi(15, 0).real() == doctest::Approx(-0.5));
    int nonzero = 0;
    for (std::size_t i = 0; i < 16; ++i)
        if (std::abs(psi(i, 0)) > 0.0) ++nonzero;
    CHECK(nonzero == 4);
}

TEST_CASE("GHZ2 is the Bell state") {
    const Matrix psi = make_pure(StateId::ghz(2));
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(psi(0, 0).real() == doctest::Approx(amp));
    CHECK(psi(3, 0).real() == doctest::Approx(amp));
    CHECK(std::abs(psi(1, 0)) + std::abs(psi(2, 0)) == 0.0);
}

TEST_CASE("factory states are unit norm") {
    for (const char* id : {"w:2", "w:3", "w:6", "ghz:2", "ghz:5", "cluster4"})
        CHECK(vector_norm(make_pure(StateId::parse(id))) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("density_from_pure basics") {
    Matrix zero_state(2, 1);
    zero_state(0, 0) = 1.0;
    const Matrix rho0 = density_from_pure(zero_state);
    CHECK(rho0(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho0(1, 1)) == 0.0);

    const Matrix rho_w = density_from_pure(make_pure(StateId::w(3)));
    CHECK(rho_w.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((rho_w * rho_w).trace().real() == doctest::Approx(1.0).epsilon(1e-13));

    // outer-product expansion: the |0000><1111| corner of the cluster state
    const Matrix rho_c = density_from_pure(make_pure(StateId::cluster4()));
    CHECK(rho_c(0, 15).real() == doctest::Approx(-0.25).epsilon(1e-15));

    Matrix unnormalized(2, 1);
    unnormalized(0, 0) = 0.5;
    CHECK_THROWS(density_from_pure(unnormalized));
}

TEST_CASE("W states are permutation invariant") {
    for (std::size_t n : {3u, 4u}) {
        QubitRegister reg(n);
        const Matrix rho = density_from_pure(make_pure(StateId::w(n)));
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::swap(order[0], order[n - 1]);
        CHECK(test::max_entry_diff(permute_qubits(rho, reg, order), rho) < 1e-14);
        std::rotate(order.begin(), order.begin() + 1, order.end());
        CHECK(test::max_entry_diff(permute_qubits(rho, reg, order), rho) < 1e-14);
    }
}

TEST_CASE("cluster state symmetry: ab and cd swaps only") {
    QubitRegister reg(4);
    const Matrix rho = density_from_pure(make_pure(StateId::cluster4()));
    CHECK(test::max_entry_diff(permute_qubits(rho, reg, {1, 0, 2, 3}), rho) < 1e-14);
    CHECK(test::max_entry_diff(permute_qubits(rho, reg, {0, 1, 3, 2}), rho) < 1e-14);
    CHECK(test::max_entry_diff(permute_qubits(rho, reg, {0, 2, 1, 3}), rho) > 0.1);
}

TEST_CASE("pairwise reductions of the pure cluster state are separable") {
    QubitRegister reg(4);
    const Matrix rho = density_from_pure(make_pure(StateId::cluster4()));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(pairwise_concurrence(rho, reg, i, j) == 0.0);
}
