#include "entlab/error.hpp"
#include "entlab/matrix.hpp"
#include "entlab/states.hpp"
#include "unit/support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace entlab;
using entlab::testing::max_abs_diff;
using entlab::testing::random_general;
using entlab::testing::random_hermitian;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch(const Error &e) {
        return e.kind();
    }
    FAIL("expected an entlab::Error");
    return ErrorKind::InvalidArgument;
}

double eigen_residual(const ComplexMatrix &m, const HermitianEigen &e) {
    const auto   &v = e.eigenvectors;
    ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(e.eigenvalues) * v.adjoint();
    return (rebuilt - m).frobenius_norm();
}

} // namespace

TEST_CASE("constructors reject malformed input") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(nan, 0)}), Error);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), Error);
}

TEST_CASE("hermitian_eigen on small examples") {
    SUBCASE("Pauli X") {
        const auto e = hermitian_eigen({{0.0, 1.0}, {1.0, 0.0}});
        CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("identity") {
        const auto e = hermitian_eigen(ComplexMatrix::identity(3));
        for(double v : e.eigenvalues) CHECK(v == 1.0);
        CHECK((e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::identity(3)).frobenius_norm() < 1e-14);
    }
    SUBCASE("complex off-diagonal") {
        // lambda^2 - 4 lambda + 3 = 0
        const Complex i(0.0, 1.0);
        const ComplexMatrix m{{2.0, i}, {-i, 2.0}};
        const auto          e = hermitian_eigen(m);
        CHECK(std::abs(e.eigenvalues[0] - 1.0) < 1e-14);
        CHECK(std::abs(e.eigenvalues[1] - 3.0) < 1e-14);
        CHECK(eigen_residual(m, e) < 1e-13);
    }
}

TEST_CASE("hermitian_eigen errors") {
    CHECK(kind_of([] { (void)hermitian_eigen(ComplexMatrix(2, 3)); }) == ErrorKind::NotSquare);
    CHECK(kind_of([] { (void)hermitian_eigen({{0.0, 1.0}, {0.0, 0.0}}); }) == ErrorKind::NotHermitian);
}

TEST_CASE("eigen roundtrip over 1000 random Hermitian matrices") {
    Rng    rng(20240601);
    double worst_residual = 0.0, worst_orth = 0.0;
    for(int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 1 + trial % 8;
        const auto        m = random_hermitian(d, rng);
        const auto        e = hermitian_eigen(m);
        REQUIRE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
        worst_residual = std::max(worst_residual, eigen_residual(m, e) / std::max(1.0, m.frobenius_norm()));
        const auto gram = e.eigenvectors.adjoint() * e.eigenvectors;
        worst_orth      = std::max(worst_orth, (gram - ComplexMatrix::identity(d)).frobenius_norm() / double(d));
        // eigenvalue-only path agrees with the full decomposition
        const auto values = hermitian_eigenvalues(m);
        REQUIRE(max_abs_diff(values, e.eigenvalues) < 1e-10 * std::max(1.0, m.frobenius_norm()));
    }
    CHECK(worst_residual <= 1e-10);
    CHECK(worst_orth <= 1e-10);
}

TEST_CASE("eigenvalue sum equals trace and handles degeneracy") {
    // U diag(1,1,2) U^dagger has a degenerate pair
    Rng           rng(7);
    const auto    g = random_general(3, 3, rng);
    const auto    h = g + g.adjoint();
    const auto    basis = hermitian_eigen(h).eigenvectors;
    const double  diag[] = {1.0, 1.0, 2.0};
    const auto    m = basis * ComplexMatrix::diagonal(diag) * basis.adjoint();
    const auto    e = hermitian_eigen(symmetrized(m));
    CHECK(std::abs(e.eigenvalues[0] - 1.0) < 1e-12);
    CHECK(std::abs(e.eigenvalues[1] - 1.0) < 1e-12);
    CHECK(std::abs(e.eigenvalues[2] - 2.0) < 1e-12);
}

TEST_CASE("kron examples") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    const double ab[] = {2.0, 3.0}, cd[] = {5.0, 7.0}, expect[] = {10.0, 14.0, 15.0, 21.0};
    CHECK(kron(ComplexMatrix::diagonal(ab), ComplexMatrix::diagonal(cd)) == ComplexMatrix::diagonal(expect));

    Rng        rng(11);
    const auto a = random_general(3, 3, rng), b = random_general(3, 3, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);

    // index convention (i rB + k, j cB + l)
    const auto c = random_general(2, 3, rng), d = random_general(3, 2, rng);
    const auto k = kron(c, d);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for(std::size_t i = 0; i < 2; ++i)
        for(std::size_t j = 0; j < 3; ++j)
            for(std::size_t p = 0; p < 3; ++p)
                for(std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == c(i, j) * d(p, q));
}

TEST_CASE("kron associativity and overflow") {
    Rng        rng(12);
    const auto a = random_general(2, 2, rng), b = random_general(3, 3, rng), c = random_general(2, 2, rng);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    CHECK(kind_of([] { (void)kron(ComplexMatrix::identity(64), ComplexMatrix::identity(65)); }) ==
          ErrorKind::SizeOverflow);
    CHECK(kind_of([] { (void)checked_power(3, 8, 4096); }) == ErrorKind::SizeOverflow);
    CHECK(checked_power(3, 7, 4096) == 2187);
}

TEST_CASE("partial_trace_keep") {
    SUBCASE("Bell projector gives I/2") {
        const double s = 1.0 / std::sqrt(2.0);
        const ComplexVector bell{s, 0.0, 0.0, s};
        const auto          p = ComplexMatrix::outer(bell, bell);
        for(std::size_t k : {1u, 2u}) {
            const auto r = partial_trace_keep(p, 2, 2, k);
            CHECK(max_abs_diff(r, 0.5 * ComplexMatrix::identity(2)) < 1e-15);
        }
    }
    SUBCASE("uniform product") {
        const auto m = (1.0 / 27.0) * ComplexMatrix::identity(27);
        for(std::size_t k = 1; k <= 3; ++k)
            CHECK(max_abs_diff(partial_trace_keep(m, 3, 3, k), (1.0 / 3.0) * ComplexMatrix::identity(3)) < 1e-15);
    }
    SUBCASE("kron consistency on random density matrices") {
        for(std::uint64_t t = 0; t < 60; ++t) {
            const std::size_t d = 2 + t % 3;
            const auto        a = random_density(d, d, 3 * t).single_block();
            const auto        b = random_density(d, 1 + t % d, 3 * t + 1).single_block();
            const auto        c = random_density(d, d, 3 * t + 2).single_block();
            const auto        m = kron(kron(a, b), c);
            CHECK(max_abs_diff(partial_trace_keep(m, d, 3, 1), a) <= 1e-12);
            CHECK(max_abs_diff(partial_trace_keep(m, d, 3, 2), b) <= 1e-12);
            CHECK(max_abs_diff(partial_trace_keep(m, d, 3, 3), c) <= 1e-12);
            // unnormalized factor: keep-index returns the factor times the other traces
            const auto scaled = kron(a, 2.5 * b);
            CHECK(max_abs_diff(partial_trace_keep(scaled, d, 2, 1), 2.5 * a) <= 1e-12);
        }
    }
    SUBCASE("errors") {
        CHECK(kind_of([] { (void)partial_trace_keep(ComplexMatrix::identity(4), 2, 2, 3); }) ==
              ErrorKind::IndexOutOfRange);
        CHECK(kind_of([] { (void)partial_trace_keep(ComplexMatrix::identity(5), 2, 2, 1); }) ==
              ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("embed_local places the operator on factor k") {
    const double z[] = {1.0, -1.0};
    const auto   op  = ComplexMatrix::diagonal(z);
    const auto   e   = embed_local(op, 3, 2);
    CHECK(max_abs_diff(e, kron(kron(ComplexMatrix::identity(2), op), ComplexMatrix::identity(2))) == 0.0);
}

TEST_CASE("trace_norm") {
    const double half[] = {0.5, -0.5};
    CHECK(trace_norm(ComplexMatrix::diagonal(half)) == doctest::Approx(1.0));
    const double r[] = {1.0, 0.0}, s[] = {0.5, 0.5};
    CHECK(trace_norm(ComplexMatrix::diagonal(r) - ComplexMatrix::diagonal(s)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)trace_norm({{0.0, 1.0}, {0.0, 0.0}}), Error);

    Rng rng(5);
    for(int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + trial % 6;
        const auto        a = random_hermitian(d, rng), b = random_hermitian(d, rng);
        const double      lambda = rng.normal();
        CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
        CHECK(std::abs(trace_norm(lambda * a) - std::abs(lambda) * trace_norm(a)) <= 1e-10 * (1 + trace_norm(a)));
    }
}

TEST_CASE("spectral_apply") {
    Rng        rng(3);
    const auto m = random_hermitian(5, rng);
    CHECK(max_abs_diff(spectral_apply(m, [](double x) { return x; }, -1e300), m) < 1e-10);

    const auto pi4  = 0.25 * ComplexMatrix::identity(4);
    const auto logs = spectral_apply(pi4, [](double x) { return std::log(x); });
    CHECK(max_abs_diff(logs, std::log(0.25) * ComplexMatrix::identity(4)) < 1e-14);

    const double d[] = {0.5, 0.3, 0.2}, sq[] = {0.25, 0.09, 0.04};
    CHECK(max_abs_diff(spectral_apply(ComplexMatrix::diagonal(d), [](double x) { return x * x; }),
                       ComplexMatrix::diagonal(sq)) < 1e-15);

    // kernel directions are excluded from the support
    const double p[] = {1.0, 0.0};
    const auto   l   = spectral_apply(ComplexMatrix::diagonal(p), [](double x) { return std::log(x) - 1.0; });
    CHECK(std::abs(l(0, 0) + 1.0) < 1e-15);
    CHECK(l(1, 1) == Complex(0.0));
}

TEST_CASE("trace_of_product matches the explicit product") {
    Rng        rng(8);
    const auto a = random_general(4, 4, rng), b = random_general(4, 4, rng);
    CHECK(std::abs(trace_of_product(a, b) - (a * b).trace()) < 1e-12);
}
