#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace entlab {

using Complex       = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double      kDefaultHermiticityTol = 1e-10;
inline constexpr double      kDefaultSupportFloor   = 1e-12;
inline constexpr std::size_t kDefaultDimCap         = 4096;
inline constexpr int         kJacobiMaxSweeps       = 100;
inline constexpr double      kJacobiOffDiagRelTol   = 1e-14;

/// Dense complex matrix, row-major. Every constructor rejects NaN/Inf entries.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v); // |u><v|

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool        is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept { return data_; }

    Complex       &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] Complex       trace() const;
    [[nodiscard]] double        frobenius_norm() const noexcept;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scalar) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) noexcept { return lhs *= scalar; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) noexcept { return rhs *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t          rows_ = 0;
    std::size_t          cols_ = 0;
    std::vector<Complex> data_;
};

struct HermitianEigen {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix       eigenvectors; // columns are orthonormal eigenvectors
};

/// ||M - M^dagger||_F relative to max(1, ||M||_F).
[[nodiscard]] double hermiticity_defect(const ComplexMatrix &m);

/// Throws NotSquare / NotHermitian, otherwise returns (M + M^dagger)/2.
[[nodiscard]] ComplexMatrix symmetrized(const ComplexMatrix &m, double hermiticity_tol = kDefaultHermiticityTol);

/// Cyclic complex Jacobi rotations. Stops once the off-diagonal Frobenius
/// norm drops below 1e-14 * ||M||_F; NoConvergence after 100 sweeps.
[[nodiscard]] HermitianEigen hermitian_eigen(const ComplexMatrix &m, double hermiticity_tol = kDefaultHermiticityTol);

/// Same iteration without accumulating eigenvectors.
[[nodiscard]] std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m,
                                                        double hermiticity_tol = kDefaultHermiticityTol);

[[nodiscard]] ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t dim_cap = kDefaultDimCap);

/// Reduced operator on factor k (1-based) of an n-fold product of local_dim-dimensional spaces.
[[nodiscard]] ComplexMatrix partial_trace_keep(const ComplexMatrix &m, std::size_t local_dim, std::size_t n,
                                               std::size_t k);

/// 1 (x) ... (x) op (x) ... (x) 1 with op on factor k (1-based).
[[nodiscard]] ComplexMatrix embed_local(const ComplexMatrix &op, std::size_t n, std::size_t k,
                                        std::size_t dim_cap = kDefaultDimCap);

/// Sum of |eigenvalue|; Hermitian input only.
[[nodiscard]] double trace_norm(const ComplexMatrix &m, double hermiticity_tol = kDefaultHermiticityTol);

/// V diag(f(lambda)) V^dagger restricted to eigenvalues strictly above support_floor.
[[nodiscard]] ComplexMatrix spectral_apply(const ComplexMatrix &m, const std::function<double(double)> &f,
                                           double support_floor = kDefaultSupportFloor);

/// Tr(A B) without forming the product.
[[nodiscard]] Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// d^n, or SizeOverflow when the result exceeds cap.
[[nodiscard]] std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap);

} // namespace entlab
