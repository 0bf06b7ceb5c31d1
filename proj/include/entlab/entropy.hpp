#pragma once

#include "entlab/states.hpp"

#include <cmath>
#include <limits>
#include <span>

namespace entlab {

/// Boltzmann constant in J/K. The library default is kb = 1 (nats).
inline constexpr double kBoltzmann = 1.380649e-23;

/// Eigenvalues below this count as exact zeros (0 ln 0 = 0).
inline constexpr double kEntropyClip = 1e-12;

/// Relative entropy is +inf once Omega puts more than this weight on ker(sigma).
inline constexpr double kKernelWeightTol = 1e-8;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct EntropyValue {
    double value = 0.0; // may be +inf
    double kb    = 1.0;

    [[nodiscard]] bool   is_infinite() const noexcept { return std::isinf(value); }
    [[nodiscard]] double in_kb_units() const noexcept { return value / kb; }
};

/// -kb Tr rho ln rho.
[[nodiscard]] EntropyValue von_neumann(const DensityMatrix &rho, double kb = 1.0);

/// -kb sum lambda ln lambda over an (unvalidated) spectrum, clipped at kEntropyClip.
[[nodiscard]] double von_neumann_of_spectrum(std::span<const double> spectrum, double kb = 1.0);

/// kb ln N.
[[nodiscard]] EntropyValue boltzmann_planck(std::size_t n, double kb = 1.0);

/// kb ln(sum lambda^alpha) / (1 - alpha); alpha > 0 and alpha != 1.
[[nodiscard]] EntropyValue renyi(const DensityMatrix &rho, double alpha, double kb = 1.0);
[[nodiscard]] double       renyi_of_spectrum(std::span<const double> spectrum, double alpha, double kb = 1.0);

/// Classical entropy of a probability vector; NotNormalized on negative entries
/// or a sum further than 1e-10 from 1.
[[nodiscard]] EntropyValue shannon(std::span<const double> p, double kb = 1.0);

/// Tr(Omega (ln Omega - ln sigma)) in nats; +inf when supp(Omega) is not inside supp(sigma).
[[nodiscard]] double relative_entropy(const DensityMatrix &omega, const DensityMatrix &sigma);

void require_positive_kb(double kb);

} // namespace entlab
