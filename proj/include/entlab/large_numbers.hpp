#pragma once

#include "entlab/bignat.hpp"
#include "entlab/entropy.hpp"
#include "entlab/states.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace entlab {

/// Symbol counts m_j = n r_j of an exact spectrum; n must be a multiple of the
/// common denominator.
class TypeClass {
  public:
    /// NotMultiple unless n is a positive multiple of s.common_denominator().
    TypeClass(const RationalSpectrum &s, std::uint64_t n);

    [[nodiscard]] std::uint64_t                  n() const noexcept { return n_; }
    [[nodiscard]] std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    [[nodiscard]] const RationalSpectrum        &spectrum() const noexcept { return spectrum_; }

  private:
    std::uint64_t              n_;
    std::vector<std::uint64_t> counts_;
    RationalSpectrum           spectrum_;
};

/// (sum m)! / prod m!  -- exact. Zero counts are allowed here.
[[nodiscard]] BigNat multinomial(std::span<const std::uint64_t> counts);
[[nodiscard]] BigNat multinomial(const TypeClass &tc);

/// (kb / n) ln multinomial(tc).
[[nodiscard]] double type_class_entropy_rate(const TypeClass &tc, double kb = 1.0);

struct ConvergenceRow {
    std::uint64_t n      = 0;
    double        rate   = 0.0; // (1/n) ln multinomial
    double        target = 0.0; // Shannon entropy of the spectrum
    double        gap    = 0.0; // target - rate
    double        bound  = 0.0; // rank * ln(n + 1) / n

    /// -1e-12 <= gap <= bound + 1e-12 (all quantities in the same kb units).
    [[nodiscard]] bool satisfies_sandwich() const noexcept;
};

/// One row per multiple of the common denominator up to n_max.
[[nodiscard]] std::vector<ConvergenceRow> convergence_table(const RationalSpectrum &s, std::uint64_t n_max,
                                                            double kb = 1.0);

/// Uniform state on the span of all length-n product basis strings whose
/// symbol counts equal the type class of s. Basis strings are enumerated
/// lexicographically with symbol j the j-th largest eigenvalue of s and the
/// first factor most significant.
[[nodiscard]] DensityMatrix build_omega(const RationalSpectrum &s, std::uint64_t n,
                                        std::size_t dim_cap = kDefaultDimCap);

/// max_k || omega(k) - rho ||_1 where rho = diag(s).
[[nodiscard]] double verify_marginals(const DensityMatrix &omega, const RationalSpectrum &s, std::uint64_t n);

struct LOperatorIdentity {
    double lhs = 0.0; // Tr(Omega L),  L = sum_k (ln rho)_k
    double rhs = 0.0; // n Tr(rho ln rho)
};

inline constexpr double kMarginalTol = 1e-8;

/// MarginalViolation when verify_marginals exceeds 1e-8.
[[nodiscard]] LOperatorIdentity l_operator_check(const DensityMatrix &omega, const RationalSpectrum &s,
                                                 std::uint64_t n);

struct KleinBound {
    double s_omega          = 0.0; // S(Omega)
    double n_times_svn      = 0.0; // n S(rho)
    double relative_entropy = 0.0; // Tr Omega (ln Omega - ln rho^{(x)n}), nats
    double kb               = 1.0;

    /// S(Omega) <= n S(rho) + 1e-9 kb
    [[nodiscard]] bool holds() const noexcept { return s_omega <= n_times_svn + 1e-9 * kb; }
};

[[nodiscard]] KleinBound klein_bound_check(const DensityMatrix &omega, const RationalSpectrum &s, std::uint64_t n,
                                           double kb = 1.0);

/// Uniform state on span{uud, udu, duu, sqrt(2/3) uuu + e^{i phase} sqrt(1/3) ddd} in C^8.
[[nodiscard]] DensityMatrix augmented_omega(double phase);

struct BracketRow {
    std::uint64_t base     = 0; // N
    std::uint64_t exponent = 0; // n
    std::uint64_t m        = 0; // 2^m <= N^n < 2^(m+1)
    bool          lhs_ok   = false;
    bool          rhs_ok   = false;
    double        rate     = 0.0; // (m / n) ln 2
};

/// m from the exact bit length of N^n; both sides re-checked with BigNat comparisons.
[[nodiscard]] BracketRow theorem1_bracket(std::uint64_t base, std::uint64_t exponent);

/// Fraction of trials in which every symbol count lands in
/// [(n - c sqrt n) r_i, (n + c sqrt n) r_i]. Trial t uses Rng::substream(seed, t).
[[nodiscard]] double concentration_sample(const RationalSpectrum &s, std::uint64_t n, std::uint64_t trials, double c,
                                          std::uint64_t seed);

using DimGrowth = std::function<BigNat(std::uint64_t)>;

/// 2^(N^2): super-exponential growth, the sequence diverges.
[[nodiscard]] BigNat growth_corrected(std::uint64_t big_n);
/// N^2: the excess (3 ln N)/N vanishes and the sequence converges.
[[nodiscard]] BigNat growth_paper(std::uint64_t big_n);

struct SemicontinuityRow {
    std::uint64_t big_n          = 0;
    double        trace_distance = 0.0; // ||rho(N) - rho||_1 = 2/N
    double        entropy        = 0.0; // S(rho(N)) in nats
    double        excess         = 0.0; // (ln N + ln D) / N
};

/// Closed-form spectra of rho(N) = rho - |phi_1><phi_1|/N + pi(D)/N with D = growth(N).
[[nodiscard]] std::vector<SemicontinuityRow> semicontinuity_sequence(const RationalSpectrum &s,
                                                                     std::span<const std::uint64_t> big_ns,
                                                                     const DimGrowth &growth = growth_corrected);

} // namespace entlab
