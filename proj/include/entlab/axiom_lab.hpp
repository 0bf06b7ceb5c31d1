#pragma once

#include "entlab/entropy.hpp"
#include "entlab/large_numbers.hpp"
#include "entlab/random.hpp"
#include "entlab/states.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace entlab {

enum class MajorizationRelation {
    MoreMixed, // a is majorized by b: every partial sum of a <= that of b
    LessMixed,
    Equal,
    Incomparable,
};

std::string_view to_string(MajorizationRelation r) noexcept;

struct MajorizationVerdict {
    MajorizationRelation relation           = MajorizationRelation::Equal;
    double               max_partial_sum_gap = 0.0; // max_k |A_k - B_k|
    std::vector<double>  partial_sums_a;
    std::vector<double>  partial_sums_b;
};

inline constexpr double kMajorizationTol = 1e-12;

/// Compares descending partial sums after zero padding. A strict relation
/// needs some partial-sum gap larger than tol; spectra equal within tol
/// (elementwise or in every partial sum) are Equal. NotNormalized when either
/// input misses unit sum by more than max(tol, 1e-10).
[[nodiscard]] MajorizationVerdict majorizes(std::span<const double> a, std::span<const double> b,
                                            double tol = kMajorizationTol);

struct AxiomReport {
    std::string   axiom;
    std::uint64_t trials        = 0;
    double        max_violation = 0.0; // in units of kb
    double        tolerance     = 0.0;
    bool          pass          = false;
};

inline constexpr double kAxiomTolA = 1e-9;
inline constexpr double kAxiomTolB = 1e-9;
inline constexpr double kAxiomTolC = 1e-12;
inline constexpr double kAxiomTolD = 1e-9;

/// Axiom A: S(rho (x) |psi><psi|) = S(rho) = S(|psi><psi| (x) rho), both orders.
[[nodiscard]] AxiomReport check_axiom_A(const DensityMatrix &rho, std::span<const Complex> psi, double kb = 1.0,
                                        std::size_t dim_cap = kDefaultDimCap);

/// Axiom B: S(U rho U^dagger) = S(rho) for block-local random unitaries.
[[nodiscard]] AxiomReport check_axiom_B(const DensityMatrix &rho, std::uint64_t seed, std::uint64_t trials,
                                        double kb = 1.0);

/// Axiom C: S(pi(M)) - S(pi(N)) = kb ln(M/N) > 0 for M > N.
[[nodiscard]] AxiomReport check_axiom_C(std::size_t m, std::size_t n, double kb = 1.0,
                                        std::size_t dim_cap = kDefaultDimCap);

/// Axiom D: S(rho^{(x)n}) = n S(rho).
[[nodiscard]] AxiomReport check_axiom_D(const DensityMatrix &rho, std::size_t n, double kb = 1.0,
                                        std::size_t dim_cap = kDefaultDimCap);

/// Folds per-case reports of one axiom into a single report.
[[nodiscard]] AxiomReport combine(std::span<const AxiomReport> reports);

using SpectrumFunctional = std::function<double(std::span<const double>)>;

struct SchurScan {
    std::uint64_t violations = 0;
    double        max_gap    = 0.0; // largest f(sigma) - f(rho) observed
};

/// Draws sigma at random and rho = T sigma with T a convex mixture of at most
/// d random permutations, so rho is more mixed than sigma; counts trials with
/// f(rho) < f(sigma) - 1e-10.
[[nodiscard]] SchurScan schur_concavity_scan(const SpectrumFunctional &f, std::uint64_t trials, std::uint64_t seed);

/// Random doubly-stochastic image of p (Birkhoff mixture of permutations).
[[nodiscard]] std::vector<double> birkhoff_mix(std::span<const double> p, Rng &rng);

/// Random probability vector of length d.
[[nodiscard]] std::vector<double> random_probability(std::size_t d, Rng &rng);

struct UhlmannStep {
    double              epsilon = 0.0;
    double              entropy = 0.0;
    std::vector<double> spectrum; // sigma_k, descending
};

/// sigma_k moves eps_k = 2^{-k} r_min from the smallest to the largest
/// eigenvalue (k = 1..steps), so rho is more mixed than every sigma_k and the
/// entropies increase towards S(rho). A pure rho yields the constant sequence.
[[nodiscard]] std::vector<UhlmannStep> uhlmann_sup_approx(const DensityMatrix &rho, std::size_t steps,
                                                          double kb = 1.0);

struct RenyiDiscrimination {
    double        alpha                = 0.0;
    double        renyi                = 0.0;
    double        axiom_e_limit        = 0.0; // Shannon entropy of s
    std::uint64_t n_used               = 0;   // largest admissible n <= n_max
    double        rate_at_n            = 0.0; // (1/n) ln multinomial
    double        bound_at_n           = 0.0; // rank ln(n+1)/n
    double        separation           = 0.0; // |renyi - axiom_e_limit|
    double        additivity_violation = 0.0; // |S_a(rho (x) rho) - 2 S_a(rho)|
    double        qlb_violation        = 0.0; // max_N |S_a(pi(N)) - ln N|
    std::uint64_t schur_violations     = 0;
    bool          passes_functional_checks = false;
    bool          excluded_by_axiom_e      = false; // |renyi - rate_at_n| > bound_at_n
};

[[nodiscard]] std::vector<RenyiDiscrimination> renyi_discrimination_report(const RationalSpectrum &s,
                                                                           std::span<const double> alphas,
                                                                           std::uint64_t n_max);

struct AxiomSuiteConfig {
    std::uint64_t trials = 500;
    std::uint64_t seed   = 0;
    double        kb     = 1.0;
};

/// Seeded corpus covering axioms A-D plus a Shannon Schur scan (reported as "C'").
[[nodiscard]] std::vector<AxiomReport> run_axiom_suite(const AxiomSuiteConfig &config);

} // namespace entlab
