#include "entlab/large_numbers.hpp"

#include "entlab/error.hpp"
#include "entlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace entlab {

namespace {

    ComplexMatrix rho_matrix(const RationalSpectrum &s) {
        const auto values = s.to_doubles();
        return ComplexMatrix::diagonal(values);
    }

    std::size_t state_dimension(const RationalSpectrum &s, std::uint64_t n, std::size_t cap) {
        return checked_power(s.rank(), static_cast<std::size_t>(n), cap);
    }

} // namespace

TypeClass::TypeClass(const RationalSpectrum &s, std::uint64_t n) : n_(n), spectrum_(s) {
    const auto q = static_cast<std::uint64_t>(s.common_denominator());
    if(n == 0 || n % q != 0)
        throw Error(ErrorKind::NotMultiple,
                    "n = " + std::to_string(n) + " is not a positive multiple of the common denominator " +
                        std::to_string(q));
    counts_.reserve(s.rank());
    for(const auto &r : s.entries()) {
        const auto num = static_cast<std::uint64_t>(r.numerator());
        const auto den = static_cast<std::uint64_t>(r.denominator());
        counts_.push_back(n / den * num);
    }
}

BigNat multinomial(std::span<const std::uint64_t> counts) {
    // Product of binomials C(running + m, m), built one factor at a time so that
    // every intermediate value is an integer.
    BigNat        result = 1;
    std::uint64_t placed = 0;
    for(const std::uint64_t m : counts) {
        for(std::uint64_t i = 1; i <= m; ++i) {
            result *= BigNat(placed + i);
            result.divide_exact(i);
        }
        placed += m;
    }
    return result;
}

BigNat multinomial(const TypeClass &tc) { return multinomial(tc.counts()); }

double type_class_entropy_rate(const TypeClass &tc, double kb) {
    require_positive_kb(kb);
    return kb * multinomial(tc).ln() / static_cast<double>(tc.n());
}

bool ConvergenceRow::satisfies_sandwich() const noexcept { return gap >= -1e-12 && gap <= bound + 1e-12; }

std::vector<ConvergenceRow> convergence_table(const RationalSpectrum &s, std::uint64_t n_max, double kb) {
    require_positive_kb(kb);
    const auto q = static_cast<std::uint64_t>(s.common_denominator());
    if(n_max < q)
        throw Error(ErrorKind::InvalidArgument, "n_max = " + std::to_string(n_max) +
                                                    " is below the common denominator " + std::to_string(q));
    const double target = shannon(s.to_doubles(), kb).value;
    const double rank   = static_cast<double>(s.rank());

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_max / q);
    for(std::uint64_t n = q; n <= n_max; n += q) {
        const TypeClass tc(s, n);
        ConvergenceRow  row;
        row.n      = n;
        row.rate   = type_class_entropy_rate(tc, kb);
        row.target = target;
        row.gap    = target - row.rate;
        row.bound  = kb * rank * std::log(static_cast<double>(n) + 1.0) / static_cast<double>(n);
        rows.push_back(row);
    }
    return rows;
}

DensityMatrix build_omega(const RationalSpectrum &s, std::uint64_t n, std::size_t dim_cap) {
    const TypeClass   tc(s, n);
    const std::size_t total = state_dimension(s, n, dim_cap);
    const std::size_t ell   = s.rank();

    std::vector<std::size_t>   members;
    std::vector<std::uint64_t> counts(ell);
    for(std::size_t index = 0; index < total; ++index) {
        std::fill(counts.begin(), counts.end(), 0);
        std::size_t rest = index;
        for(std::uint64_t site = 0; site < n; ++site) {
            ++counts[rest % ell];
            rest /= ell;
        }
        if(std::equal(counts.begin(), counts.end(), tc.counts().begin())) members.push_back(index);
    }
    if(BigNat(members.size()) != multinomial(tc))
        throw Error(ErrorKind::InvalidState, "type-class enumeration disagrees with the multinomial count");

    std::vector<double> diag(total, 0.0);
    const double        weight = 1.0 / static_cast<double>(members.size());
    for(const std::size_t index : members) diag[index] = weight;
    return DensityMatrix::diagonal(diag, SectorLabel{"type-class"});
}

double verify_marginals(const DensityMatrix &omega, const RationalSpectrum &s, std::uint64_t n) {
    const std::size_t ell      = s.rank();
    std::size_t       expected = 1;
    for(std::uint64_t k = 0; k < n && expected <= omega.dimension(); ++k) expected *= ell;
    if(omega.dimension() != expected)
        throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(omega.dimension()) + " != " +
                                                      std::to_string(ell) + "^" + std::to_string(n));
    const ComplexMatrix dense = omega.to_dense();
    const ComplexMatrix rho   = rho_matrix(s);
    double              worst = 0.0;
    for(std::size_t k = 1; k <= n; ++k) {
        const ComplexMatrix marginal = partial_trace_keep(dense, ell, static_cast<std::size_t>(n), k);
        worst                        = std::max(worst, trace_norm(marginal - rho));
    }
    return worst;
}

LOperatorIdentity l_operator_check(const DensityMatrix &omega, const RationalSpectrum &s, std::uint64_t n) {
    const double deviation = verify_marginals(omega, s, n);
    if(deviation > kMarginalTol)
        throw Error(ErrorKind::MarginalViolation,
                    "marginals deviate from rho by " + std::to_string(deviation) + " in trace norm");
    const ComplexMatrix rho = rho_matrix(s);
    const ComplexMatrix l1  = spectral_apply(rho, [](double x) { return std::log(x); });
    const ComplexMatrix dense = omega.to_dense();
    const std::size_t   cap   = dense.rows();

    ComplexMatrix l(dense.rows(), dense.cols());
    for(std::size_t k = 1; k <= n; ++k) l += embed_local(l1, static_cast<std::size_t>(n), k, cap);

    LOperatorIdentity out;
    out.lhs = trace_of_product(dense, l).real();
    out.rhs = static_cast<double>(n) * trace_of_product(rho, l1).real();
    return out;
}

KleinBound klein_bound_check(const DensityMatrix &omega, const RationalSpectrum &s, std::uint64_t n, double kb) {
    require_positive_kb(kb);
    const double deviation = verify_marginals(omega, s, n);
    if(deviation > kMarginalTol)
        throw Error(ErrorKind::MarginalViolation,
                    "marginals deviate from rho by " + std::to_string(deviation) + " in trace norm");
    const DensityMatrix rho     = from_rational_spectrum(s);
    const DensityMatrix product = tensor_power(rho, static_cast<std::size_t>(n), omega.dimension());
    const DensityMatrix flat    = omega.block_count() == 1 ? omega : DensityMatrix(omega.to_dense());

    KleinBound out;
    out.kb               = kb;
    out.s_omega          = von_neumann(omega, kb).value;
    out.n_times_svn      = static_cast<double>(n) * von_neumann(rho, kb).value;
    out.relative_entropy = relative_entropy(flat, product);
    return out;
}

DensityMatrix augmented_omega(double phase) {
    constexpr std::size_t dim = 8;
    // basis index = 4 s1 + 2 s2 + s3 with up = 0, down = 1
    std::vector<ComplexVector> vectors(4, ComplexVector(dim));
    vectors[0][1]   = 1.0; // up up down
    vectors[1][2]   = 1.0; // up down up
    vectors[2][4]   = 1.0; // down up up
    vectors[3][0]   = std::sqrt(2.0 / 3.0);
    vectors[3][7]   = std::polar(std::sqrt(1.0 / 3.0), phase);
    return qlb_on_span(vectors, SectorLabel{"type-class+ghz"});
}

BracketRow theorem1_bracket(std::uint64_t base, std::uint64_t exponent) {
    if(base < 2) throw Error(ErrorKind::InvalidArgument, "bracket needs N >= 2");
    if(exponent < 1) throw Error(ErrorKind::InvalidArgument, "bracket needs n >= 1");
    const BigNat power = BigNat::pow(BigNat(base), exponent);
    BracketRow   row;
    row.base     = base;
    row.exponent = exponent;
    row.m        = power.bit_length() - 1;
    row.lhs_ok   = BigNat::power_of_two(row.m) <= power;
    row.rhs_ok   = power < BigNat::power_of_two(row.m + 1);
    row.rate     = static_cast<double>(row.m) / static_cast<double>(exponent) * std::numbers::ln2;
    return row;
}

double concentration_sample(const RationalSpectrum &s, std::uint64_t n, std::uint64_t trials, double c,
                            std::uint64_t seed) {
    if(trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    if(!(c >= 0.0) || !std::isfinite(c)) throw Error(ErrorKind::InvalidArgument, "c must be a non-negative number");

    // Symbols are drawn exactly: a uniform integer below the common denominator
    // is mapped through the cumulative numerators.
    const auto                 q = static_cast<std::uint64_t>(s.common_denominator());
    std::vector<std::uint64_t> cumulative;
    std::uint64_t              acc = 0;
    for(const auto &r : s.entries()) {
        acc += static_cast<std::uint64_t>(r.numerator()) * (q / static_cast<std::uint64_t>(r.denominator()));
        cumulative.push_back(acc);
    }
    const auto   probs = s.to_doubles();
    const double nd    = static_cast<double>(n);
    const double width = c * std::sqrt(nd);

    std::uint64_t              inside = 0;
    std::vector<std::uint64_t> counts(s.rank());
    for(std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        std::fill(counts.begin(), counts.end(), 0);
        for(std::uint64_t draw = 0; draw < n; ++draw) {
            const std::uint64_t u = rng.below(q);
            const auto symbol = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                         cumulative.begin());
            ++counts[symbol];
        }
        bool ok = true;
        for(std::size_t i = 0; i < counts.size() && ok; ++i) {
            const double count = static_cast<double>(counts[i]);
            ok = count >= (nd - width) * probs[i] && count <= (nd + width) * probs[i];
        }
        if(ok) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(trials);
}

BigNat growth_corrected(std::uint64_t big_n) { return BigNat::power_of_two(big_n * big_n); }

BigNat growth_paper(std::uint64_t big_n) { return BigNat(big_n) * BigNat(big_n); }

std::vector<SemicontinuityRow> semicontinuity_sequence(const RationalSpectrum &s,
                                                       std::span<const std::uint64_t> big_ns,
                                                       const DimGrowth &growth) {
    const Rational r1 = s.entries().front();
    std::vector<SemicontinuityRow> rows;
    rows.reserve(big_ns.size());
    for(const std::uint64_t big_n : big_ns) {
        // r1 - 1/N >= 0  <=>  N p >= q  for r1 = p/q
        const __int128 lhs = static_cast<__int128>(big_n) * r1.numerator();
        if(big_n == 0 || lhs < r1.denominator())
            throw Error(ErrorKind::NTooSmall, "N = " + std::to_string(big_n) + " is below 1/r_1 = " +
                                                  std::to_string(r1.denominator()) + "/" +
                                                  std::to_string(r1.numerator()));
        const BigNat d = growth(big_n);
        if(d.is_zero()) throw Error(ErrorKind::InvalidArgument, "dimension growth must be at least 1");

        const double nd      = static_cast<double>(big_n);
        const double shifted = static_cast<double>(lhs - r1.denominator()) /
                               (static_cast<double>(r1.denominator()) * nd);
        std::vector<double> head = s.to_doubles();
        head.front()             = shifted;

        SemicontinuityRow row;
        row.big_n          = big_n;
        row.trace_distance = 2.0 / nd;
        row.excess         = (std::log(nd) + d.ln()) / nd;
        row.entropy        = von_neumann_of_spectrum(head) + row.excess;
        rows.push_back(row);
    }
    return rows;
}

} // namespace entlab
