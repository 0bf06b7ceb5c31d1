#include "entlab/axiom_lab.hpp"

#include "entlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entlab {

namespace {

    AxiomReport make_report(std::string axiom, std::uint64_t trials, double violation, double tolerance) {
        return AxiomReport{std::move(axiom), trials, violation, tolerance, violation <= tolerance};
    }

    std::vector<double> sorted_descending(std::span<const double> v, std::size_t length) {
        std::vector<double> out(v.begin(), v.end());
        out.resize(std::max(length, out.size()), 0.0);
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    void require_normalized(std::span<const double> v, double tol, const char *name) {
        const double total = std::accumulate(v.begin(), v.end(), 0.0);
        if(std::abs(total - 1.0) > std::max(tol, 1e-10))
            throw Error(ErrorKind::NotNormalized, std::string(name) + " sums to " + std::to_string(total));
    }

    ComplexVector random_vector(std::size_t d, Rng &rng) {
        ComplexVector v(d);
        for(auto &z : v) {
            const double re = rng.normal();
            const double im = rng.normal();
            z               = Complex(re, im);
        }
        return v;
    }

    DensityMatrix random_multiblock(std::size_t d1, std::size_t d2, Rng &rng) {
        const double weight = 0.1 + 0.8 * rng.uniform();
        const auto   a      = random_density(d1, 1 + rng.below(d1), rng.next_u64());
        const auto   b      = random_density(d2, 1 + rng.below(d2), rng.next_u64());
        return DensityMatrix(std::vector<Block>{
            Block{SectorLabel{"q=0"}, a.single_block() * Complex(weight)},
            Block{SectorLabel{"q=1"}, b.single_block() * Complex(1.0 - weight)},
        });
    }

} // namespace

std::string_view to_string(MajorizationRelation r) noexcept {
    switch(r) {
        case MajorizationRelation::MoreMixed: return "MoreMixed";
        case MajorizationRelation::LessMixed: return "LessMixed";
        case MajorizationRelation::Equal: return "Equal";
        case MajorizationRelation::Incomparable: return "Incomparable";
    }
    return "Unknown";
}

MajorizationVerdict majorizes(std::span<const double> a, std::span<const double> b, double tol) {
    require_normalized(a, tol, "first spectrum");
    require_normalized(b, tol, "second spectrum");
    const std::size_t len = std::max(a.size(), b.size());
    const auto        sa  = sorted_descending(a, len);
    const auto        sb  = sorted_descending(b, len);

    MajorizationVerdict verdict;
    verdict.partial_sums_a.resize(len);
    verdict.partial_sums_b.resize(len);
    double acc_a = 0.0, acc_b = 0.0;
    double min_gap = 0.0, max_gap = 0.0; // gap = B_k - A_k
    bool   elementwise_equal = true;
    for(std::size_t k = 0; k < len; ++k) {
        acc_a += sa[k];
        acc_b += sb[k];
        verdict.partial_sums_a[k] = acc_a;
        verdict.partial_sums_b[k] = acc_b;
        const double gap          = acc_b - acc_a;
        min_gap                   = std::min(min_gap, gap);
        max_gap                   = std::max(max_gap, gap);
        verdict.max_partial_sum_gap = std::max(verdict.max_partial_sum_gap, std::abs(gap));
        if(std::abs(sa[k] - sb[k]) > tol) elementwise_equal = false;
    }

    if(elementwise_equal || (min_gap >= -tol && max_gap <= tol))
        verdict.relation = MajorizationRelation::Equal;
    else if(min_gap >= -tol)
        verdict.relation = MajorizationRelation::MoreMixed;
    else if(max_gap <= tol)
        verdict.relation = MajorizationRelation::LessMixed;
    else
        verdict.relation = MajorizationRelation::Incomparable;
    return verdict;
}

AxiomReport check_axiom_A(const DensityMatrix &rho, std::span<const Complex> psi, double kb, std::size_t dim_cap) {
    require_positive_kb(kb);
    const DensityMatrix projector = pure(psi, SectorLabel{"psi"});
    const double        base      = von_neumann(rho, kb).value;
    const double        right = von_neumann(tensor_product(rho, projector, dim_cap), kb).value;
    const double        left  = von_neumann(tensor_product(projector, rho, dim_cap), kb).value;
    const double violation = std::max(std::abs(right - base), std::abs(left - base)) / kb;
    return make_report("A", 1, violation, kAxiomTolA);
}

AxiomReport check_axiom_B(const DensityMatrix &rho, std::uint64_t seed, std::uint64_t trials, double kb) {
    require_positive_kb(kb);
    const double base      = von_neumann(rho, kb).value;
    double       violation = 0.0;
    for(std::uint64_t t = 0; t < trials; ++t) {
        Rng                        rng = Rng::substream(seed, t);
        std::vector<ComplexMatrix> unitaries;
        for(const auto &block : rho.blocks()) unitaries.push_back(random_unitary(block.matrix.rows(), rng.next_u64()));
        const double rotated = von_neumann(conjugate(rho, unitaries), kb).value;
        violation            = std::max(violation, std::abs(rotated - base) / kb);
    }
    return make_report("B", trials, violation, kAxiomTolB);
}

AxiomReport check_axiom_C(std::size_t m, std::size_t n, double kb, std::size_t dim_cap) {
    require_positive_kb(kb);
    if(n < 1 || m <= n) throw Error(ErrorKind::InvalidArgument, "axiom C needs M > N >= 1");
    if(m > dim_cap) throw Error(ErrorKind::SizeOverflow, "M exceeds the dimension cap");
    const double upper = von_neumann(qlb(m), kb).value;
    const double lower = von_neumann(qlb(n), kb).value;
    const double margin = std::log(static_cast<double>(m) / static_cast<double>(n));
    double       violation = std::abs((upper - lower) / kb - margin);
    if(!(upper > lower)) violation = std::max(violation, (lower - upper) / kb + margin);
    return make_report("C", 1, violation, kAxiomTolC);
}

AxiomReport check_axiom_D(const DensityMatrix &rho, std::size_t n, double kb, std::size_t dim_cap) {
    require_positive_kb(kb);
    const double whole = von_neumann(tensor_power(rho, n, dim_cap), kb).value;
    const double part  = von_neumann(rho, kb).value;
    return make_report("D", 1, std::abs(whole - static_cast<double>(n) * part) / kb, kAxiomTolD);
}

AxiomReport combine(std::span<const AxiomReport> reports) {
    if(reports.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to combine");
    AxiomReport out = reports.front();
    out.trials      = 0;
    out.pass        = true;
    for(const auto &r : reports) {
        out.trials += r.trials;
        out.max_violation = std::max(out.max_violation, r.max_violation);
        out.tolerance     = std::min(out.tolerance, r.tolerance);
        out.pass          = out.pass && r.pass;
    }
    return out;
}

std::vector<double> random_probability(std::size_t d, Rng &rng) {
    std::vector<double> p(d);
    for(auto &x : p) {
        double u = rng.uniform();
        while(u == 0.0) u = rng.uniform();
        x = -std::log(u);
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for(auto &x : p) x /= total;
    return p;
}

std::vector<double> birkhoff_mix(std::span<const double> p, Rng &rng) {
    const std::size_t d       = p.size();
    const std::size_t terms   = 1 + static_cast<std::size_t>(rng.below(d));
    const auto        weights = random_probability(terms, rng);
    std::vector<double>      out(d, 0.0);
    std::vector<std::size_t> perm(d);
    for(std::size_t j = 0; j < terms; ++j) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for(std::size_t i = d; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        for(std::size_t i = 0; i < d; ++i) out[i] += weights[j] * p[perm[i]];
    }
    return out;
}

SchurScan schur_concavity_scan(const SpectrumFunctional &f, std::uint64_t trials, std::uint64_t seed) {
    SchurScan scan;
    scan.max_gap = -kInfinity;
    for(std::uint64_t t = 0; t < trials; ++t) {
        Rng          rng   = Rng::substream(seed, t);
        const auto   d     = static_cast<std::size_t>(2 + rng.below(7));
        const auto   sigma = random_probability(d, rng);
        const auto   rho   = birkhoff_mix(sigma, rng);
        const double gap   = f(sigma) - f(rho);
        scan.max_gap       = std::max(scan.max_gap, gap);
        if(gap > 1e-10) ++scan.violations;
    }
    if(trials == 0) scan.max_gap = 0.0;
    return scan;
}

std::vector<UhlmannStep> uhlmann_sup_approx(const DensityMatrix &rho, std::size_t steps, double kb) {
    require_positive_kb(kb);
    const auto          full = rho.spectrum();
    std::vector<double> support;
    for(double v : full)
        if(v > kDefaultSupportFloor) support.push_back(v);

    std::vector<UhlmannStep> out;
    out.reserve(steps);
    if(support.size() <= 1) {
        // nothing lies strictly below a pure state
        std::vector<double> spec(full.begin(), full.end());
        for(std::size_t k = 1; k <= steps; ++k) out.push_back({0.0, von_neumann_of_spectrum(spec, kb), spec});
        return out;
    }
    const double r_min = support.back();
    for(std::size_t k = 1; k <= steps; ++k) {
        const double        eps = std::ldexp(r_min, -static_cast<int>(k));
        std::vector<double> spec(full.begin(), full.end());
        spec.front() += eps;
        spec[support.size() - 1] -= eps;
        std::sort(spec.begin(), spec.end(), std::greater<>());
        out.push_back({eps, von_neumann_of_spectrum(spec, kb), std::move(spec)});
    }
    return out;
}

std::vector<RenyiDiscrimination> renyi_discrimination_report(const RationalSpectrum &s,
                                                             std::span<const double> alphas, std::uint64_t n_max) {
    if(s.is_uniform())
        throw Error(ErrorKind::UniformSpectrum, "all Renyi orders coincide on a uniform spectrum");
    const auto q = static_cast<std::uint64_t>(s.common_denominator());
    if(n_max < q) throw Error(ErrorKind::InvalidArgument, "n_max is below the common denominator");

    const auto          probs   = s.to_doubles();
    const double        limit   = shannon(probs).value;
    const std::uint64_t n       = n_max / q * q;
    const double        rate    = type_class_entropy_rate(TypeClass(s, n));
    const double        bound   = static_cast<double>(s.rank()) * std::log(static_cast<double>(n) + 1.0) /
                         static_cast<double>(n);
    const DensityMatrix rho     = from_rational_spectrum(s);
    const DensityMatrix doubled = tensor_product(rho, rho);

    std::vector<RenyiDiscrimination> out;
    for(const double alpha : alphas) {
        RenyiDiscrimination r;
        r.alpha         = alpha;
        r.renyi         = renyi_of_spectrum(probs, alpha);
        r.axiom_e_limit = limit;
        r.n_used        = n;
        r.rate_at_n     = rate;
        r.bound_at_n    = bound;
        r.separation    = std::abs(r.renyi - limit);
        r.additivity_violation = std::abs(renyi(doubled, alpha).value - 2.0 * renyi(rho, alpha).value);
        for(std::size_t dim = 1; dim <= 16; ++dim)
            r.qlb_violation =
                std::max(r.qlb_violation, std::abs(renyi(qlb(dim), alpha).value - std::log(static_cast<double>(dim))));
        r.schur_violations =
            schur_concavity_scan([alpha](std::span<const double> p) { return renyi_of_spectrum(p, alpha); }, 1000, 0)
                .violations;
        r.passes_functional_checks =
            r.additivity_violation <= 1e-9 && r.qlb_violation <= 1e-9 && r.schur_violations == 0;
        r.excluded_by_axiom_e = std::abs(r.renyi - rate) > bound;
        out.push_back(r);
    }
    return out;
}

std::vector<AxiomReport> run_axiom_suite(const AxiomSuiteConfig &config) {
    const std::uint64_t trials = config.trials;
    std::vector<AxiomReport> a, b, c, d;
    for(std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(config.seed, t);

        // A: d <= 6 random state with a pure factor of dimension <= 6
        const std::size_t da  = 1 + t % 6;
        const auto        rhoa = random_density(da, 1 + rng.below(da), rng.next_u64());
        const auto        psi  = random_vector(1 + rng.below(6), rng);
        a.push_back(check_axiom_A(rhoa, psi, config.kb));

        // B: single-block d <= 8, every third case split over two sectors
        if(t % 3 == 2) {
            const auto rhob = random_multiblock(1 + rng.below(4), 1 + rng.below(4), rng);
            b.push_back(check_axiom_B(rhob, rng.next_u64(), 1, config.kb));
        } else {
            const std::size_t db   = 1 + t % 8;
            const auto        rhob = random_density(db, 1 + rng.below(db), rng.next_u64());
            b.push_back(check_axiom_B(rhob, rng.next_u64(), 1, config.kb));
        }

        // C: 1 <= N < M <= 128
        const std::size_t small = 1 + t % 64;
        c.push_back(check_axiom_C(small + 1 + (t / 64) % 64, small, config.kb));

        // D: d <= 3, n <= 4
        const std::size_t dd   = 1 + t % 3;
        const auto        rhod = random_density(dd, 1 + rng.below(dd), rng.next_u64());
        d.push_back(check_axiom_D(rhod, 1 + (t / 3) % 4, config.kb));
    }

    std::vector<AxiomReport> out;
    if(trials == 0) return out;
    out.push_back(combine(a));
    out.push_back(combine(b));
    out.push_back(combine(c));
    out.push_back(combine(d));

    const auto scan = schur_concavity_scan(
        [](std::span<const double> p) { return von_neumann_of_spectrum(p); }, trials, config.seed);
    out.push_back(AxiomReport{"C'", trials, std::max(0.0, scan.max_gap), 1e-10, scan.violations == 0});
    return out;
}

} // namespace entlab
