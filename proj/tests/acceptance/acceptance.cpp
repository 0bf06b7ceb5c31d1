// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "entlab/axiom_lab.hpp"
#include "entlab/cli.hpp"
#include "entlab/entropy.hpp"
#include "entlab/error.hpp"
#include "entlab/large_numbers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace entlab;

namespace {

struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool condition, const std::string &what) {
        if(!condition && ok) detail = what;
        ok = ok && condition;
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit_seconds, const std::function<Outcome()> &body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
        out = body();
    } catch(const std::exception &e) {
        out.ok     = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if(out.ok && elapsed >= limit_seconds) {
        out.ok     = false;
        out.detail = "runtime limit exceeded";
    }
    if(!out.ok) ++failures;
    std::printf("%s %2d %-36s %8.3f s (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, elapsed,
                limit_seconds, out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *pattern, auto... args) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, args...);
    return buffer;
}

const RationalSpectrum two_thirds = RationalSpectrum::parse("2/3,1/3");
const double           svn_two_thirds = std::log(3.0) - 2.0 / 3.0 * std::log(2.0);

Outcome boltzmann_planck_check() {
    Outcome o;
    for(std::size_t n = 1; n <= 1024; ++n) {
        const double err = std::abs(von_neumann(qlb(n)).value - std::log(double(n)));
        o.require(err <= 1e-12, fmt("S(qlb(%zu)) off by %.3g", n, err));
    }
    for(std::uint64_t big_n = 2; big_n <= 100; ++big_n)
        for(std::uint64_t n = 1; n <= 200; ++n) {
            const auto row = theorem1_bracket(big_n, n);
            o.require(row.lhs_ok && row.rhs_ok, fmt("bracket N=%llu n=%llu not exact", (unsigned long long)big_n,
                                                     (unsigned long long)n));
            o.require(std::abs(row.rate - std::log(double(big_n))) <= std::numbers::ln2 / double(n),
                      fmt("bracket rate N=%llu n=%llu", (unsigned long long)big_n, (unsigned long long)n));
        }
    return o;
}

Outcome axiom_e_convergence() {
    Outcome    o;
    const auto rows = convergence_table(two_thirds, 3000);
    o.require(rows.size() == 1000, "expected 1000 rows");
    for(const auto &row : rows) {
        o.require(std::abs(row.target - svn_two_thirds) < 1e-15, "target is not S_vN");
        o.require(row.gap >= -1e-12, fmt("negative gap at n=%llu", (unsigned long long)row.n));
        o.require(row.gap <= 2 * std::log(double(row.n) + 1) / double(row.n),
                  fmt("gap above 2 ln(n+1)/n at n=%llu", (unsigned long long)row.n));
    }
    o.require(rows.back().n == 3000 && rows.back().gap < 0.00534, fmt("gap at 3000 = %.6g", rows.back().gap));
    return o;
}

Outcome omega_grid() {
    Outcome o;
    int     cases = 0;
    for(const char *text : {"1/2,1/2", "2/3,1/3", "1/2,1/4,1/4", "3/5,1/5,1/5"}) {
        const auto s = RationalSpectrum::parse(text);
        for(std::uint64_t t = 1; t <= 3; ++t) {
            const std::uint64_t n = t * std::uint64_t(s.common_denominator());
            if(std::pow(double(s.rank()), double(n)) > 2187) continue;
            ++cases;
            const auto   omega = build_omega(s, n);
            const BigNat count = multinomial(TypeClass(s, n));
            const auto   where = fmt("(%s, n=%llu)", text, (unsigned long long)n);
            o.require(verify_marginals(omega, s, n) <= 1e-10, "marginals " + where);
            o.require(BigNat(omega.rank()) == count, "rank " + where);
            const auto klein = klein_bound_check(omega, s, n);
            o.require(std::abs(klein.s_omega - count.ln()) <= 1e-9, "S(Omega) " + where);
            const auto id = l_operator_check(omega, s, n);
            o.require(std::abs(id.lhs - id.rhs) <= 1e-8, "L-operator identity " + where);
            o.require(klein.s_omega <= klein.n_times_svn + 1e-9, "Klein bound " + where);
        }
    }
    o.require(cases == 8, "grid size");
    return o;
}

Outcome augmented() {
    Outcome o;
    for(double phase : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi}) {
        const auto omega = augmented_omega(phase);
        o.require(omega.rank() == 4, fmt("rank at phase %g", phase));
        o.require(verify_marginals(omega, two_thirds, 3) <= 1e-10, fmt("marginals at phase %g", phase));
        const auto k = klein_bound_check(omega, two_thirds, 3);
        o.require(std::abs(k.s_omega - std::log(4.0)) < 1e-12, fmt("entropy at phase %g", phase));
        o.require(std::log(4.0) <= k.n_times_svn, "ln 4 <= 3 S_vN(rho)");
    }
    return o;
}

Outcome klein_positivity() {
    Outcome o;
    for(std::uint64_t t = 0; t < 1000; ++t) {
        const std::size_t d = 1 + t % 6;
        const double      r = relative_entropy(random_density(d, d, 2 * t), random_density(d, d, 2 * t + 1));
        o.require(r >= -1e-10, fmt("pair %llu: %.3g", (unsigned long long)t, r));
    }
    return o;
}

Outcome axioms() {
    Outcome o;
    for(const auto &r : run_axiom_suite({500, 0, 1.0})) {
        if(r.axiom == "C'") continue;
        o.require(r.trials >= 500, "axiom " + r.axiom + " ran fewer than 500 trials");
        o.require(r.max_violation <= 1e-9 && r.pass, fmt("axiom %s violation %.3g", r.axiom.c_str(), r.max_violation));
    }
    return o;
}

Outcome majorization() {
    Outcome o;
    for(std::size_t m = 1; m <= 64; ++m)
        for(std::size_t n = 1; n <= 64; ++n) {
            const auto          len = std::max(m, n);
            std::vector<double> a(len, 0.0), b(len, 0.0);
            for(std::size_t i = 0; i < m; ++i) a[i] = 1.0 / double(m);
            for(std::size_t i = 0; i < n; ++i) b[i] = 1.0 / double(n);
            const auto rel = majorizes(a, b).relation;
            const auto expect = m > n ? MajorizationRelation::MoreMixed
                                      : (m < n ? MajorizationRelation::LessMixed : MajorizationRelation::Equal);
            o.require(rel == expect, fmt("QLB order M=%zu N=%zu", m, n));
        }
    const auto shannon_scan = schur_concavity_scan([](std::span<const double> p) { return shannon(p).value; }, 10000, 0);
    const auto renyi_scan = schur_concavity_scan([](std::span<const double> p) { return renyi_of_spectrum(p, 2.0); },
                                                 10000, 0);
    o.require(shannon_scan.violations == 0, "Shannon Schur scan");
    o.require(renyi_scan.violations == 0, "Renyi(2) Schur scan");
    const DensityMatrix spectra[] = {qlb(2), from_rational_spectrum(two_thirds),
                                     from_rational_spectrum(RationalSpectrum::parse("1/2,1/4,1/4")),
                                     from_rational_spectrum(RationalSpectrum::parse("3/5,1/5,1/5")),
                                     random_density(6, 6, 0)};
    for(const auto &rho : spectra) {
        const auto steps = uhlmann_sup_approx(rho, 40);
        o.require(std::abs(steps.back().entropy - von_neumann(rho).value) <= 1e-6, "Uhlmann supremum");
    }
    return o;
}

Outcome semicontinuity() {
    Outcome                    o;
    std::vector<std::uint64_t> ns;
    for(std::uint64_t n = 4; n <= 64; ++n) ns.push_back(n);
    for(const auto &row : semicontinuity_sequence(two_thirds, ns, growth_corrected)) {
        o.require(row.trace_distance == 2.0 / double(row.big_n), fmt("trace distance at N=%llu", (unsigned long long)row.big_n));
        o.require(row.entropy >= double(row.big_n) * std::numbers::ln2, fmt("entropy at N=%llu", (unsigned long long)row.big_n));
    }
    ns.clear();
    for(std::uint64_t n = 3; n <= 64; ++n) ns.push_back(n);
    const auto rows = semicontinuity_sequence(two_thirds, ns, growth_paper);
    for(std::size_t i = 0; i < rows.size(); ++i) {
        const double n = double(rows[i].big_n);
        o.require(std::abs(rows[i].excess - 3 * std::log(n) / n) < 1e-12, "printed growth excess is (3 ln N)/N");
        if(i > 0) o.require(rows[i].excess < rows[i - 1].excess, "printed growth excess not decreasing");
    }
    return o;
}

Outcome renyi_discrimination() {
    Outcome      o;
    const double alphas[] = {2.0};
    const auto   r        = renyi_discrimination_report(two_thirds, alphas, 3000).front();
    o.require(r.separation >= 0.04, fmt("separation %.4g", r.separation));
    o.require(r.n_used == 3000 && r.bound_at_n < 0.006, fmt("bound %.4g", r.bound_at_n));
    o.require(r.passes_functional_checks, "Renyi(2) fails the A-D functional checks");
    o.require(r.excluded_by_axiom_e, "Renyi(2) not excluded");
    return o;
}

std::string capture(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int          code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

Outcome determinism() {
    Outcome                                      o;
    const std::vector<std::vector<std::string>> suite{
        {"converge", "--spectrum", "2/3,1/3", "--nmax", "3000"},
        {"converge", "--spectrum", "2/3,1/3", "--nmax", "300", "--format", "json"},
        {"omega", "--spectrum", "2/3,1/3", "--n", "6", "--format", "json"},
        {"omega", "--augmented", "--alpha-phase", "0.7854"},
        {"axioms", "--trials", "500"},
        {"axioms", "--trials", "500", "--format", "json"},
        {"bracket", "--N", "7", "--nmax", "200"},
        {"semicont", "--spectrum", "2/3,1/3", "--Nmax", "64"},
        {"semicont", "--spectrum", "2/3,1/3", "--Nmax", "64", "--growth", "paper", "--format", "json"},
        {"concentrate", "--spectrum", "2/3,1/3", "--n", "300", "--c", "2", "--trials", "2000", "--seed", "42"},
    };
    for(const auto &cmd : suite) {
        const auto first = capture(cmd), second = capture(cmd);
        o.require(first == second, "output differs for " + cmd.front());
        o.require(first.rfind("0\n", 0) == 0, "non-zero exit for " + cmd.front());
    }
    return o;
}

} // namespace

int main() {
    criterion(1, "Boltzmann-Planck and power bracket", 5, boltzmann_planck_check);
    criterion(2, "Axiom E convergence", 30, axiom_e_convergence);
    criterion(3, "Omega construction grid", 60, omega_grid);
    criterion(4, "augmented Omega", 1, augmented);
    criterion(5, "Klein positivity", 10, klein_positivity);
    criterion(6, "axioms A-D functional suite", 60, axioms);
    criterion(7, "majorization and Uhlmann order", 30, majorization);
    criterion(8, "semicontinuity sequences", 1, semicontinuity);
    criterion(9, "Renyi discrimination", 30, renyi_discrimination);
    criterion(10, "determinism of CLI artifacts", 120, determinism);
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
