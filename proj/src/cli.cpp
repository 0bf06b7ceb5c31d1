#include "entlab/cli.hpp"

#include "entlab/axiom_lab.hpp"
#include "entlab/entropy.hpp"
#include "entlab/error.hpp"
#include "entlab/large_numbers.hpp"
#include "entlab/report.hpp"
#include "entlab/state_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace entlab {

namespace {

    using ojson = nlohmann::ordered_json;

    std::string render_scalar(const ojson &v) {
        switch(v.type()) {
            case ojson::value_t::number_float: return format_double(v.get<double>());
            case ojson::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
            case ojson::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
            case ojson::value_t::boolean: return v.get<bool>() ? "true" : "false";
            case ojson::value_t::string: return v.get<std::string>();
            case ojson::value_t::array: {
                std::string joined;
                for(const auto &item : v) {
                    if(!joined.empty()) joined += ';';
                    joined += render_scalar(item);
                }
                return joined;
            }
            default: return "";
        }
    }

    // Key/value report: CSV "quantity,value" lines or one JSON object.
    void emit_report(std::ostream &out, const ojson &report, OutputFormat format) {
        if(format == OutputFormat::Json) {
            out << report.dump(2) << '\n';
            return;
        }
        out << "quantity,value\n";
        for(const auto &[key, value] : report.items()) out << key << ',' << csv_field(render_scalar(value)) << '\n';
    }

    // Table of flat rows: CSV with a header from the first row, or {"rows": [...]}.
    void emit_table(std::ostream &out, const ojson &rows, OutputFormat format, const std::string &header) {
        if(format == OutputFormat::Json) {
            out << ojson{{"rows", rows}}.dump(2) << '\n';
            return;
        }
        out << header << '\n';
        for(const auto &row : rows) {
            bool first = true;
            for(const auto &[key, value] : row.items()) {
                if(!first) out << ',';
                out << csv_field(render_scalar(value));
                first = false;
            }
            out << '\n';
        }
    }

    std::string header_of(const ojson &row) {
        std::string header;
        for(const auto &[key, value] : row.items()) header += (header.empty() ? "" : ",") + key;
        return header;
    }

    void add_run_config(CLI::App *sub, RunConfig &cfg) {
        sub->add_option("--kb", cfg.kb, "entropy unit constant (default 1: nats)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "64-bit seed");
        sub->add_option_function<std::string>(
               "--format",
               [&cfg](const std::string &v) { cfg.format = v == "json" ? OutputFormat::Json : OutputFormat::Csv; },
               "csv (default) or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--dim-cap", cfg.dim_cap, "maximum total Hilbert-space dimension")
            ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
        sub->add_option("--out", cfg.out, "write output to this path instead of stdout");
    }

    ojson spectrum_array(std::span<const double> values) {
        ojson arr = ojson::array();
        for(double v : values) arr.push_back(v);
        return arr;
    }

    // --- commands -----------------------------------------------------------

    int cmd_entropy(const std::string &path, std::optional<double> alpha, const RunConfig &cfg, std::ostream &out) {
        const DensityMatrix rho = read_state_file(path);
        ojson               r;
        r["von_neumann"] = von_neumann(rho, cfg.kb).value;
        if(alpha) {
            r["alpha"] = *alpha;
            r["renyi"] = renyi(rho, *alpha, cfg.kb).value;
        }
        r["rank"]      = rho.rank();
        r["dimension"] = rho.dimension();
        ojson sectors  = ojson::array();
        for(const auto &b : rho.blocks()) sectors.push_back(b.sector.id);
        r["sectors"]  = sectors;
        r["spectrum"] = spectrum_array(rho.spectrum());
        emit_report(out, r, cfg.format);
        return kExitOk;
    }

    int cmd_converge(const std::string &spec, std::uint64_t n_max, const RunConfig &cfg, std::ostream &out) {
        const auto s    = RationalSpectrum::parse(spec);
        const auto rows = convergence_table(s, n_max, cfg.kb);
        bool       ok   = true;
        ojson      arr  = ojson::array();
        for(const auto &row : rows) {
            ok = ok && row.satisfies_sandwich();
            arr.push_back(to_json(row));
        }
        if(cfg.format == OutputFormat::Csv)
            write_convergence_csv(out, rows);
        else
            emit_table(out, arr, cfg.format, "");
        return ok ? kExitOk : kExitCheckFailed;
    }

    int cmd_omega(std::optional<std::string> spec, std::optional<std::uint64_t> n, bool augmented, double phase,
                  const RunConfig &cfg, std::ostream &out) {
        const RationalSpectrum fixed = RationalSpectrum::parse("2/3,1/3");
        if(augmented) {
            if(spec && RationalSpectrum::parse(*spec).entries().size() != 2)
                throw Error(ErrorKind::InvalidArgument, "--augmented is defined for --spectrum 2/3,1/3 only");
            if(spec && RationalSpectrum::parse(*spec).to_string() != fixed.to_string())
                throw Error(ErrorKind::InvalidArgument, "--augmented is defined for --spectrum 2/3,1/3 only");
            if(n && *n != 3) throw Error(ErrorKind::InvalidArgument, "--augmented is defined for --n 3 only");
        } else if(!spec || !n) {
            throw Error(ErrorKind::InvalidArgument, "--spectrum and --n are required without --augmented");
        }
        const RationalSpectrum s       = augmented ? fixed : RationalSpectrum::parse(*spec);
        const std::uint64_t    sites   = augmented ? 3 : *n;
        const DensityMatrix    omega   = augmented ? augmented_omega(phase) : build_omega(s, sites, cfg.dim_cap);
        const double           margins = verify_marginals(omega, s, sites);
        const auto             lop     = l_operator_check(omega, s, sites);
        const auto             klein   = klein_bound_check(omega, s, sites, cfg.kb);

        ojson r;
        r["spectrum"] = s.to_string();
        r["n"]        = sites;
        r["augmented"] = augmented;
        if(augmented) r["phase"] = phase;
        r["rank"] = omega.rank();
        if(!augmented) r["multinomial"] = multinomial(TypeClass(s, sites)).to_string();
        r["s_omega"]              = klein.s_omega;
        r["n_times_svn"]          = klein.n_times_svn;
        r["marginal_deviation"]   = margins;
        r["l_operator_lhs"]       = lop.lhs;
        r["l_operator_rhs"]       = lop.rhs;
        r["l_operator_residual"]  = std::abs(lop.lhs - lop.rhs);
        r["klein_margin"]         = klein.n_times_svn - klein.s_omega;
        r["relative_entropy"]     = klein.relative_entropy;
        emit_report(out, r, cfg.format);
        const bool ok = margins <= 1e-10 && std::abs(lop.lhs - lop.rhs) <= 1e-8 && klein.holds();
        return ok ? kExitOk : kExitCheckFailed;
    }

    int cmd_majorize(const std::string &path_a, const std::string &path_b, const RunConfig &cfg, std::ostream &out) {
        const DensityMatrix a       = read_state_file(path_a);
        const DensityMatrix b       = read_state_file(path_b);
        const auto          verdict = majorizes(a.spectrum(), b.spectrum());
        if(cfg.format == OutputFormat::Json) {
            ojson r;
            r["relation"]            = std::string(to_string(verdict.relation));
            r["max_partial_sum_gap"] = verdict.max_partial_sum_gap;
            r["partial_sums_a"]      = spectrum_array(verdict.partial_sums_a);
            r["partial_sums_b"]      = spectrum_array(verdict.partial_sums_b);
            out << r.dump(2) << '\n';
        } else {
            out << "relation," << to_string(verdict.relation) << '\n';
            out << "max_partial_sum_gap," << format_double(verdict.max_partial_sum_gap) << '\n';
            out << "k,partial_sum_a,partial_sum_b\n";
            for(std::size_t k = 0; k < verdict.partial_sums_a.size(); ++k)
                out << k + 1 << ',' << format_double(verdict.partial_sums_a[k]) << ','
                    << format_double(verdict.partial_sums_b[k]) << '\n';
        }
        switch(verdict.relation) {
            case MajorizationRelation::MoreMixed: return 0;
            case MajorizationRelation::LessMixed: return 1;
            case MajorizationRelation::Equal: return 3;
            case MajorizationRelation::Incomparable: return 4;
        }
        return kExitInvalid;
    }

    int cmd_axioms(std::uint64_t trials, const RunConfig &cfg, std::ostream &out) {
        const auto reports = run_axiom_suite({trials, cfg.seed, cfg.kb});
        ojson      arr     = ojson::array();
        bool       ok      = !reports.empty();
        for(const auto &rep : reports) {
            ok = ok && rep.pass;
            arr.push_back(to_json(rep));
        }
        if(cfg.format == OutputFormat::Json)
            out << arr.dump(2) << '\n';
        else
            emit_table(out, arr, cfg.format, "axiom,trials,max_violation,tolerance,pass");
        return ok ? kExitOk : kExitCheckFailed;
    }

    int cmd_bracket(std::uint64_t base, std::uint64_t n_max, const RunConfig &cfg, std::ostream &out) {
        if(n_max < 1) throw Error(ErrorKind::InvalidArgument, "--nmax must be at least 1");
        (void)theorem1_bracket(base, 1); // validates N
        const double ln_n = std::log(static_cast<double>(base));
        ojson        arr  = ojson::array();
        bool         ok   = true;
        for(std::uint64_t n = 1; n <= n_max; ++n) {
            const auto   row = theorem1_bracket(base, n);
            const double err = std::abs(row.rate - ln_n);
            ok = ok && row.lhs_ok && row.rhs_ok && err <= std::numbers::ln2 / static_cast<double>(n);
            ojson j      = to_json(row);
            j["rate"]    = cfg.kb * row.rate;
            j["ln_N"]    = cfg.kb * ln_n;
            j["abs_err"] = cfg.kb * err;
            arr.push_back(j);
        }
        emit_table(out, arr, cfg.format, header_of(arr.front()));
        return ok ? kExitOk : kExitCheckFailed;
    }

    int cmd_semicont(const std::string &spec, std::uint64_t n_max, std::optional<std::uint64_t> n_min,
                     const std::string &growth, const RunConfig &cfg, std::ostream &out) {
        const auto     s  = RationalSpectrum::parse(spec);
        const Rational r1 = s.entries().front();
        // smallest N with N r1 >= 1
        const auto first = static_cast<std::uint64_t>((r1.denominator() + r1.numerator() - 1) / r1.numerator());
        const std::uint64_t start = n_min.value_or(first);
        if(n_max < start) throw Error(ErrorKind::InvalidArgument, "--Nmax is below the first admissible N");
        std::vector<std::uint64_t> ns;
        for(std::uint64_t big_n = start; big_n <= n_max; ++big_n) ns.push_back(big_n);
        const DimGrowth law  = growth == "paper" ? DimGrowth(growth_paper) : DimGrowth(growth_corrected);
        const auto      rows = semicontinuity_sequence(s, ns, law);
        ojson           arr  = ojson::array();
        for(const auto &row : rows) {
            ojson j      = to_json(row);
            j["entropy"] = cfg.kb * row.entropy;
            arr.push_back(j);
        }
        emit_table(out, arr, cfg.format, "N,trace_distance,entropy");
        return kExitOk;
    }

    int cmd_concentrate(const std::string &spec, std::uint64_t n, double c, std::uint64_t trials, const RunConfig &cfg,
                        std::ostream &out) {
        const auto s = RationalSpectrum::parse(spec);
        ojson      r;
        r["spectrum"] = s.to_string();
        r["n"]        = n;
        r["c"]        = c;
        r["trials"]   = trials;
        r["seed"]     = cfg.seed;
        r["fraction"] = concentration_sample(s, n, trials, c, cfg.seed);
        emit_report(out, r, cfg.format);
        return kExitOk;
    }

} // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entropy laboratory: exact large-number experiments on density matrices", "entlab"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::string           state_path, state_path_b, spectrum_text, growth = "corrected";
    std::optional<double> alpha;
    std::optional<std::string>   omega_spectrum;
    std::optional<std::uint64_t> omega_n, semicont_nmin;
    std::uint64_t         n_max = 3000, n_sites = 0, trials = 500, big_n = 2, big_n_max = 64;
    double                c = 2.0, phase = 0.0;
    bool                  augmented = false;

    auto *entropy = app.add_subcommand("entropy", "von Neumann (and optionally Renyi) entropy of a state file");
    entropy->add_option("state_file", state_path, "JSON state file")->required();
    entropy->add_option("--alpha", alpha, "Renyi order (> 0, != 1)");
    add_run_config(entropy, cfg);

    auto *converge = app.add_subcommand("converge", "type-class entropy rate versus the Shannon target");
    converge->add_option("--spectrum", spectrum_text, "exact spectrum, e.g. 2/3,1/3")->required();
    converge->add_option("--nmax", n_max, "largest n")->check(CLI::PositiveNumber);
    add_run_config(converge, cfg);

    auto *omega = app.add_subcommand("omega", "type-class simulation state and its checks");
    omega->add_option("--spectrum", omega_spectrum, "exact spectrum, e.g. 2/3,1/3");
    omega->add_option("--n", omega_n, "number of factors");
    omega->add_flag("--augmented", augmented, "use the 4-vector state on 3 qubits for 2/3,1/3");
    omega->add_option("--alpha-phase", phase, "phase of the extra vector (with --augmented)");
    add_run_config(omega, cfg);

    auto *majorize = app.add_subcommand("majorize", "majorization verdict between two state files");
    majorize->add_option("state_file_a", state_path, "first state")->required();
    majorize->add_option("state_file_b", state_path_b, "second state")->required();
    add_run_config(majorize, cfg);

    auto *axioms = app.add_subcommand("axioms", "seeded functional checks of axioms A-D and Schur concavity");
    axioms->add_option("--trials", trials, "trials per axiom")->check(CLI::PositiveNumber);
    add_run_config(axioms, cfg);

    auto *bracket = app.add_subcommand("bracket", "2^m <= N^n < 2^(m+1) with exact integers");
    bracket->add_option("--N", big_n, "QLB dimension N >= 2")->required();
    bracket->add_option("--nmax", n_max, "largest n")->check(CLI::PositiveNumber);
    add_run_config(bracket, cfg);

    auto *semicont = app.add_subcommand("semicont", "closed-form trace-norm sequence approaching rho");
    semicont->add_option("--spectrum", spectrum_text, "exact spectrum")->required();
    semicont->add_option("--Nmax", big_n_max, "largest N");
    semicont->add_option("--Nmin", semicont_nmin, "first N (default: smallest admissible)");
    semicont->add_option("--growth", growth, "paper (N^2) or corrected (2^(N^2))")
        ->check(CLI::IsMember({"paper", "corrected"}));
    add_run_config(semicont, cfg);

    auto *concentrate = app.add_subcommand("concentrate", "sampled frequency of the concentration window");
    concentrate->add_option("--spectrum", spectrum_text, "exact spectrum")->required();
    concentrate->add_option("--n", n_sites, "sequence length")->required();
    concentrate->add_option("--c", c, "window constant")->check(CLI::NonNegativeNumber);
    concentrate->add_option("--trials", trials, "number of sampled sequences")->check(CLI::PositiveNumber);
    add_run_config(concentrate, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch(const CLI::ParseError &e) {
        std::ostringstream diag;
        const int          code = app.exit(e, out, diag);
        err << diag.str();
        return code == 0 ? kExitOk : kExitInvalid;
    }

    std::ostringstream buffer;
    int                code = kExitOk;
    try {
        if(entropy->parsed())
            code = cmd_entropy(state_path, alpha, cfg, buffer);
        else if(converge->parsed())
            code = cmd_converge(spectrum_text, n_max, cfg, buffer);
        else if(omega->parsed())
            code = cmd_omega(omega_spectrum, omega_n, augmented, phase, cfg, buffer);
        else if(majorize->parsed())
            code = cmd_majorize(state_path, state_path_b, cfg, buffer);
        else if(axioms->parsed())
            code = cmd_axioms(trials, cfg, buffer);
        else if(bracket->parsed())
            code = cmd_bracket(big_n, n_max, cfg, buffer);
        else if(semicont->parsed())
            code = cmd_semicont(spectrum_text, big_n_max, semicont_nmin, growth, cfg, buffer);
        else if(concentrate->parsed())
            code = cmd_concentrate(spectrum_text, n_sites, c, trials, cfg, buffer);
    } catch(const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if(cfg.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if(!file) {
            err << "error: cannot open " << cfg.out << " for writing\n";
            return kExitInvalid;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace entlab
