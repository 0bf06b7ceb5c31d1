#include "entlab/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace entlab {

std::string format_double(double value) {
    if(std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if(std::isnan(value)) return "nan";
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                         std::chars_format::general, 17);
    return {buffer.data(), ptr};
}

std::string csv_field(const std::string &text) {
    if(text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for(char ch : text) {
        if(ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void write_convergence_csv(std::ostream &out, std::span<const ConvergenceRow> rows) {
    out << "n,rate,target,gap,bound\n";
    for(const auto &r : rows)
        out << r.n << ',' << format_double(r.rate) << ',' << format_double(r.target) << ',' << format_double(r.gap)
            << ',' << format_double(r.bound) << '\n';
}

nlohmann::ordered_json to_json(const ConvergenceRow &row) {
    return {{"n", row.n}, {"rate", row.rate}, {"target", row.target}, {"gap", row.gap}, {"bound", row.bound}};
}

nlohmann::ordered_json to_json(const BracketRow &row) {
    return {{"N", row.base},         {"n", row.exponent},     {"m", row.m},
            {"lhs_ok", row.lhs_ok}, {"rhs_ok", row.rhs_ok}, {"rate", row.rate}};
}

nlohmann::ordered_json to_json(const SemicontinuityRow &row) {
    return {{"N", row.big_n}, {"trace_distance", row.trace_distance}, {"entropy", row.entropy}};
}

nlohmann::ordered_json to_json(const AxiomReport &report) {
    return {{"axiom", report.axiom},
            {"trials", report.trials},
            {"max_violation", report.max_violation},
            {"tolerance", report.tolerance},
            {"pass", report.pass}};
}

} // namespace entlab
