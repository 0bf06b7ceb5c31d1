#pragma once

#include "entlab/axiom_lab.hpp"
#include "entlab/large_numbers.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string>

namespace entlab {

/// Shortest locale-independent text with 17 significant digits ("inf" for +inf).
[[nodiscard]] std::string format_double(double value);

/// Quotes a CSV field when it contains a comma, quote or newline.
[[nodiscard]] std::string csv_field(const std::string &text);

/// Header `n,rate,target,gap,bound`, LF line endings.
void write_convergence_csv(std::ostream &out, std::span<const ConvergenceRow> rows);

[[nodiscard]] nlohmann::ordered_json to_json(const ConvergenceRow &row);
[[nodiscard]] nlohmann::ordered_json to_json(const BracketRow &row);
[[nodiscard]] nlohmann::ordered_json to_json(const SemicontinuityRow &row);

/// { "axiom": ..., "trials": n, "max_violation": x, "tolerance": t, "pass": b }
[[nodiscard]] nlohmann::ordered_json to_json(const AxiomReport &report);

} // namespace entlab
