#pragma once

#include "entlab/states.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace entlab {

// State file layout:
//   { "blocks": [ { "sector": "<string>", "dim": d, "entries": [[re, im], ...] } ] }
// entries are row-major with d*d pairs. Readers validate the DensityMatrix
// invariants; failures raise Error whose message names the broken invariant.

[[nodiscard]] DensityMatrix parse_state_json(std::string_view text);
[[nodiscard]] DensityMatrix read_state_file(const std::filesystem::path &path);
[[nodiscard]] std::string   state_to_json(const DensityMatrix &rho);
void                        write_state_file(const std::filesystem::path &path, const DensityMatrix &rho);

} // namespace entlab
