#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "toric/poset_builder.hpp"
#include "toric/poset_invariants.hpp"

namespace toric {

enum class OutputFormat { json, dot, summary };

struct RunConfig {
  std::string input_path;
  ArrangementKind mode = ArrangementKind::toric;
  OutputFormat format = OutputFormat::summary;
  bool compute_invariants = false;
  bool verify = false;
  int max_ground_set = kDefaultMaxGroundSet;
};

// Whitespace-separated integer rows; lines starting with '#' and blank lines
// are skipped. Column j of the result is the j-th vector of the arrangement.
IntMatrix parse_matrix(std::string_view text);

// Deterministic serializations. Subset members are printed 1-based.
std::string emit_json(const HasseDiagram& h, const MobiusTable* mobius_table,
                      const CharPolynomial* char_poly);
std::string emit_dot(const HasseDiagram& h);
std::string emit_summary(const HasseDiagram& h, const MobiusTable* mobius_table,
                         const CharPolynomial* char_poly,
                         const std::optional<bool>& verified);

// Full pipeline behind the executable. Returns 0 on success, 1 on input or
// size errors, 2 when --verify finds a mismatch.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace toric
