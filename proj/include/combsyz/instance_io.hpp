#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "combsyz/curve.hpp"
#include "combsyz/sheaf.hpp"

#include "json.hpp"

namespace combsyz {

// A validated instance: curve plus pair invariants, and optionally the node
// intersection dimensions k_i (length n-1), which are cross-checked against
// the kernel ranks (sum k_i must equal t_base exactly, and each t_i must
// meet the lower bound sum_{j != i} k_j implied by the kernel inclusions).
struct ParsedInstance {
  CombCurve curve;
  GeneratedPairData pair;
  std::optional<std::vector<std::int64_t>> intersection_dims;
  // Instance files give exactly one of section_dims / kernel_ranks; emit
  // writes back whichever form the file used.
  bool kernel_ranks_input = false;

  friend bool operator==(const ParsedInstance&, const ParsedInstance&) = default;
};

ParsedInstance instance_from_json(const nlohmann::json& j);

// Throws ParseError for unreadable files or malformed JSON, ValidationError
// for well-formed files whose fields violate an invariant; every validation
// message names the offending field.
ParsedInstance parse_instance(const std::filesystem::path& path);

ParsedInstance parse_instance_text(const std::string& text);

nlohmann::json emit_instance(const ParsedInstance& instance);

}  // namespace combsyz
