#include "combsyz/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

using nlohmann::json;

std::int64_t to_integer(const json& value, const std::string& field) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_string()) {
    // integers may arrive as strings; exactness is the caller's concern
    const std::string s = value.get<std::string>();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (...) {
    }
  }
  throw ValidationError(field + ": expected an integer, got " + value.dump());
}

std::int64_t get_integer(const json& j, const std::string& field) {
  if (!j.contains(field)) throw ValidationError(field + ": missing required field");
  return to_integer(j.at(field), field);
}

std::vector<std::int64_t> get_array(const json& j, const std::string& field,
                                    std::size_t expected) {
  if (!j.contains(field)) throw ValidationError(field + ": missing required field");
  const json& arr = j.at(field);
  if (!arr.is_array()) throw ValidationError(field + ": expected an array");
  if (arr.size() != expected) {
    throw ValidationError(field + ": expected " + std::to_string(expected) +
                          " entries, got " + std::to_string(arr.size()));
  }
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(to_integer(arr[i], field + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

}  // namespace

ParsedInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance: expected a JSON object");

  const std::int64_t n = get_integer(j, "n");
  if (n < 2) throw ValidationError("n: at least 2 components required, got " + std::to_string(n));
  const std::size_t un = static_cast<std::size_t>(n);

  CombCurve curve(get_array(j, "genera", un));
  const std::int64_t rank = get_integer(j, "rank");
  std::vector<std::int64_t> degrees = get_array(j, "degrees", un);
  const std::int64_t sections = get_integer(j, "l");

  const bool has_sections = j.contains("section_dims");
  const bool has_kernels = j.contains("kernel_ranks");
  if (has_sections == has_kernels) {
    throw ValidationError("exactly one of section_dims / kernel_ranks must be given");
  }

  GeneratedPairData pair =
      has_kernels
          ? GeneratedPairData::from_kernel_ranks(rank, std::move(degrees), sections,
                                                 get_array(j, "kernel_ranks", un))
          : GeneratedPairData(rank, std::move(degrees), sections,
                              get_array(j, "section_dims", un));

  std::optional<std::vector<std::int64_t>> intersections;
  if (j.contains("intersection_dims")) {
    std::vector<std::int64_t> ks = get_array(j, "intersection_dims", un - 1);
    // The base kernel is exactly the direct sum over the nodes.
    validate_base_kernel(ks, pair.sections(), pair.section_dim(curve.base_index()));
    // Each tooth kernel contains the other teeth's node intersections.
    const std::int64_t total = base_kernel_from_intersections(ks);
    for (int i = 0; i + 1 < curve.components(); ++i) {
      const std::int64_t lower = total - ks[static_cast<std::size_t>(i)];
      if (kernel_rank(pair, i) < lower) {
        throw ValidationError("kernel_ranks[" + std::to_string(i + 1) + "]: t_i = " +
                              std::to_string(kernel_rank(pair, i)) +
                              " is below the lower bound " + std::to_string(lower) +
                              " implied by intersection_dims");
      }
    }
    intersections = std::move(ks);
  }

  return ParsedInstance{std::move(curve), std::move(pair), std::move(intersections),
                        has_kernels};
}

ParsedInstance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return instance_from_json(j);
}

ParsedInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json emit_instance(const ParsedInstance& instance) {
  json j;
  j["n"] = instance.curve.components();
  j["genera"] = instance.curve.genera();
  j["rank"] = instance.pair.rank();
  j["degrees"] = instance.pair.degrees();
  j["l"] = instance.pair.sections();
  if (instance.kernel_ranks_input) {
    std::vector<std::int64_t> ts;
    ts.reserve(static_cast<std::size_t>(instance.pair.components()));
    for (int i = 0; i < instance.pair.components(); ++i) {
      ts.push_back(kernel_rank(instance.pair, i));
    }
    j["kernel_ranks"] = ts;
  } else {
    j["section_dims"] = instance.pair.section_dims();
  }
  if (instance.intersection_dims) j["intersection_dims"] = *instance.intersection_dims;
  return j;
}

}  // namespace combsyz
