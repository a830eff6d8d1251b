#include "combsyz/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "combsyz/errors.hpp"

namespace combsyz {

namespace {

// Working row over the reduced variables x_1..x_{n-1} (the base weight is
// substituted out).  `mult` tracks the non-negative combination of source
// constraints this row is, so any ground contradiction is born with its
// Farkas certificate attached.
struct Row {
  std::vector<Int> c;
  Int b;
  bool strict = false;
  std::map<std::size_t, Rat> mult;
};

bool is_ground(const Row& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](const Int& v) { return v == 0; });
}

bool ground_false(const Row& r) { return r.b < 0 || (r.strict && r.b == 0); }

void reduce(Row& r) {
  Int g = abs(r.b);
  for (const Int& v : r.c) {
    g = gcd(g, v);
    if (g == 1) return;
  }
  if (g <= 1) return;  // includes the all-zero row
  for (Int& v : r.c) v /= g;
  r.b /= g;
  const Rat inv = make_rat(1, g);
  for (auto& [idx, m] : r.mult) m *= inv;
}

// upper.c[k] > 0, lower.c[k] < 0; the combination cancels x_k.
Row combine(const Row& upper, const Row& lower, std::size_t k) {
  const Int a = upper.c[k];
  const Int m = -lower.c[k];
  Row out;
  out.c.resize(upper.c.size());
  for (std::size_t j = 0; j < out.c.size(); ++j) {
    out.c[j] = m * upper.c[j] + a * lower.c[j];
  }
  out.b = m * upper.b + a * lower.b;
  out.strict = upper.strict || lower.strict;
  out.mult = upper.mult;
  for (auto& [idx, v] : out.mult) v *= Rat(m);
  const Rat ra(a);
  for (const auto& [idx, v] : lower.mult) out.mult[idx] += ra * v;
  reduce(out);
  return out;
}

// Multipliers scaled to coprime positive integers; ordered by source index,
// which lists catalog rows before simplex facets.
std::vector<CertificateLine> certificate_from(const Row& row,
                                              const std::vector<LinearConstraint>& system) {
  Int denom_lcm = 1;
  for (const auto& [idx, v] : row.mult) denom_lcm = lcm(denom_lcm, v.get_den());
  Int num_gcd = 0;
  for (const auto& [idx, v] : row.mult) {
    num_gcd = gcd(num_gcd, Int(v.get_num() * (denom_lcm / v.get_den())));
  }
  if (num_gcd == 0) num_gcd = 1;

  std::vector<CertificateLine> lines;
  lines.reserve(row.mult.size());
  for (const auto& [idx, v] : row.mult) {
    if (v <= 0) continue;
    const Int scaled = Int(v.get_num() * (denom_lcm / v.get_den())) / num_gcd;
    lines.push_back({system[idx].provenance, Rat(scaled)});
  }
  return lines;
}

struct BoundInfo {
  std::optional<Rat> value;
  bool strict = false;
};

void tighten_upper(BoundInfo& hi, const Rat& limit, bool strict) {
  if (!hi.value || limit < *hi.value) {
    hi.value = limit;
    hi.strict = strict;
  } else if (limit == *hi.value) {
    hi.strict = hi.strict || strict;
  }
}

void tighten_lower(BoundInfo& lo, const Rat& limit, bool strict) {
  if (!lo.value || limit > *lo.value) {
    lo.value = limit;
    lo.strict = strict;
  } else if (limit == *lo.value) {
    lo.strict = lo.strict || strict;
  }
}

}  // namespace

FeasibilityResult decide(const std::vector<LinearConstraint>& system) {
  if (system.empty()) throw ValidationError("decide: empty constraint system");
  const std::size_t n = system.front().coeffs.size();
  if (n < 2) throw ValidationError("decide: need at least 2 weights");
  for (const auto& row : system) {
    if (row.coeffs.size() != n) {
      throw ValidationError("decide: inconsistent constraint widths");
    }
  }
  const std::size_t m = n - 1;

  std::optional<Row> contradiction;
  auto admit = [&contradiction](Row row, std::vector<Row>& dst) {
    reduce(row);
    if (is_ground(row)) {
      if (ground_false(row) && !contradiction) contradiction = std::move(row);
      return;  // ground-true rows carry no information
    }
    dst.push_back(std::move(row));
  };

  // Substitute w_n = 1 - sum x_j; provenance multipliers are unaffected
  // because the equality enters with a free-signed multiplier the validator
  // reconstructs on its own.
  std::vector<Row> active;
  for (std::size_t idx = 0; idx < system.size() && !contradiction; ++idx) {
    const auto& src = system[idx];
    Row row;
    row.c.resize(m);
    const Int& base_coeff = src.coeffs[n - 1];
    for (std::size_t j = 0; j < m; ++j) row.c[j] = src.coeffs[j] - base_coeff;
    row.b = src.bound - base_coeff;
    row.strict = src.strict;
    row.mult = {{idx, Rat(1)}};
    admit(std::move(row), active);
  }

  // bounds[k]: the rows consumed when eliminating x_k, replayed during
  // back-substitution (they mention only x_1..x_k at that stage).
  std::vector<std::vector<Row>> bounds(m);
  for (std::size_t k = m; k-- > 0 && !contradiction;) {
    std::vector<Row> uppers, lowers, next;
    for (auto& row : active) {
      const int s = sgn(row.c[k]);
      if (s > 0) {
        uppers.push_back(std::move(row));
      } else if (s < 0) {
        lowers.push_back(std::move(row));
      } else {
        next.push_back(std::move(row));
      }
    }
    for (const auto& upper : uppers) {
      for (const auto& lower : lowers) {
        admit(combine(upper, lower, k), next);
        if (contradiction) break;
      }
      if (contradiction) break;
    }

    bounds[k].reserve(uppers.size() + lowers.size());
    std::move(uppers.begin(), uppers.end(), std::back_inserter(bounds[k]));
    std::move(lowers.begin(), lowers.end(), std::back_inserter(bounds[k]));

    // Same coefficient vector: keep only the dominating row.
    std::map<std::vector<Int>, std::size_t> seen;
    std::vector<Row> deduped;
    deduped.reserve(next.size());
    for (auto& row : next) {
      auto [it, inserted] = seen.try_emplace(row.c, deduped.size());
      if (inserted) {
        deduped.push_back(std::move(row));
        continue;
      }
      Row& kept = deduped[it->second];
      const bool replace = row.b < kept.b || (row.b == kept.b && row.strict && !kept.strict);
      if (replace) kept = std::move(row);
    }
    active = std::move(deduped);
  }

  if (contradiction) {
    FeasibilityResult result;
    result.status = FeasibilityResult::Status::Infeasible;
    result.certificate = certificate_from(*contradiction, system);
    return result;
  }

  // Feasible: back-substitute interval midpoints, lowest index first.
  std::vector<Rat> values(m);
  for (std::size_t k = 0; k < m; ++k) {
    BoundInfo lo, hi;
    for (const Row& row : bounds[k]) {
      Rat residual(row.b);
      for (std::size_t j = 0; j < k; ++j) residual -= Rat(row.c[j]) * values[j];
      const Rat limit = residual / Rat(row.c[k]);
      if (sgn(row.c[k]) > 0) {
        tighten_upper(hi, limit, row.strict);
      } else {
        tighten_lower(lo, limit, row.strict);
      }
    }
    Rat v;
    if (lo.value && hi.value) {
      if (*lo.value < *hi.value) {
        v = (*lo.value + *hi.value) / 2;
      } else if (*lo.value == *hi.value && !lo.strict && !hi.strict) {
        v = *lo.value;
      } else {
        throw std::logic_error("fourier-motzkin: empty interval after feasible elimination");
      }
    } else if (lo.value) {
      v = *lo.value + 1;
    } else if (hi.value) {
      v = *hi.value - 1;
    } else {
      v = 0;
    }
    values[k] = v;
  }

  std::vector<Rat> weights(n);
  Rat rest = 0;
  for (std::size_t j = 0; j < m; ++j) {
    weights[j] = values[j];
    rest += values[j];
  }
  weights[n - 1] = Rat(1) - rest;

  FeasibilityResult result;
  result.status = FeasibilityResult::Status::Feasible;
  result.witness = Polarization(std::move(weights));
  return result;
}

}  // namespace combsyz
