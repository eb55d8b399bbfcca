#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylkit {

// Finite-index subgroup described as the kernel of a homomorphism onto a
// finite abelian group: generator s_v maps to images[v] modulo the moduli.
struct W0Data {
  std::vector<long long> moduli;
  std::map<std::string, std::vector<long long>> images;
};

struct RunConfig {
  int n_straight = 8;   // straightness window
  long k_power = 0;     // regularity power bound, 0 = twice the length
  int root_depth = 8;
  int hull_window = 4;
  int wall_depth = 6;
  long root_cap = 100000;
  long conj_budget = 100000;
  long ball_cap = 5000000;
  std::optional<W0Data> w0;
};

}  // namespace weylkit
