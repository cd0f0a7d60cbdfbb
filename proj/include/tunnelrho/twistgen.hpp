#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tunnelrho/slope.hpp"

namespace tunnelrho {

// Configurable unimodular actions on slopes, modeling the effect of
// tangle replacements near the tunnel. Only T, the full twist about
// mu_t, is forced; the rest of the default set is a model and can be
// swapped out through a config file without code changes.

struct GeneratorMatrix {
  std::string name;
  std::array<long long, 4> m{};  // row-major a b / c d acting on (p, q)

  long long det() const { return m[0] * m[3] - m[1] * m[2]; }
  GeneratorMatrix inverse() const;
  Slope apply(const Slope& s) const;

  bool operator==(const GeneratorMatrix&) const = default;
};

struct GeneratorSet {
  std::vector<GeneratorMatrix> gens;  // order fixes BFS tie-breaking

  // T = [[1,2],[0,1]], U = [[1,0],[2,1]], H = [[1,0],[1,1]]
  static GeneratorSet default_set();

  // {"T":[1,2,0,1], ...}; key order is preserved. Every matrix must be
  // unimodular and preserve odd numerators, and T must be present with
  // its fixed matrix (Err::InvalidGenerator otherwise).
  static GeneratorSet from_json(const nlohmann::ordered_json& j);

  const GeneratorMatrix& at(const std::string& name) const;  // UnknownGenerator
  void check() const;
};

// Sequence of (generator name, integer power); the empty word is the
// identity. Words act left to right.
struct TwistWord {
  std::vector<std::pair<std::string, long long>> letters;

  long long length() const;  // total letter count, sum of |power|
  std::string str() const;   // e.g. "T^2 U^-1", "1" for the identity
};

Slope apply_word(const TwistWord& word, const Slope& s,
                 const GeneratorSet& gens);

// Every slope reachable from start by words of length <= radius.
std::set<Slope> orbit(const Slope& start, const GeneratorSet& gens, int radius);

// Shortest word w (lexicographically least in generator order among
// shortest) with reduce_mod2(apply_word(w, 1/1)) == target, or nullopt
// within max_len. Err::EvenNumeratorTarget when the target numerator is
// even. Found words are re-verified by application before returning.
std::optional<TwistWord> realize(const SlopeMod2& target,
                                 const GeneratorSet& gens, long long max_len);

}  // namespace tunnelrho
