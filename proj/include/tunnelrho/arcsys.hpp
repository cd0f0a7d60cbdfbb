#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tunnelrho/slope.hpp"

namespace tunnelrho {

// Combinatorial trace of a splitting sphere on the 4-punctured sphere:
// a multiset of arc classes, each an isotopy class of a single arc
// carrying its slope coordinate. Waves (both ends on one puncture) and
// joining arcs (ends on two punctures) both appear.

enum class Puncture { MinusLeft, MinusRight, PlusLeft, PlusRight };

const char* puncture_name(Puncture p);
Puncture puncture_from_name(const std::string& name);  // Err::ParseError
bool is_minus(Puncture p);

enum class MeridianPair { Minus, Plus };

inline const char* meridian_name(MeridianPair m) {
  return m == MeridianPair::Minus ? "minus" : "plus";
}

// The complete pair of slope s pairs the four punctures up into the two
// arcs it consists of; which puncture goes with which depends only on
// the parities of p and q (read off from the flat realization):
//   p odd,  q odd   mu_l- <-> mu_r+ and mu_r- <-> mu_l+
//   p odd,  q even  mu_l- <-> mu_l+ and mu_r- <-> mu_r+
//   p even, q odd   mu_l- <-> mu_r- and mu_l+ <-> mu_r+
Puncture pair_partner(Puncture x, const Slope& s);

struct ArcClass {
  Puncture end1;
  Puncture end2;
  Slope slope;

  bool is_wave() const { return end1 == end2; }
  bool operator==(const ArcClass&) const = default;
};

struct ArcSystem {
  // (class, multiplicity), multiplicities positive
  std::vector<std::pair<ArcClass, long long>> classes;
};

struct ValidationReport {
  long long ends_minus_left = 0;
  long long ends_minus_right = 0;
  long long ends_plus_left = 0;
  long long ends_plus_right = 0;
  bool balanced = false;
  std::vector<std::string> class_issues;  // per-class consistency failures
  std::vector<std::string> pair_violations;  // pairwise disjointness failures

  bool valid() const {
    return balanced && class_issues.empty() && pair_violations.empty();
  }
};

// End balance per meridian pair plus pairwise realizability. Report
// valued; nothing throws.
ValidationReport validate(const ArcSystem& sys);

// All wave classes tagged by base puncture. Requires a valid system
// (Err::InvalidSystem otherwise) and checks that waves pair up: a wave
// on one copy of a meridian forces one on the other copy.
std::vector<std::pair<Puncture, ArcClass>> waves_of(const ArcSystem& sys);

// Slope of the complete pair the waves of a splitting sphere determine,
// together with the meridian carrying the waves.
struct AugmentedSlope {
  Slope slope;
  MeridianPair base;

  bool operator==(const AugmentedSlope&) const = default;
};

// nullopt when the system has no waves (the splitting disk misses both
// meridians). Err::MixedBases when waves sit on both a minus and a plus
// puncture; Err::InvalidSystem when validation fails otherwise.
std::optional<AugmentedSlope> derive_augmented_slope(const ArcSystem& sys);

// reduce_mod2 of the derived slope. Err::NoWaves without waves,
// Err::InfiniteSlope when the derived slope is 1/0.
SlopeMod2 rho_of_system(const ArcSystem& sys);

// The same system after k full twists about mu_t applied to every
// class. End data is unchanged (twists preserve both parities).
ArcSystem apply_full_twists(const ArcSystem& sys, long long k);

// Strict JSON form: {"classes":[{"end1":...,"end2":...,"slope":"p/q",
// "mult":1}, ...]}. Unknown keys are rejected; "mult" may be omitted
// and defaults to 1; a top-level "report" object (as emitted by the
// CLI) is tolerated and ignored.
ArcSystem arc_system_from_json(const nlohmann::json& j);
nlohmann::json arc_system_to_json(const ArcSystem& sys);

}  // namespace tunnelrho
