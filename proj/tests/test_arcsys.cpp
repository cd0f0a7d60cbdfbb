#include <doctest.h>

#include <numeric>

#include "tunnelrho/arcsys.hpp"
#include "tunnelrho/error.hpp"
#include "tunnelrho/pillowcase.hpp"

using namespace tunnelrho;

namespace {

constexpr Puncture ML = Puncture::MinusLeft;
constexpr Puncture MR = Puncture::MinusRight;
constexpr Puncture PL = Puncture::PlusLeft;
constexpr Puncture PR = Puncture::PlusRight;

ArcClass wave(Puncture base, Slope s) { return ArcClass{base, base, s}; }
ArcClass join(Puncture a, Puncture b, Slope s) { return ArcClass{a, b, s}; }

ArcSystem make(std::initializer_list<ArcClass> classes) {
  ArcSystem sys;
  for (const ArcClass& c : classes) sys.classes.push_back({c, 1});
  return sys;
}

// waves based on one meridian pair plus the joining pair they determine
ArcSystem sphere_trace(Slope s, MeridianPair base) {
  Puncture left = base == MeridianPair::Minus ? ML : PL;
  Puncture right = base == MeridianPair::Minus ? MR : PR;
  return make({wave(left, s), wave(right, s), join(ML, pair_partner(ML, s), s),
               join(MR, pair_partner(MR, s), s)});
}

// the two joining classes of a complete pair of slope s
ArcSystem complete_pair_system(Slope s) {
  ArcClass first = join(ML, pair_partner(ML, s), s);
  Puncture rest1 = PR, rest2 = PL;
  for (Puncture x : {MR, PL, PR}) {
    if (x != first.end2) {
      rest1 = x;
      rest2 = pair_partner(x, s);
      break;
    }
  }
  return make({first, join(rest1, rest2, s)});
}

}  // namespace

TEST_CASE("puncture pairing of a complete pair") {
  // odd/odd crosses the square diagonally
  CHECK(pair_partner(ML, Slope(1, 1)) == PR);
  CHECK(pair_partner(MR, Slope(1, 3)) == PL);
  // odd/even joins each side to the puncture above it
  CHECK(pair_partner(ML, slope_infinity()) == PL);
  CHECK(pair_partner(MR, Slope(1, 2)) == PR);
  // even numerator stays within a row
  CHECK(pair_partner(ML, slope_zero()) == MR);
  CHECK(pair_partner(PL, Slope(2, 1)) == PR);
  // partner is an involution
  for (const Slope& s : {Slope(1, 1), Slope(1, 2), Slope(0, 1), Slope(-3, 5)})
    for (Puncture x : {ML, MR, PL, PR})
      CHECK(pair_partner(pair_partner(x, s), s) == x);
}

TEST_CASE("every realized complete pair validates as a system") {
  for (long long q = 0; q <= 6; ++q) {
    for (long long p = -6; p <= 6; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      Slope s(p, q);
      ArcSystem sys = complete_pair_system(s);
      CHECK(validate(sys).valid());
      CHECK(waves_of(sys).empty());
      // trace-style doubling: waves on either meridian pair stay valid
      if (parity(s) == Parity::Odd) {
        CHECK(validate(sphere_trace(s, MeridianPair::Minus)).valid());
        CHECK(validate(sphere_trace(s, MeridianPair::Plus)).valid());
      }
    }
  }
}

TEST_CASE("validation: end balance") {
  CHECK_FALSE(validate(make({wave(ML, Slope(1, 3))})).balanced);
  CHECK(validate(make({wave(ML, Slope(1, 3)), wave(MR, Slope(1, 3))})).valid());
  CHECK(validate(make({join(ML, PR, Slope(1, 3)), join(MR, PL, Slope(1, 3))}))
            .valid());
  CHECK_FALSE(validate(make({wave(PL, Slope(1, 1))})).balanced);
}

TEST_CASE("validation: class consistency") {
  // slope 1/1 pairs MinusLeft with PlusRight, not PlusLeft
  auto rep = validate(make({join(ML, PL, Slope(1, 1))}));
  CHECK_FALSE(rep.class_issues.empty());
  // a minus-to-plus joining arc needs an odd numerator; 2/3 pairs rows
  rep = validate(make({join(ML, PR, Slope(2, 3))}));
  CHECK_FALSE(rep.class_issues.empty());
  // waves carry odd slopes
  rep = validate(make({wave(ML, slope_zero()), wave(MR, slope_zero())}));
  CHECK_FALSE(rep.class_issues.empty());
}

TEST_CASE("validation: pairwise distance") {
  // delta(1/3, 1/1) = 2: the pairs cross
  auto rep = validate(make({join(ML, PR, Slope(1, 3)), join(MR, PL, Slope(1, 1))}));
  CHECK_FALSE(rep.pair_violations.empty());

  // delta 1 classes coexist; their realized pairs are disjoint
  ArcSystem ok = make({join(ML, MR, slope_zero()), join(ML, PR, Slope(1, 1)),
                       join(MR, PL, Slope(1, 1))});
  CHECK(validate(ok).valid());
  CHECK(count_crossings(realize_pair(slope_zero()), realize_pair(Slope(1, 1))) ==
        0);
}

TEST_CASE("validation: a wave walls off the puncture it encircles") {
  // wave at MinusLeft with slope 1/1 encircles PlusRight; a joining arc
  // into PlusRight of a different pair cannot avoid it
  ArcSystem bad = make({wave(ML, Slope(1, 1)), wave(MR, Slope(1, 1)),
                        join(MR, PR, slope_infinity())});
  CHECK_FALSE(validate(bad).pair_violations.empty());

  // its own spanning arc is the one arc allowed in
  CHECK(validate(sphere_trace(Slope(1, 1), MeridianPair::Minus)).valid());
}

TEST_CASE("waves_of") {
  CHECK(waves_of(make({join(ML, PR, Slope(1, 3)), join(MR, PL, Slope(1, 3))}))
            .empty());

  auto ws = waves_of(sphere_trace(Slope(1, 3), MeridianPair::Minus));
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].first == ML);
  CHECK(ws[1].first == MR);

  CHECK_THROWS_AS(waves_of(make({wave(PL, Slope(1, 1))})), Error);
  try {
    waves_of(make({wave(PL, Slope(1, 1))}));
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidSystem);
  }
}

TEST_CASE("derive_augmented_slope") {
  auto aug = derive_augmented_slope(sphere_trace(Slope(1, 3), MeridianPair::Minus));
  REQUIRE(aug.has_value());
  CHECK(aug->slope == Slope(1, 3));
  CHECK(aug->base == MeridianPair::Minus);

  aug = derive_augmented_slope(sphere_trace(Slope(1, 3), MeridianPair::Plus));
  REQUIRE(aug.has_value());
  CHECK(aug->slope == Slope(1, 3));
  CHECK(aug->base == MeridianPair::Plus);

  // no waves: the splitting disk misses the meridians
  CHECK_FALSE(derive_augmented_slope(
                  make({join(ML, PR, Slope(1, 1)), join(MR, PL, Slope(1, 1))}))
                  .has_value());

  // infinite derived slope is representable; only the mod-2 class fails
  aug = derive_augmented_slope(sphere_trace(slope_infinity(), MeridianPair::Minus));
  REQUIRE(aug.has_value());
  CHECK(aug->slope.infinite());
}

TEST_CASE("mixed bases are rejected before anything else") {
  ArcSystem mixed = make({wave(ML, slope_infinity()), wave(MR, slope_infinity()),
                          wave(PL, slope_infinity()), wave(PR, slope_infinity())});
  CHECK(validate(mixed).balanced);
  try {
    derive_augmented_slope(mixed);
    FAIL("expected MixedBases");
  } catch (const Error& e) {
    CHECK(e.code() == Err::MixedBases);
  }
}

TEST_CASE("rho_of_system") {
  CHECK(rho_of_system(sphere_trace(Slope(7, 3), MeridianPair::Minus)) ==
        SlopeMod2{Slope(1, 3)});
  CHECK(rho_of_system(sphere_trace(Slope(-1, 1), MeridianPair::Minus)) ==
        SlopeMod2{Slope(1, 1)});
  CHECK(rho_of_system(sphere_trace(Slope(1, 3), MeridianPair::Plus)) ==
        SlopeMod2{Slope(1, 3)});

  try {
    rho_of_system(make({join(ML, PR, Slope(1, 1)), join(MR, PL, Slope(1, 1))}));
    FAIL("expected NoWaves");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NoWaves);
  }
  try {
    rho_of_system(sphere_trace(slope_infinity(), MeridianPair::Minus));
    FAIL("expected InfiniteSlope");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InfiniteSlope);
  }
}

TEST_CASE("uniform twists shift the derived slope by 2k and fix rho") {
  for (const Slope& s : {Slope(1, 3), Slope(-1, 1), Slope(5, 7)}) {
    ArcSystem sys = sphere_trace(s, MeridianPair::Minus);
    SlopeMod2 rho = rho_of_system(sys);
    for (long long k = -6; k <= 6; ++k) {
      ArcSystem twisted = apply_full_twists(sys, k);
      CHECK(validate(twisted).valid());
      auto aug = derive_augmented_slope(twisted);
      REQUIRE(aug.has_value());
      CHECK(aug->slope == add_full_twists(s, k));
      CHECK(rho_of_system(twisted) == rho);
    }
  }
}

TEST_CASE("json ingestion is strict") {
  nlohmann::json good = nlohmann::json::parse(R"({
    "classes": [
      {"end1": "MinusLeft", "end2": "MinusLeft", "slope": "1/3", "mult": 1},
      {"end1": "MinusRight", "end2": "MinusRight", "slope": "1/3"},
      {"end1": "MinusLeft", "end2": "PlusRight", "slope": "1/3", "mult": 1},
      {"end1": "MinusRight", "end2": "PlusLeft", "slope": "1/3", "mult": 1}
    ]
  })");
  ArcSystem sys = arc_system_from_json(good);
  CHECK(sys.classes.size() == 4);
  CHECK(validate(sys).valid());
  CHECK(rho_of_system(sys) == SlopeMod2{Slope(1, 3)});

  // round trip through the emitted form
  CHECK(arc_system_to_json(arc_system_from_json(arc_system_to_json(sys))) ==
        arc_system_to_json(sys));

  // a top-level report (as the CLI emits) is tolerated
  nlohmann::json with_report = arc_system_to_json(sys);
  with_report["report"] = {{"valid", true}};
  CHECK(arc_system_from_json(with_report).classes.size() == 4);

  auto reject = [](const char* text) {
    CHECK_THROWS_AS(arc_system_from_json(nlohmann::json::parse(text)), Error);
  };
  reject(R"({"classes": [], "extra": 1})");
  reject(R"({"classes": [{"end1":"MinusLeft","end2":"MinusLeft","slope":"1/3","color":"red"}]})");
  reject(R"({"classes": [{"end1":"Nowhere","end2":"MinusLeft","slope":"1/3"}]})");
  reject(R"({"classes": [{"end1":"MinusLeft","end2":"MinusLeft","slope":"x"}]})");
  reject(R"({"classes": [{"end1":"MinusLeft","end2":"MinusLeft","slope":"1/3","mult":0}]})");
  reject(R"({"classes": [{"end1":"MinusLeft","end2":"MinusLeft","slope":"1/3","mult":1.5}]})");
  reject(R"({"classes": [{"end1":"MinusLeft","end2":"MinusLeft"}]})");
  reject(R"([1,2,3])");
}
