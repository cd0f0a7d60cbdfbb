#include <doctest.h>

#include <algorithm>
#include <set>

#include "tunnelrho/error.hpp"
#include "tunnelrho/twistgen.hpp"

using namespace tunnelrho;

namespace {

TwistWord word(std::initializer_list<std::pair<std::string, long long>> ls) {
  TwistWord w;
  w.letters = ls;
  return w;
}

// all words over {g, g^-1} of length exactly len, applied letter by
// letter; the independent route the BFS is checked against
void brute_orbit(const GeneratorSet& gens, const Slope& start, int len,
                 std::set<Slope>* out) {
  out->insert(start);
  if (len == 0) return;
  for (const GeneratorMatrix& g : gens.gens) {
    for (long long power : {1LL, -1LL}) {
      Slope next = (power == 1 ? g : g.inverse()).apply(start);
      brute_orbit(gens, next, len - 1, out);
    }
  }
}

}  // namespace

TEST_CASE("generator sets validate at load") {
  GeneratorSet def = GeneratorSet::default_set();
  CHECK(def.gens.size() == 3);
  CHECK(def.at("T").m == std::array<long long, 4>{1, 2, 0, 1});
  CHECK_THROWS_AS(def.at("X"), Error);

  nlohmann::ordered_json custom = {{"T", {1, 2, 0, 1}}, {"S", {1, -2, 0, 1}}};
  CHECK(GeneratorSet::from_json(custom).gens.size() == 2);

  auto code = [](const nlohmann::ordered_json& j) {
    try {
      GeneratorSet::from_json(j);
    } catch (const Error& e) {
      return e.code();
    }
    return Err::ParseError;
  };
  // missing T
  CHECK(code({{"U", {1, 0, 2, 1}}}) == Err::InvalidGenerator);
  // not unimodular
  CHECK(code({{"T", {1, 2, 0, 1}}, {"B", {2, 0, 0, 1}}}) ==
        Err::InvalidGenerator);
  // sends odd numerators to even ones
  CHECK(code({{"T", {1, 2, 0, 1}}, {"B", {1, 1, 1, 2}}}) ==
        Err::InvalidGenerator);
}

TEST_CASE("apply_word") {
  GeneratorSet gens = GeneratorSet::default_set();
  CHECK(apply_word(word({{"T", 1}}), Slope(1, 3), gens) == Slope(7, 3));
  CHECK(apply_word(word({}), Slope(-5, 7), gens) == Slope(-5, 7));
  CHECK(apply_word(word({{"T", -2}, {"T", 2}}), Slope(3, 4), gens) ==
        Slope(3, 4));
  CHECK(apply_word(word({{"H", 1}}), Slope(1, 1), gens) == Slope(1, 2));
  CHECK(apply_word(word({{"H", -1}}), Slope(1, 1), gens) == slope_infinity());
  CHECK_THROWS_AS(apply_word(word({{"X", 1}}), Slope(1, 1), gens), Error);

  // T^k is add_full_twists(., k)
  for (long long k = -5; k <= 5; ++k)
    CHECK(apply_word(word({{"T", k}}), Slope(1, 3), gens) ==
          add_full_twists(Slope(1, 3), k));
}

TEST_CASE("apply_word respects composition") {
  GeneratorSet gens = GeneratorSet::default_set();
  std::vector<TwistWord> samples = {
      word({}), word({{"T", 2}}), word({{"U", 1}, {"T", -1}}),
      word({{"H", 2}, {"U", -1}, {"T", 3}})};
  std::vector<Slope> starts = {Slope(1, 1), Slope(1, 3), Slope(-3, 5),
                               slope_infinity()};
  for (const TwistWord& w1 : samples) {
    for (const TwistWord& w2 : samples) {
      TwistWord cat;
      cat.letters = w1.letters;
      cat.letters.insert(cat.letters.end(), w2.letters.begin(),
                         w2.letters.end());
      for (const Slope& s : starts)
        CHECK(apply_word(cat, s, gens) ==
              apply_word(w2, apply_word(w1, s, gens), gens));
    }
  }
}

TEST_CASE("T-words are invisible to reduce_mod2") {
  GeneratorSet gens = GeneratorSet::default_set();
  for (const Slope& s : {Slope(1, 1), Slope(1, 3), Slope(-5, 7), Slope(3, 4)})
    for (long long k = -8; k <= 8; ++k)
      CHECK(reduce_mod2(apply_word(word({{"T", k}}), s, gens)) ==
            reduce_mod2(s));
}

TEST_CASE("orbit of T alone is the twist ladder") {
  GeneratorSet t_only;
  t_only.gens = {GeneratorMatrix{"T", {1, 2, 0, 1}}};
  std::set<Slope> expect = {Slope(-3, 1), Slope(-1, 1), Slope(1, 1),
                            Slope(3, 1), Slope(5, 1)};
  CHECK(orbit(Slope(1, 1), t_only, 2) == expect);
  CHECK(orbit(Slope(1, 1), t_only, 0) == std::set<Slope>{Slope(1, 1)});
}

TEST_CASE("orbit is monotone and matches brute-force enumeration") {
  GeneratorSet gens = GeneratorSet::default_set();
  std::set<Slope> prev;
  // frozen sizes for the default set from 1/1: 1, 6, 19, 60, 189
  std::vector<size_t> sizes = {1, 6, 19, 60, 189};
  for (int r = 0; r <= 4; ++r) {
    std::set<Slope> bfs = orbit(Slope(1, 1), gens, r);
    CHECK(bfs.size() == sizes[static_cast<size_t>(r)]);
    CHECK(std::includes(bfs.begin(), bfs.end(), prev.begin(), prev.end()));
    std::set<Slope> brute;
    brute_orbit(gens, Slope(1, 1), r, &brute);
    CHECK(bfs == brute);
    prev = bfs;
  }
}

TEST_CASE("realize") {
  GeneratorSet gens = GeneratorSet::default_set();

  auto w = realize(reduce_mod2(Slope(1, 1)), gens, 6);
  REQUIRE(w.has_value());
  CHECK(w->letters.empty());

  w = realize(reduce_mod2(Slope(1, 3)), gens, 6);
  REQUIRE(w.has_value());
  CHECK(reduce_mod2(apply_word(*w, Slope(1, 1), gens)) ==
        reduce_mod2(Slope(1, 3)));

  // 1/2 has odd numerator: a legitimate target
  w = realize(reduce_mod2(Slope(1, 2)), gens, 6);
  REQUIRE(w.has_value());
  CHECK(w->length() <= 1);  // H alone reaches it
  CHECK(reduce_mod2(apply_word(*w, Slope(1, 1), gens)) ==
        reduce_mod2(Slope(1, 2)));

  try {
    realize(reduce_mod2(slope_zero()), gens, 4);
    FAIL("expected EvenNumeratorTarget");
  } catch (const Error& e) {
    CHECK(e.code() == Err::EvenNumeratorTarget);
  }

  // shortest-word searches can run out of budget
  GeneratorSet t_only;
  t_only.gens = {GeneratorMatrix{"T", {1, 2, 0, 1}}};
  CHECK_FALSE(realize(reduce_mod2(Slope(1, 3)), t_only, 8).has_value());
}

TEST_CASE("found words re-verify over a target sample") {
  GeneratorSet gens = GeneratorSet::default_set();
  for (const Slope& t : {Slope(1, 1), Slope(1, 3), Slope(-1, 3), Slope(3, 5),
                         Slope(1, 5), Slope(5, 7), Slope(1, 2)}) {
    SlopeMod2 target = reduce_mod2(t);
    auto w = realize(target, gens, 8);
    REQUIRE(w.has_value());
    Slope hit = apply_word(*w, Slope(1, 1), gens);
    CHECK(reduce_mod2(hit) == target);
    CHECK(w->length() <= 8);
  }
}

TEST_CASE("twist word formatting") {
  CHECK(word({}).str() == "1");
  CHECK(word({{"T", 2}, {"U", -1}}).str() == "T^2 U^-1");
  CHECK(word({{"H", 1}}).str() == "H");
  CHECK(word({{"T", 2}, {"U", -1}}).length() == 3);
}
