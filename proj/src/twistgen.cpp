#include "tunnelrho/twistgen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tunnelrho/error.hpp"

namespace tunnelrho {

GeneratorMatrix GeneratorMatrix::inverse() const {
  long long d = det();  // +-1
  return GeneratorMatrix{name, {m[3] * d, -m[1] * d, -m[2] * d, m[0] * d}};
}

Slope GeneratorMatrix::apply(const Slope& s) const {
  return Slope(m[0] * s.p + m[1] * s.q, m[2] * s.p + m[3] * s.q);
}

GeneratorSet GeneratorSet::default_set() {
  GeneratorSet set;
  set.gens = {GeneratorMatrix{"T", {1, 2, 0, 1}},
              GeneratorMatrix{"U", {1, 0, 2, 1}},
              GeneratorMatrix{"H", {1, 0, 1, 1}}};
  set.check();
  return set;
}

GeneratorSet GeneratorSet::from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object())
    fail(Err::ParseError, "generator set must be a JSON object");
  GeneratorSet set;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_array() || value.size() != 4)
      fail(Err::ParseError,
           "generator \"" + name + "\" needs four integers a,b,c,d");
    GeneratorMatrix g;
    g.name = name;
    for (size_t i = 0; i < 4; ++i) {
      if (!value[i].is_number_integer())
        fail(Err::ParseError, "generator \"" + name + "\" has a non-integer entry");
      g.m[i] = value[i].get<long long>();
    }
    set.gens.push_back(g);
  }
  set.check();
  return set;
}

const GeneratorMatrix& GeneratorSet::at(const std::string& name) const {
  for (const GeneratorMatrix& g : gens)
    if (g.name == name) return g;
  fail(Err::UnknownGenerator, "no generator named \"" + name + "\"");
}

void GeneratorSet::check() const {
  const GeneratorMatrix t{"T", {1, 2, 0, 1}};
  bool has_t = false;
  for (const GeneratorMatrix& g : gens) {
    long long d = g.det();
    if (d != 1 && d != -1)
      fail(Err::InvalidGenerator,
           "generator \"" + g.name + "\" is not unimodular");
    // odd numerators stay odd iff a is odd and b is even
    if (g.m[0] % 2 == 0 || g.m[1] % 2 != 0)
      fail(Err::InvalidGenerator,
           "generator \"" + g.name + "\" does not preserve odd numerators");
    if (g == t) has_t = true;
  }
  if (!has_t)
    fail(Err::InvalidGenerator,
         "generator set must contain T = [[1,2],[0,1]]");
}

long long TwistWord::length() const {
  long long n = 0;
  for (const auto& [name, power] : letters) {
    (void)name;
    n += power < 0 ? -power : power;
  }
  return n;
}

std::string TwistWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& [name, power] : letters) {
    if (!s.empty()) s += " ";
    s += name;
    if (power != 1) s += "^" + std::to_string(power);
  }
  return s;
}

Slope apply_word(const TwistWord& word, const Slope& s,
                 const GeneratorSet& gens) {
  Slope cur = s;
  for (const auto& [name, power] : word.letters) {
    const GeneratorMatrix& g = gens.at(name);
    GeneratorMatrix step = power < 0 ? g.inverse() : g;
    long long reps = power < 0 ? -power : power;
    for (long long i = 0; i < reps; ++i) cur = step.apply(cur);
  }
  return cur;
}

namespace {

struct Letter {
  const GeneratorMatrix* gen;
  long long power;  // +1 or -1
  GeneratorMatrix action;
};

std::vector<Letter> alphabet(const GeneratorSet& gens) {
  std::vector<Letter> out;
  for (const GeneratorMatrix& g : gens.gens) {
    out.push_back({&g, 1, g});
    out.push_back({&g, -1, g.inverse()});
  }
  return out;
}

TwistWord compress(const std::vector<std::pair<std::string, long long>>& path) {
  TwistWord word;
  for (const auto& [name, power] : path) {
    if (!word.letters.empty() && word.letters.back().first == name &&
        (word.letters.back().second < 0) == (power < 0)) {
      word.letters.back().second += power;
    } else {
      word.letters.push_back({name, power});
    }
  }
  return word;
}

}  // namespace

std::set<Slope> orbit(const Slope& start, const GeneratorSet& gens,
                      int radius) {
  gens.check();
  auto letters = alphabet(gens);
  std::set<Slope> seen = {start};
  std::vector<Slope> frontier = {start};
  for (int d = 0; d < radius; ++d) {
    std::vector<Slope> next;
    for (const Slope& s : frontier) {
      for (const Letter& l : letters) {
        Slope t = l.action.apply(s);
        if (seen.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::optional<TwistWord> realize(const SlopeMod2& target,
                                 const GeneratorSet& gens, long long max_len) {
  if (parity(target.rep) != Parity::Odd)
    fail(Err::EvenNumeratorTarget,
         "targets of the twist search have odd numerator; got " +
             target.rep.str());
  gens.check();
  auto letters = alphabet(gens);

  const Slope start(1, 1);
  struct Trail {
    Slope parent;
    std::string name;
    long long power;
  };
  std::map<Slope, Trail> trail;
  std::deque<std::pair<Slope, long long>> queue;
  queue.push_back({start, 0});
  trail.emplace(start, Trail{start, "", 0});

  auto matches = [&target](const Slope& s) {
    return s.finite() && reduce_mod2(s) == target;
  };
  std::optional<Slope> hit;
  if (matches(start)) hit = start;

  while (!hit && !queue.empty()) {
    auto [cur, dist] = queue.front();
    queue.pop_front();
    if (dist == max_len) continue;
    for (const Letter& l : letters) {
      Slope t = l.action.apply(cur);
      if (trail.count(t)) continue;
      trail.emplace(t, Trail{cur, l.gen->name, l.power});
      if (matches(t)) {
        hit = t;
        break;
      }
      queue.push_back({t, dist + 1});
    }
  }
  if (!hit) return std::nullopt;

  std::vector<std::pair<std::string, long long>> path;
  for (Slope s = *hit; !(s == start);) {
    const Trail& tr = trail.at(s);
    path.push_back({tr.name, tr.power});
    s = tr.parent;
  }
  std::reverse(path.begin(), path.end());
  TwistWord word = compress(path);

  Slope check = apply_word(word, start, gens);
  if (!check.finite() || !(reduce_mod2(check) == target))
    throw std::logic_error("realized word failed re-verification");
  return word;
}

}  // namespace tunnelrho
