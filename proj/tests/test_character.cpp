#include <doctest.h>

#include <map>
#include <random>

#include "eqloc/character.hpp"
#include "eqloc/error.hpp"

using namespace eqloc;

namespace {

// Plain-map model of a rank-1 character used as the oracle.
using Model = std::map<std::int64_t, long>;

Character from_model(const Model& m) {
  Character c(1);
  for (auto [w, k] : m) c.add({w}, k);
  return c;
}

Model random_model(std::mt19937_64& rng) {
  Model m;
  std::uniform_int_distribution<int> n(0, 6), w(-5, 5), k(-3, 3);
  for (int i = n(rng); i > 0; --i) m[w(rng)] += k(rng);
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

}  // namespace

TEST_CASE("char_add examples") {
  CHECK(char_add(Character::circle({{0, 1}}), Character::circle({{0, 1}})) ==
        Character::circle({{0, 2}}));
  CHECK(char_add(Character::circle({{-1, 1}, {2, 3}}), Character::circle({{2, -3}})) ==
        Character::circle({{-1, 1}}));
  Character sum(1);
  for (std::int64_t w : {-1, 0, 1, 2}) sum = char_add(sum, Character::circle({{w, 1}}));
  CHECK(sum == Character::circle({{-1, 1}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("char_add rejects a rank mismatch") {
  CHECK_THROWS_AS(char_add(Character(1), Character(2)), PreconditionError);
}

TEST_CASE("zero multiplicities are never stored") {
  Character c(1);
  c.add({3}, 2);
  c.add({3}, -2);
  CHECK(c.empty());
  CHECK(c == Character(1));
  c.add({4}, 0);
  CHECK(c.empty());
}

TEST_CASE("char_tensor_shift examples") {
  CHECK(char_tensor_shift(Character::circle({{0, 1}}), 0) == Character::circle({{0, 1}}));
  CHECK(char_tensor_shift(Character::circle({{2, 5}}), -2) == Character::circle({{0, 5}}));
  const std::int64_t k = 4, m = 3;
  Character c(1), expect(1);
  for (std::int64_t i = 0; i <= k; ++i) {
    c.add({i - m}, 1);
    expect.add({i}, 1);
  }
  CHECK(char_tensor_shift(c, m) == expect);
  CHECK_THROWS_AS(char_tensor_shift(Character(2), std::vector<std::int64_t>{1}),
                  PreconditionError);
}

TEST_CASE("multiplicity examples") {
  const Character c = Character::circle({{-1, 1}, {0, 1}, {1, 1}, {2, 1}});
  CHECK(multiplicity(c, 1) == 1);
  CHECK(multiplicity(c, 5) == 0);
  CHECK(multiplicity(Character(1), 0) == 0);
  CHECK_THROWS_AS(multiplicity(Character(2), 0), PreconditionError);
}

TEST_CASE("restrict_to_circle examples") {
  const std::vector<std::int64_t> xi11{1, 1}, xi12{1, 2}, xi57{5, -7};
  CHECK(restrict_to_circle(Character::from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}), xi11) ==
        Character::circle({{1, 2}}));
  CHECK(restrict_to_circle(Character::from_terms(2, {{{0, 0}, 1}}), xi57) ==
        Character::circle({{0, 1}}));
  CHECK(restrict_to_circle(Character::from_terms(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}),
                           xi12) == Character::circle({{0, 1}, {1, 1}, {2, 1}}));
  const std::vector<std::int64_t> bad{2, 4};
  CHECK_THROWS_AS(restrict_to_circle(Character(2), bad), PreconditionError);
}

TEST_CASE("big multiplicities do not overflow") {
  Character c(1);
  const mpz_class big("123456789012345678901234567890");
  c.add({0}, big);
  c.add({0}, big);
  CHECK(multiplicity(c, 0) == 2 * big);
}

TEST_CASE("properties against the map model") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Model a = random_model(rng), b = random_model(rng);
    const Character ca = from_model(a), cb = from_model(b);
    const Character sum = char_add(ca, cb);
    for (std::int64_t g = -6; g <= 6; ++g) {
      const long ea = a.count(g) ? a.at(g) : 0, eb = b.count(g) ? b.at(g) : 0;
      CHECK(multiplicity(sum, g) == ea + eb);
    }
    for (const auto& [w, m] : sum.terms()) CHECK(m != 0);
    const std::int64_t s = std::uniform_int_distribution<int>(-4, 4)(rng);
    CHECK(char_tensor_shift(char_tensor_shift(ca, s), -s) == ca);
    CHECK(char_add(ca, char_negate(ca)).empty());
  }
}

TEST_CASE("restriction is additive and intertwines shifts") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> w(-3, 3), k(-2, 2);
  const std::vector<std::int64_t> xi{2, -3};
  for (int trial = 0; trial < 200; ++trial) {
    Character a(2), b(2);
    for (int i = 0; i < 5; ++i) {
      a.add({w(rng), w(rng)}, k(rng));
      b.add({w(rng), w(rng)}, k(rng));
    }
    CHECK(restrict_to_circle(char_add(a, b), xi) ==
          char_add(restrict_to_circle(a, xi), restrict_to_circle(b, xi)));
    const std::vector<std::int64_t> sigma{w(rng), w(rng)};
    const std::int64_t paired = sigma[0] * xi[0] + sigma[1] * xi[1];
    CHECK(restrict_to_circle(char_tensor_shift(a, sigma), xi) ==
          char_tensor_shift(restrict_to_circle(a, xi), paired));
  }
}
