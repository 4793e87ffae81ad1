#include "eqloc/character.hpp"

#include <numeric>
#include <string>

#include "eqloc/error.hpp"

namespace eqloc {

namespace {

void require_length(std::size_t rank, std::size_t len, const char* op) {
  if (rank != len) {
    throw PreconditionError(std::string(op) + ": weight length " + std::to_string(len) +
                            " does not match character rank " + std::to_string(rank));
  }
}

}  // namespace

Character Character::from_terms(std::size_t rank,
                                const std::vector<std::pair<Weight, long>>& terms) {
  Character c(rank);
  for (const auto& [w, m] : terms) {
    require_length(rank, w.size(), "Character::from_terms");
    c.add(w, mpz_class(m));
  }
  return c;
}

Character Character::circle(const std::vector<std::pair<std::int64_t, long>>& terms) {
  Character c(1);
  for (const auto& [w, m] : terms) c.add(Weight{w}, mpz_class(m));
  return c;
}

void Character::add(const Weight& w, const mpz_class& mult) {
  require_length(rank_, w.size(), "Character::add");
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class Character::total() const {
  mpz_class sum = 0;
  for (const auto& [w, m] : terms_) sum += m;
  return sum;
}

Character char_add(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) {
    throw PreconditionError("char_add: rank mismatch (" + std::to_string(a.rank()) + " vs " +
                            std::to_string(b.rank()) + ")");
  }
  Character out = a;
  for (const auto& [w, m] : b.terms()) out.add(w, m);
  return out;
}

Character char_negate(const Character& a) {
  Character out(a.rank());
  for (const auto& [w, m] : a.terms()) out.add(w, -m);
  return out;
}

Character char_tensor_shift(const Character& a, std::span<const std::int64_t> shift) {
  require_length(a.rank(), shift.size(), "char_tensor_shift");
  Character out(a.rank());
  for (const auto& [w, m] : a.terms()) {
    Weight moved = w;
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
    out.add(moved, m);
  }
  return out;
}

Character char_tensor_shift(const Character& a, std::int64_t shift) {
  const std::int64_t s[1] = {shift};
  return char_tensor_shift(a, std::span<const std::int64_t>(s, 1));
}

mpz_class multiplicity(const Character& a, std::span<const std::int64_t> weight) {
  require_length(a.rank(), weight.size(), "multiplicity");
  auto it = a.terms().find(Weight(weight.begin(), weight.end()));
  return it == a.terms().end() ? mpz_class(0) : it->second;
}

mpz_class multiplicity(const Character& a, std::int64_t weight) {
  const std::int64_t w[1] = {weight};
  return multiplicity(a, std::span<const std::int64_t>(w, 1));
}

bool is_primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 1;
}

Character restrict_to_circle(const Character& a, std::span<const std::int64_t> xi) {
  require_length(a.rank(), xi.size(), "restrict_to_circle");
  // The empty vector generates the trivial circle of a rank-0 torus.
  if (!xi.empty() && !is_primitive(xi)) {
    throw PreconditionError("restrict_to_circle: xi is not primitive");
  }
  Character out(1);
  for (const auto& [w, m] : a.terms()) {
    std::int64_t pairing = 0;
    for (std::size_t i = 0; i < w.size(); ++i) pairing += w[i] * xi[i];
    out.add(Weight{pairing}, m);
  }
  return out;
}

}  // namespace eqloc
