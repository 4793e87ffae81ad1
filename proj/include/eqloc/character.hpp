#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace eqloc {

using Weight = std::vector<std::int64_t>;

/// A virtual representation of a torus: finitely many weights with signed
/// integer multiplicities. Zero multiplicities are never stored, and weights
/// are kept in lexicographic order, so equality and serialization are
/// canonical.
class Character {
 public:
  explicit Character(std::size_t rank = 1) : rank_(rank) {}

  static Character from_terms(std::size_t rank,
                              const std::vector<std::pair<Weight, long>>& terms);
  // Rank-1 shorthand: {weight: mult, ...}.
  static Character circle(const std::vector<std::pair<std::int64_t, long>>& terms);

  std::size_t rank() const noexcept { return rank_; }
  const std::map<Weight, mpz_class>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Adds `mult` to the multiplicity of `w`, dropping the entry if it hits 0.
  void add(const Weight& w, const mpz_class& mult);

  mpz_class total() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::size_t rank_;
  std::map<Weight, mpz_class> terms_;
};

Character char_add(const Character& a, const Character& b);
Character char_negate(const Character& a);

// Tensoring with the one-dimensional representation of weight `shift`.
Character char_tensor_shift(const Character& a, std::span<const std::int64_t> shift);
Character char_tensor_shift(const Character& a, std::int64_t shift);

mpz_class multiplicity(const Character& a, std::span<const std::int64_t> weight);
mpz_class multiplicity(const Character& a, std::int64_t weight);

// Restriction along the circle subgroup generated by the primitive vector xi.
Character restrict_to_circle(const Character& a, std::span<const std::int64_t> xi);

bool is_primitive(std::span<const std::int64_t> v);

}  // namespace eqloc
