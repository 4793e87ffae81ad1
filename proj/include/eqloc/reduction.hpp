#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "eqloc/polytope.hpp"

namespace eqloc {

// gamma is regular iff no fixed point sits at normalized level gamma.
bool is_regular_value(std::int64_t gamma, const DelzantPolytope& p, const CircleData& c);

/// Index of the reduced space at a regular level: the number of lattice
/// points on the slice <a, xi> - shift = gamma. Throws PreconditionError at a
/// critical level, where the reduced space is singular.
std::int64_t reduced_lattice_count(std::int64_t gamma, const DelzantPolytope& p,
                                   const CircleData& c);

struct ReductionRow {
  std::int64_t level = 0;
  bool regular = false;
  std::int64_t reduced_index = 0;  // meaningful only when regular
  mpz_class multiplicity;
  bool agree = false;
};

ReductionRow reduce_at(std::int64_t gamma, const DelzantPolytope& p, const CircleData& c);

/// One row per integer level of the normalized range; critical rows are
/// listed but never compared.
std::vector<ReductionRow> qr_table(const DelzantPolytope& p, const CircleData& c);

// Multiplicity equals reduced index at every regular integer level.
bool qr_check(const DelzantPolytope& p, const CircleData& c);

// Tensoring L by C_{-gamma} moves level gamma to 0: the reduced index at
// gamma with shift s equals the one at 0 with shift s + gamma, for every
// regular gamma.
bool shifting_trick_check(const DelzantPolytope& p, const CircleData& c);

}  // namespace eqloc
