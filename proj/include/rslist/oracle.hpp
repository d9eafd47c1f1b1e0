#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rslist/bipoly.hpp"
#include "rslist/rs.hpp"

namespace rslist {

/// Brute-force reference for the interpolation step, sharing no code path
/// with the module reduction: the vanishing conditions "multiplicity >= m at
/// (alpha_s, v_s)" are written out as explicit linear constraints on the
/// monomial coefficients, monomials are enumerated in ascending (1, k-1)-
/// weighted order, and Gaussian elimination finds the first monomial prefix
/// whose constraint columns become linearly dependent.  The returned
/// polynomial is the resulting kernel combination, which is the minimal
/// element of the ideal under the order; its leading coefficient is 1 and
/// the vanishing conditions are re-verified before returning.
///
/// The point list may be any set of distinct x-coordinates; k only fixes the
/// monomial order weight and must be at least 2.  Throws InstanceTooLarge
/// when more than 2'000'000 constraint-matrix entries would be needed.
BiPoly oracle_min_poly(const Field& f, const std::vector<uint32_t>& alphas,
                       const std::vector<uint32_t>& values, int k, int m, int l);
BiPoly oracle_min_poly(const RSCode& code, const std::vector<uint32_t>& values, int m, int l);

/// Exhaustive nearest-codeword search over all q^k messages, evaluating each
/// message directly with raw field operations.  Returns the closest codeword
/// and its distance (the first one found on ties, enumerating messages by
/// ascending coefficient odometer).  Throws InstanceTooLarge when q^k
/// exceeds 2'000'000.
std::pair<std::vector<uint32_t>, int> oracle_nearest(const RSCode& code,
                                                     const std::vector<uint32_t>& v);

}  // namespace rslist
