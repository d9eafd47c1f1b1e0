#pragma once

#include <optional>
#include <vector>

#include "rslist/interp.hpp"

namespace rslist {

/// One decoded candidate: a message polynomial together with its codeword
/// and the Hamming distance to the received word.
struct Candidate {
  UniPoly message;
  std::vector<uint32_t> codeword;
  int distance = 0;
};

struct DecodeResult {
  BiPoly q;                          ///< the interpolating polynomial used
  int w = 0;                         ///< weighted degree of q
  InterpParams params;
  int guarantee_radius = 0;          ///< every codeword within this distance is listed
  std::vector<Candidate> candidates; ///< sorted by (distance, message coefficients)
};

/// List decoding with multiplicity m: interpolates q, extracts its y-roots of
/// degree < k, and reports every root as a candidate with its distance.  The
/// guarantee radius is the largest t with t < n - w/m; codewords at distance
/// <= t cannot be missed, and the candidate list may be empty.
DecodeResult list_decode(const RSCode& code, const std::vector<uint32_t>& v, int m,
                         std::optional<int> l_override = std::nullopt);

/// Half-distance unique decoding, the m = l = 1 case collapsed to a
/// remainder-sequence loop on the pair (y - h, eta).  Returns the message
/// whenever some codeword lies within (n - k) / 2 of the received word, and
/// std::nullopt when the division leaves a remainder, the quotient degree
/// reaches k, or the decoded codeword is farther than the radius.
std::optional<UniPoly> unique_decode(const RSCode& code, const std::vector<uint32_t>& v);

/// For a received word v = c + e with wt(e) within the unique radius, the
/// minimal interpolating polynomial at m = l = 1 is exactly
/// locator * (y - h_c), where the locator is the monic product of (x -
/// alpha_i) over the error positions and h_c the message of c.  Returns that
/// product for cross-checking; throws TooManyErrors when wt(e) exceeds the
/// radius.
BiPoly error_locator_check(const RSCode& code, const std::vector<uint32_t>& v,
                           const std::vector<uint32_t>& c);

}  // namespace rslist
