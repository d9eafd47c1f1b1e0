#pragma once

#include <vector>

#include "rslist/bipoly.hpp"

namespace rslist {

/// All univariate h with deg h < k and q(x, h(x)) = 0, found by fixing the
/// coefficients of h one at a time: the constant term of a y-root must be a
/// root of q(0, y), and the higher coefficients are roots of the transformed
/// polynomial q(x, x*y + gamma) with common x-powers stripped.  Every
/// candidate is verified by full substitution before it is returned, and the
/// result is sorted by coefficient list.  Throws ZeroPolynomial when q = 0,
/// for which every h would qualify.
std::vector<UniPoly> y_roots(const BiPoly& q, int k);

}  // namespace rslist
