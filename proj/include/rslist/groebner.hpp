#pragma once

#include <functional>
#include <vector>

#include "rslist/bipoly.hpp"

namespace rslist {

/// An ordered list of module generators together with the monomial order
/// used to reduce them.  Viewing bivariate polynomials of y-degree <= l as a
/// free module over the univariate ring with basis 1, y, ..., y^l, the list
/// gens[0..l] spans a submodule.
struct GeneratorSet {
  WeightedOrder order;
  std::vector<BiPoly> gens;
};

/// Called after every row update during reduce() with the current state and
/// the indices involved: gens[r] was rewritten against gens[s] with degree
/// gap d (negative d means the pair was also swapped).
using ReduceObserver =
    std::function<void(const GeneratorSet& state, int r, int s, int d)>;

/// Reduces the generator list to a Groebner basis of the module it spans.
///
/// Requires y-deg(gens[i]) = i on input.  Working upward through r, the
/// leading term of gens[r] is repeatedly cancelled against the generator
/// whose leading term sits at the same y-degree s < r:
///
///   d >= 0:  gens[r] -= c * x^d * gens[s]
///   d <  0:  (gens[s], gens[r]) <- (gens[r], x^-d * gens[r] - c * gens[s])
///
/// where d is the x-degree gap of the two rows at y-degree s and c the ratio
/// of their leading coefficients.  The loop for r ends when the leading term
/// of gens[r] has y-degree exactly r; generators with pairwise distinct
/// leading y-degrees form a Groebner basis of the module.
GeneratorSet reduce(GeneratorSet gs, const ReduceObserver& after_update = {});

/// The basis element with the smallest leading term, scaled so its leading
/// coefficient is 1.
BiPoly minimal_element(const GeneratorSet& basis);

/// Remainder of f under multivariate division by the basis: repeatedly
/// cancels leading terms divisible by some basis leading term (x^a y^j
/// divides x^b y^j for a <= b) and moves irreducible leading terms to the
/// remainder.  The remainder is zero exactly when f lies in the module
/// spanned by a Groebner basis.
BiPoly normal_form(const BiPoly& f, const GeneratorSet& basis);

}  // namespace rslist
