#pragma once

#include <optional>

#include "rslist/groebner.hpp"
#include "rslist/rs.hpp"

namespace rslist {

/// Parameters of one interpolation instance.
struct InterpParams {
  int n = 0;  ///< code length
  int k = 0;  ///< code dimension
  int m = 0;  ///< interpolation multiplicity at each point
  int N = 0;  ///< constraint budget: n * m * (m + 1) / 2 + 1
  int l = 0;  ///< y-degree cap of the search space
};

/// Computes the constraint budget N and the y-degree cap l for multiplicity
/// m: l is the largest integer with l * (l + 1) * (k - 1) < 2 * N, evaluated
/// in exact integer arithmetic, and always satisfies l >= m.  An explicit
/// override must be at least m.
InterpParams choose_params(int n, int k, int m, std::optional<int> l_override = std::nullopt);
InterpParams choose_params(const RSCode& code, int m,
                           std::optional<int> l_override = std::nullopt);

/// Generators of the module of polynomials with y-degree <= l that vanish
/// with multiplicity >= m at every point (alpha_i, v_i):
///
///   gens[i] = (y - h)^i * eta^(m-i)   for 0 <= i <= m
///   gens[i] = y^(i-m) * (y - h)^m     for m <  i <= l
///
/// where h interpolates the word v and eta is the node polynomial.
GeneratorSet build_generators(const RSCode& code, const std::vector<uint32_t>& v,
                              const InterpParams& params);

struct Interpolation {
  BiPoly q;            ///< minimal interpolating polynomial, leading coefficient 1
  InterpParams params;
  GeneratorSet basis;  ///< the full reduced basis
};

/// Builds the generators for (v, m, l) and reduces them; q is the minimal
/// element of the resulting basis.
Interpolation interpolate_q(const RSCode& code, const std::vector<uint32_t>& v, int m,
                            std::optional<int> l_override = std::nullopt,
                            const ReduceObserver& after_update = {});

}  // namespace rslist
