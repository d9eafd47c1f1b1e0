#include "rslist/interp.hpp"

#include <stdexcept>

namespace rslist {

InterpParams choose_params(int n, int k, int m, std::optional<int> l_override) {
  if (k < 2) throw KTooSmall();
  if (n <= k) throw std::invalid_argument("code length must exceed the dimension");
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");

  InterpParams params;
  params.n = n;
  params.k = k;
  params.m = m;
  long long big_n = static_cast<long long>(n) * m * (m + 1) / 2 + 1;
  params.N = static_cast<int>(big_n);

  if (l_override) {
    if (*l_override < m) throw LOverrideBelowM();
    params.l = *l_override;
    return params;
  }

  long long l = 1;
  while ((l + 1) * (l + 2) * (k - 1) < 2 * big_n) ++l;
  params.l = static_cast<int>(l);
  if (params.l < m) throw UnexpectedZero("computed list size below multiplicity");
  return params;
}

InterpParams choose_params(const RSCode& code, int m, std::optional<int> l_override) {
  return choose_params(code.n(), code.k(), m, l_override);
}

GeneratorSet build_generators(const RSCode& code, const std::vector<uint32_t>& v,
                              const InterpParams& params) {
  const Field& f = code.field();
  const int m = params.m, l = params.l;
  UniPoly h = code.interpolate_word(v);
  const UniPoly& eta = code.node_polynomial();

  // Powers of eta up to m and of (y - h) up to m, built incrementally.
  std::vector<UniPoly> eta_pow;
  eta_pow.push_back(UniPoly::constant(f, 1));
  for (int i = 1; i <= m; ++i) eta_pow.push_back(eta_pow.back() * eta);

  std::vector<BiPoly> ypow;
  {
    BiPoly one(f, l);
    one.set_row(0, UniPoly::constant(f, 1));
    ypow.push_back(std::move(one));
  }
  for (int i = 1; i <= m; ++i) ypow.push_back(ypow.back().times_y_minus(h));

  std::vector<BiPoly> gens;
  gens.reserve(static_cast<size_t>(l) + 1);
  for (int i = 0; i <= m; ++i) {
    if (i == m)
      gens.push_back(ypow[static_cast<size_t>(i)]);
    else
      gens.push_back(ypow[static_cast<size_t>(i)].times_uni(eta_pow[static_cast<size_t>(m - i)]));
  }
  for (int i = m + 1; i <= l; ++i) gens.push_back(gens.back().times_y(1));

  return GeneratorSet{WeightedOrder(params.k - 1), std::move(gens)};
}

Interpolation interpolate_q(const RSCode& code, const std::vector<uint32_t>& v, int m,
                            std::optional<int> l_override, const ReduceObserver& after_update) {
  if (static_cast<int>(v.size()) != code.n()) throw LengthMismatch();
  InterpParams params = choose_params(code, m, l_override);
  GeneratorSet basis = reduce(build_generators(code, v, params), after_update);
  BiPoly q = minimal_element(basis);
  return Interpolation{std::move(q), params, std::move(basis)};
}

}  // namespace rslist
