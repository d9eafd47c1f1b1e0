#include "rslist/decoder.hpp"

#include <algorithm>

#include "rslist/rootfind.hpp"

namespace rslist {

DecodeResult list_decode(const RSCode& code, const std::vector<uint32_t>& v, int m,
                         std::optional<int> l_override) {
  Interpolation interp = interpolate_q(code, v, m, l_override);
  const int n = code.n();

  DecodeResult res{std::move(interp.q), 0, interp.params, 0, {}};
  res.w = wdeg(interp.basis.order, res.q);
  int num = n * m - res.w - 1;
  res.guarantee_radius = num >= 0 ? num / m : -1;

  for (UniPoly& h : y_roots(res.q, code.k())) {
    std::vector<uint32_t> cw = code.encode(h);
    int dist = hamming_distance(v, cw);
    res.candidates.push_back(Candidate{std::move(h), std::move(cw), dist});
  }
  std::sort(res.candidates.begin(), res.candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.message.coeffs() < b.message.coeffs();
            });
  return res;
}

std::optional<UniPoly> unique_decode(const RSCode& code, const std::vector<uint32_t>& v) {
  const Field& f = code.field();
  const int k = code.k();
  UniPoly h = code.interpolate_word(v);

  // State (A, B, C, D) tracks the generator pair (Ay + B, Cy + D) of the
  // module spanned by y - h and eta; the loop drives the pair to a basis.
  UniPoly a(f), b = code.node_polynomial();
  UniPoly c = UniPoly::constant(f, 1), d = -h;
  while (c.deg() + k - 1 < d.deg()) {
    int gap = d.deg() - b.deg();
    uint32_t ratio = f.div(d.lc(), b.lc());
    if (gap >= 0) {
      c.sub_scaled_shifted(a, ratio, gap);
      d.sub_scaled_shifted(b, ratio, gap);
    } else {
      UniPoly old_a = std::move(a), old_b = std::move(b);
      a = c;
      b = d;
      c = c.times_xpow(-gap);
      c.sub_scaled_shifted(old_a, ratio, 0);
      d = d.times_xpow(-gap);
      d.sub_scaled_shifted(old_b, ratio, 0);
    }
  }

  if (c.is_zero()) return std::nullopt;
  auto [msg, rem] = UniPoly::divrem(-d, c);
  if (!rem.is_zero() || msg.deg() >= k) return std::nullopt;
  if (hamming_distance(v, code.encode(msg)) > code.unique_radius()) return std::nullopt;
  return msg;
}

BiPoly error_locator_check(const RSCode& code, const std::vector<uint32_t>& v,
                           const std::vector<uint32_t>& c) {
  const Field& f = code.field();
  if (v.size() != c.size() || static_cast<int>(v.size()) != code.n()) throw LengthMismatch();

  std::vector<uint32_t> error_points;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != c[i]) error_points.push_back(code.alphas()[i]);
  if (static_cast<int>(error_points.size()) > code.unique_radius()) throw TooManyErrors();

  UniPoly locator = node_poly(f, error_points);
  UniPoly hc = code.interpolate_word(c);
  BiPoly out(f, 1);
  out.set_row(1, locator);
  out.set_row(0, -(locator * hc));
  return out;
}

}  // namespace rslist
