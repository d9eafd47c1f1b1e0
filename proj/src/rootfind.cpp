#include "rslist/rootfind.hpp"

#include <algorithm>

namespace rslist {
namespace {

// Divides out the largest power of x dividing every row.
BiPoly strip_x(const BiPoly& q) {
  int s = -1;
  for (int j = 0; j <= q.ycap(); ++j) {
    if (q.row(j).is_zero()) continue;
    int t = q.row(j).trailing_zeros();
    if (s < 0 || t < s) s = t;
  }
  if (s <= 0) return q;
  BiPoly out(q.field(), q.ycap());
  for (int j = 0; j <= q.ycap(); ++j)
    if (!q.row(j).is_zero()) out.set_row(j, q.row(j).div_xpow(s));
  return out;
}

// q(x, x*y + gamma): row t of the result is x^t * sum_{j>=t} C(j,t)
// gamma^(j-t) row_j.
BiPoly substitute(const BiPoly& q, uint32_t gamma) {
  const Field& f = q.field();
  int cap = q.ycap();
  auto binom = binomial_table(f.characteristic(), cap + 1);
  std::vector<uint32_t> gpow(static_cast<size_t>(cap) + 1, 1);
  for (int e = 1; e <= cap; ++e) gpow[static_cast<size_t>(e)] = f.mul(gpow[static_cast<size_t>(e - 1)], gamma);

  BiPoly out(f, cap);
  for (int t = 0; t <= cap; ++t) {
    UniPoly acc(f);
    for (int j = t; j <= cap; ++j) {
      if (q.row(j).is_zero()) continue;
      uint32_t c = f.mul(binom[static_cast<size_t>(j)][static_cast<size_t>(t)],
                         gpow[static_cast<size_t>(j - t)]);
      acc += q.row(j).scaled(c);
    }
    out.set_row(t, acc.times_xpow(t));
  }
  return out;
}

void search(const BiPoly& cur, const BiPoly& original, int k, int depth,
            std::vector<uint32_t>& prefix, std::vector<UniPoly>& out) {
  const Field& f = cur.field();
  BiPoly q = strip_x(cur);

  // Roots of q(0, y), scanned over the whole field.
  std::vector<uint32_t> ry(static_cast<size_t>(q.ycap()) + 1, 0);
  for (int j = 0; j <= q.ycap(); ++j) ry[static_cast<size_t>(j)] = q.row(j).coeff(0);
  for (uint32_t gamma = 0; gamma < f.order(); ++gamma) {
    uint32_t acc = 0;
    for (size_t j = ry.size(); j-- > 0;) acc = f.add(f.mul(acc, gamma), ry[j]);
    if (acc != 0) continue;
    prefix.push_back(gamma);
    if (depth == k - 1) {
      UniPoly h(f, prefix);
      if (original.eval_y(h).is_zero()) out.push_back(std::move(h));
    } else {
      search(substitute(q, gamma), original, k, depth + 1, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<UniPoly> y_roots(const BiPoly& q, int k) {
  if (q.is_zero()) throw ZeroPolynomial("y-roots of the zero polynomial");
  std::vector<UniPoly> out;
  if (k < 1) return out;
  std::vector<uint32_t> prefix;
  search(q, q, k, 0, prefix, out);
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace rslist
