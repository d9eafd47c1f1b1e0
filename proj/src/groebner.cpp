#include "rslist/groebner.hpp"

#include <algorithm>
#include <utility>

namespace rslist {

GeneratorSet reduce(GeneratorSet gs, const ReduceObserver& after_update) {
  const int l = static_cast<int>(gs.gens.size()) - 1;
  if (l < 0) throw MalformedInput("empty generator list");
  for (int i = 0; i <= l; ++i)
    if (gs.gens[static_cast<size_t>(i)].ydeg() != i)
      throw MalformedInput("generator y-degrees must be 0..l in order");

  const Field& f = gs.gens[0].field();
  for (int r = 1; r <= l; ++r) {
    for (;;) {
      BiPoly& gr = gs.gens[static_cast<size_t>(r)];
      if (gr.is_zero()) throw UnexpectedZero();
      int s = leading_term(gs.order, gr).mono.j;
      if (s == r) break;
      BiPoly& gsrow = gs.gens[static_cast<size_t>(s)];
      const UniPoly& ars = gr.row(s);
      const UniPoly& ass = gsrow.row(s);
      int d = ars.deg() - ass.deg();
      uint32_t c = f.div(ars.lc(), ass.lc());
      if (d >= 0) {
        gr.sub_scaled_shifted(gsrow, c, d);
      } else {
        BiPoly old_s = std::move(gsrow);
        gsrow = gr;
        gr = gr.times_xpow(-d);
        gr.sub_scaled_shifted(old_s, c, 0);
      }
      if (after_update) after_update(gs, r, s, d);
    }
  }
  return gs;
}

BiPoly minimal_element(const GeneratorSet& basis) {
  if (basis.gens.empty()) throw MalformedInput("empty generator list");
  int best = -1;
  Monomial best_mono{};
  for (int i = 0; i < static_cast<int>(basis.gens.size()); ++i) {
    const BiPoly& g = basis.gens[static_cast<size_t>(i)];
    if (g.is_zero()) continue;
    Monomial mo = leading_term(basis.order, g).mono;
    if (best < 0 || basis.order.less(mo, best_mono)) {
      best = i;
      best_mono = mo;
    }
  }
  if (best < 0) throw ZeroPolynomial("all generators are zero");
  const BiPoly& g = basis.gens[static_cast<size_t>(best)];
  uint32_t lead = leading_term(basis.order, g).coeff;
  return g.scaled(g.field().inv(lead));
}

BiPoly normal_form(const BiPoly& f, const GeneratorSet& basis) {
  const Field& fld = f.field();
  int cap = f.ycap();
  for (const BiPoly& g : basis.gens) cap = std::max(cap, g.ycap());
  BiPoly cur(fld, cap);
  cur += f;
  BiPoly rem(fld, cap);
  while (!cur.is_zero()) {
    LeadingTerm lt = leading_term(basis.order, cur);
    bool reduced = false;
    for (const BiPoly& g : basis.gens) {
      if (g.is_zero()) continue;
      LeadingTerm gt = leading_term(basis.order, g);
      if (gt.mono.j == lt.mono.j && gt.mono.i <= lt.mono.i) {
        uint32_t c = fld.div(lt.coeff, gt.coeff);
        cur.sub_scaled_shifted(g, c, lt.mono.i - gt.mono.i);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.mutable_row(lt.mono.j).add_term(lt.mono.i, lt.coeff);
      cur.mutable_row(lt.mono.j).add_term(lt.mono.i, fld.neg(lt.coeff));
    }
  }
  return rem;
}

}  // namespace rslist
