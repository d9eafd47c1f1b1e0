#include <algorithm>

#include "doctest.h"
#include "rslist/bipoly.hpp"

using namespace rslist;

namespace {

// f(x0, y0) by substituting the constant y0 and then evaluating in x.
uint32_t eval_at(const BiPoly& f, uint32_t x0, uint32_t y0) {
  return f.eval_y(UniPoly::constant(f.field(), y0)).eval(x0);
}

}  // namespace

TEST_SUITE("wpoly") {

TEST_CASE("weighted order") {
  WeightedOrder ord(2);
  CHECK(ord.u() == 2);
  CHECK(ord.wdeg({3, 2}) == 7);
  CHECK(ord.wdeg({0, 0}) == 0);

  // equal weight: the higher y-degree wins
  CHECK(ord.compare({7, 0}, {5, 1}) < 0);
  CHECK(ord.compare({5, 1}, {3, 2}) < 0);
  CHECK(ord.compare({8, 0}, {5, 1}) > 0);
  CHECK(ord.compare({3, 1}, {3, 1}) == 0);
  CHECK(ord.less({0, 1}, {3, 0}));

  WeightedOrder unit(1);
  CHECK(unit.less({1, 0}, {0, 1}));
  CHECK_THROWS_AS(WeightedOrder(0), std::invalid_argument);
}

TEST_CASE("row storage") {
  Field f(7);
  BiPoly q(f, 2);
  CHECK(q.ycap() == 2);
  CHECK(q.is_zero());
  CHECK(q.ydeg() == kNegInfDeg);

  q.set_row(1, UniPoly(f, {0, 3}));
  CHECK(q.ydeg() == 1);
  CHECK(q.coeff(1, 1) == 3);
  CHECK(q.coeff(0, 1) == 0);
  CHECK(q.coeff(1, 2) == 0);
  CHECK(q.row(0).is_zero());
  CHECK_THROWS_AS(q.row(3), std::out_of_range);
  CHECK_THROWS_AS(q.set_row(-1, UniPoly(f)), std::out_of_range);

  BiPoly r(f, std::vector<UniPoly>{UniPoly(f, {1}), UniPoly(f, {0, 1})});
  CHECK(r.ycap() == 1);
  CHECK(r.ydeg() == 1);
  CHECK_THROWS_AS(BiPoly(f, -1), std::invalid_argument);
}

TEST_CASE("equality pads short caps") {
  Field f(7);
  BiPoly a(f, 1);
  a.set_row(0, UniPoly(f, {2, 1}));
  BiPoly b(f, 4);
  b.set_row(0, UniPoly(f, {2, 1}));
  CHECK(a == b);
  b.set_row(3, UniPoly(f, {1}));
  CHECK(a != b);
}

TEST_CASE("module operations") {
  Field f(7);
  BiPoly a(f, 2);
  a.set_row(0, UniPoly(f, {1, 1}));
  a.set_row(2, UniPoly(f, {3}));
  BiPoly b(f, 2);
  b.set_row(0, UniPoly(f, {6, 6}));
  b.set_row(1, UniPoly(f, {0, 2}));

  BiPoly sum = a + b;
  CHECK(sum.row(0).is_zero());
  CHECK(sum.row(1).coeffs() == std::vector<uint32_t>{0, 2});
  CHECK(sum.row(2).coeffs() == std::vector<uint32_t>{3});
  CHECK((a - a).is_zero());
  CHECK((-a + a).is_zero());

  BiPoly s = a.scaled(3);
  CHECK(s.row(0).coeffs() == std::vector<uint32_t>{3, 3});
  CHECK(s.row(2).coeffs() == std::vector<uint32_t>{2});

  BiPoly t = a.times_uni(UniPoly(f, {0, 1}));
  CHECK(t.row(0).coeffs() == std::vector<uint32_t>{0, 1, 1});
  CHECK(t == a.times_xpow(1));

  // row-wise combined update equals the expanded form
  BiPoly u = a;
  u.sub_scaled_shifted(b, 4, 2);
  CHECK(u == a - b.scaled(4).times_xpow(2));
}

TEST_CASE("y multiplication") {
  Field f(7);
  BiPoly a(f, 2);
  a.set_row(0, UniPoly(f, {5}));
  BiPoly ay = a.times_y();
  CHECK(ay.row(0).is_zero());
  CHECK(ay.row(1).coeffs() == std::vector<uint32_t>{5});
  CHECK(a.times_y(2).row(2).coeffs() == std::vector<uint32_t>{5});
  CHECK_THROWS_AS(a.times_y(3), YDegreeOverflow);

  BiPoly full(f, 1);
  full.set_row(1, UniPoly(f, {1}));
  CHECK_THROWS_AS(full.times_y(), YDegreeOverflow);
  CHECK(BiPoly(f, 1).times_y().is_zero());  // zero shifts freely
}

TEST_CASE("multiplication by y minus h") {
  Field f(7);
  UniPoly h(f, {6, 4, 4, 5, 1});
  BiPoly one(f, 2);
  one.set_row(0, UniPoly::constant(f, 1));

  BiPoly lin = one.times_y_minus(h);  // y - h
  CHECK(lin.row(1).coeffs() == std::vector<uint32_t>{1});
  CHECK(lin.row(0) == -h);

  BiPoly sq = lin.times_y_minus(h);  // y^2 - 2hy + h^2
  CHECK(sq.row(2).coeffs() == std::vector<uint32_t>{1});
  CHECK(sq.row(1) == h.scaled(5));  // -2h
  CHECK(sq.row(0) == h * h);
  for (uint32_t a = 0; a < 7; ++a) CHECK(eval_at(sq, a, h.eval(a)) == 0);
}

TEST_CASE("substituting y") {
  Field f(7);
  // worked-instance minimal polynomial, y-monic form
  BiPoly q(f, std::vector<UniPoly>{
                  UniPoly(f, {6, 1, 2, 4, 3, 3, 4, 4}), UniPoly(f, {2, 6, 6, 4, 6, 3}),
                  UniPoly(f, {5, 4, 0, 6}), UniPoly(f, {1})});
  CHECK(q.eval_y(UniPoly(f, {5, 2, 6})).is_zero());
  CHECK(q.eval_y(UniPoly(f, {1, 3, 4})).is_zero());
  CHECK(!q.eval_y(UniPoly(f, {1})).is_zero());
  CHECK(BiPoly(f, 2).eval_y(UniPoly(f, {1})).is_zero());
}

TEST_CASE("origin shift matches pointwise evaluation") {
  Field f(5);
  BiPoly q(f, 2);
  q.set_row(0, UniPoly(f, {1, 0, 3}));
  q.set_row(1, UniPoly(f, {0, 2}));
  q.set_row(2, UniPoly(f, {4}));
  for (uint32_t a = 0; a < 5; ++a)
    for (uint32_t b = 0; b < 5; ++b) {
      BiPoly g = q.shifted_origin(a, b);
      for (uint32_t x = 0; x < 5; ++x)
        for (uint32_t y = 0; y < 5; ++y)
          CHECK(eval_at(g, x, y) == eval_at(q, f.add(x, a), f.add(y, b)));
    }
}

TEST_CASE("multiplicity") {
  Field f(7);
  // y^2 - x^3: a double point at the origin, smooth elsewhere on the curve
  BiPoly cusp(f, 2);
  cusp.set_row(0, UniPoly(f, {0, 0, 0, 6}));
  cusp.set_row(2, UniPoly(f, {1}));
  CHECK(multiplicity(cusp, 0, 0) == 2);
  CHECK(multiplicity(cusp, 1, 1) == 1);
  CHECK(multiplicity(cusp, 2, 1) == 1);  // 1 - 8 = 0 in GF(7)
  CHECK(multiplicity(cusp, 1, 2) == 0);

  BiPoly c(f, 1);
  c.set_row(0, UniPoly(f, {3}));
  CHECK(multiplicity(c, 4, 5) == 0);
  CHECK_THROWS_AS(multiplicity(BiPoly(f, 1), 0, 0), ZeroPolynomial);
}

TEST_CASE("weighted degree and leading term") {
  Field f(7);
  WeightedOrder ord(2);
  UniPoly eta(f, {6, 0, 0, 0, 0, 0, 1});
  UniPoly h(f, {6, 4, 4, 5, 1});

  BiPoly g1(f, std::vector<UniPoly>{-(eta * h), eta});
  CHECK(wdeg(ord, g1) == 10);
  LeadingTerm lt = leading_term(ord, g1);
  CHECK(lt.mono == Monomial{10, 0});
  CHECK(lt.coeff == 6);

  BiPoly q(f, std::vector<UniPoly>{
                  UniPoly(f, {6, 1, 2, 4, 3, 3, 4, 4}), UniPoly(f, {2, 6, 6, 4, 6, 3}),
                  UniPoly(f, {5, 4, 0, 6}), UniPoly(f, {1})});
  CHECK(wdeg(ord, q) == 7);
  lt = leading_term(ord, q);
  CHECK(lt.mono == Monomial{3, 2});  // beats x^7 and x^5 y on the tie rule
  CHECK(lt.coeff == 6);

  CHECK_THROWS_AS(wdeg(ord, BiPoly(f, 1)), ZeroPolynomial);
  CHECK_THROWS_AS(leading_term(ord, BiPoly(f, 1)), ZeroPolynomial);
}

TEST_CASE("monomial enumeration") {
  WeightedOrder unit(1);
  std::vector<Monomial> first = first_monomials(unit, 1, 8);
  std::vector<Monomial> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {4, 0}};
  CHECK(first == want);

  WeightedOrder ord(2);
  first = first_monomials(ord, 3, 10);
  want = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1}, {4, 0}, {2, 1}, {0, 2}, {5, 0}};
  CHECK(first == want);

  // strictly ascending under the order
  for (size_t i = 0; i + 1 < first.size(); ++i) CHECK(ord.less(first[i], first[i + 1]));
  CHECK(first_monomials(ord, 2, 0).empty());
}

TEST_CASE("proportionality and normalization") {
  Field f(7);
  WeightedOrder ord(2);
  BiPoly a(f, 1);
  a.set_row(0, UniPoly(f, {1, 2}));
  a.set_row(1, UniPoly(f, {3}));

  CHECK(proportional(ord, a, a.scaled(4)));
  CHECK(proportional(ord, a.scaled(2), a));
  CHECK(proportional(ord, BiPoly(f, 1), BiPoly(f, 2)));
  CHECK(!proportional(ord, a, BiPoly(f, 1)));
  BiPoly b = a;
  b.set_row(0, UniPoly(f, {1, 3}));
  CHECK(!proportional(ord, a, b));

  BiPoly m = y_monic(a.scaled(4));
  CHECK(m.row(1).lc() == 1);
  CHECK(m == a.scaled(f.div(1, 3)));  // original top row had lc 3
}

TEST_CASE("binomial tables") {
  auto t7 = binomial_table(7, 8);
  CHECK(t7[4] == std::vector<uint32_t>{1, 4, 6, 4, 1});
  CHECK(t7[7] == std::vector<uint32_t>{1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(t7[0] == std::vector<uint32_t>{1});

  auto t2 = binomial_table(2, 5);
  CHECK(t2[4] == std::vector<uint32_t>{1, 0, 0, 0, 1});
  CHECK(t2[2] == std::vector<uint32_t>{1, 0, 1});

  auto t3 = binomial_table(3, 4);
  CHECK(t3[3] == std::vector<uint32_t>{1, 0, 0, 1});
}

}  // TEST_SUITE
