#pragma once

#include <cstdint>
#include <vector>

#include "rslist/unipoly.hpp"

namespace rslist {

/// Exponent pair of the monomial x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.i == b.i && a.j == b.j;
  }
};

/// The (1, u)-weighted monomial order: x^i y^j is weighed as i + u*j, and
/// ties in weight are broken by y-degree with the larger j winning.
class WeightedOrder {
 public:
  explicit WeightedOrder(int u);

  int u() const { return u_; }
  int wdeg(const Monomial& mo) const { return mo.i + u_ * mo.j; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  int u_;
};

/// Bivariate polynomial with y-degree capped at ycap, stored as rows: the
/// coefficient of y^j is a univariate polynomial in x.  The cap is a storage
/// bound, not a mathematical property; comparisons pad with zero rows.
class BiPoly {
 public:
  BiPoly(const Field& f, int ycap);
  BiPoly(const Field& f, std::vector<UniPoly> rows);

  const Field& field() const { return *f_; }
  int ycap() const { return static_cast<int>(rows_.size()) - 1; }

  /// Largest j with a nonzero row, kNegInfDeg when zero.
  int ydeg() const;
  bool is_zero() const;

  const UniPoly& row(int j) const;
  UniPoly& mutable_row(int j);
  void set_row(int j, UniPoly r);

  /// Coefficient of x^i y^j (zero outside the stored range).
  uint32_t coeff(int i, int j) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& g);
  BiPoly& operator-=(const BiPoly& g);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  BiPoly scaled(uint32_t c) const;
  BiPoly times_uni(const UniPoly& g) const;
  BiPoly times_xpow(int d) const;

  /// Multiplication by y^t; throws YDegreeOverflow when the cap is too small.
  BiPoly times_y(int t = 1) const;

  /// Multiplication by (y - h) for univariate h.
  BiPoly times_y_minus(const UniPoly& h) const;

  /// this -= c * x^d * g, applied row by row; g may have a smaller cap.
  void sub_scaled_shifted(const BiPoly& g, uint32_t c, int d);

  /// Substitution y = h, by Horner's rule in y.
  UniPoly eval_y(const UniPoly& h) const;

  /// f(x + a, y + b): Taylor shift of each row followed by the binomial
  /// expansion across rows.
  BiPoly shifted_origin(uint32_t a, uint32_t b) const;

  bool operator==(const BiPoly& g) const;
  bool operator!=(const BiPoly& g) const { return !(*this == g); }

 private:
  const Field* f_;
  std::vector<UniPoly> rows_;
};

struct LeadingTerm {
  Monomial mono;
  uint32_t coeff = 0;
};

/// Weighted degree of f: the weight of its largest monomial.  Throws
/// ZeroPolynomial on the zero polynomial.
int wdeg(const WeightedOrder& ord, const BiPoly& f);

/// Largest monomial of f under the order, with its coefficient.
LeadingTerm leading_term(const WeightedOrder& ord, const BiPoly& f);

/// Multiplicity of f at the point (a, b): the smallest total degree of a
/// monomial appearing in f(x + a, y + b).
int multiplicity(const BiPoly& f, uint32_t a, uint32_t b);

/// The first `count` monomials with y-degree <= ycap, ascending under the
/// order.
std::vector<Monomial> first_monomials(const WeightedOrder& ord, int ycap, size_t count);

/// True when f = c * g for some nonzero scalar c (both zero also counts).
bool proportional(const WeightedOrder& ord, const BiPoly& f, const BiPoly& g);

/// Scales f so the coefficient of its leading row's leading term is 1.
BiPoly y_monic(const BiPoly& f);

/// Pascal's triangle modulo the characteristic: table[n][k] = C(n, k) mod p,
/// built with additions only.
std::vector<std::vector<uint32_t>> binomial_table(uint32_t p, int rows);

}  // namespace rslist
