#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "rslist/field.hpp"

namespace rslist {

/// Degree of the zero polynomial.  Far enough below zero that sums like
/// deg(f) + k stay negative without overflowing.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

/// Univariate polynomial over a Field, coefficients lowest degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  explicit UniPoly(const Field& f) : f_(&f) {}
  UniPoly(const Field& f, std::vector<uint32_t> coeffs);

  static UniPoly constant(const Field& f, uint32_t c);
  static UniPoly monomial(const Field& f, uint32_t c, int degree);

  const Field& field() const { return *f_; }
  int deg() const { return coeffs_.empty() ? kNegInfDeg : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<uint32_t>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i (zero outside the stored range).
  uint32_t coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
  }

  /// Leading coefficient; throws ZeroPolynomial on the zero polynomial.
  uint32_t lc() const;

  /// Degree of the lowest nonzero term; throws ZeroPolynomial on zero.
  int trailing_zeros() const;

  uint32_t eval(uint32_t a) const;
  FieldElem eval(const FieldElem& a) const { return f_->elem(eval(a.value())); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& g);
  UniPoly& operator-=(const UniPoly& g);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  /// Schoolbook product: exactly (deg a + 1)(deg b + 1) field
  /// multiplications for nonzero operands.
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  /// c * this, one multiplication per stored coefficient.
  UniPoly scaled(uint32_t c) const;

  /// this * x^d, d >= 0.
  UniPoly times_xpow(int d) const;

  /// Exact division by x^s; requires the s lowest coefficients to be zero.
  UniPoly div_xpow(int s) const;

  /// this -= c * x^d * g, the row update primitive of the reduction loops.
  void sub_scaled_shifted(const UniPoly& g, uint32_t c, int d);

  /// this += c * x^degree.
  void add_term(int degree, uint32_t c);

  /// Quotient and remainder with deg r < deg g; throws DivisionByZero when
  /// g = 0.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

  bool operator==(const UniPoly& g) const;
  bool operator!=(const UniPoly& g) const { return !(*this == g); }

 private:
  void strip();
  void check_same(const UniPoly& g) const {
    if (f_ != g.f_) throw MixedFields();
  }

  const Field* f_;
  std::vector<uint32_t> coeffs_;
};

/// Monic product of (x - a) over the given nodes; throws DuplicateNodes when
/// two nodes coincide.
UniPoly node_poly(const Field& f, const std::vector<uint32_t>& alphas);

/// Lagrange basis for the nodes: basis[i](alphas[j]) = [i == j].
std::vector<UniPoly> lagrange_basis(const Field& f, const std::vector<uint32_t>& alphas);

/// Unique polynomial of degree < n through the points (alphas[i], values[i]).
UniPoly interpolate(const Field& f, const std::vector<uint32_t>& alphas,
                    const std::vector<uint32_t>& values);

}  // namespace rslist
