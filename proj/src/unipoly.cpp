#include "rslist/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslist {

UniPoly::UniPoly(const Field& f, std::vector<uint32_t> coeffs)
    : f_(&f), coeffs_(std::move(coeffs)) {
  for (uint32_t c : coeffs_)
    if (c >= f.order()) throw MalformedInput("coefficient out of range");
  strip();
}

UniPoly UniPoly::constant(const Field& f, uint32_t c) {
  return UniPoly(f, std::vector<uint32_t>{c});
}

UniPoly UniPoly::monomial(const Field& f, uint32_t c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<uint32_t> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return UniPoly(f, std::move(v));
}

void UniPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

uint32_t UniPoly::lc() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero");
  return coeffs_.back();
}

int UniPoly::trailing_zeros() const {
  if (coeffs_.empty()) throw ZeroPolynomial("trailing zeros of zero");
  int i = 0;
  while (coeffs_[static_cast<size_t>(i)] == 0) ++i;
  return i;
}

uint32_t UniPoly::eval(uint32_t a) const {
  if (coeffs_.empty()) return 0;
  uint32_t acc = coeffs_.back();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = f_->add(f_->mul(acc, a), coeffs_[i]);
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*f_);
  out.coeffs_.reserve(coeffs_.size());
  for (uint32_t c : coeffs_) out.coeffs_.push_back(f_->neg(c));
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& g) {
  check_same(g);
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] = f_->add(coeffs_[i], g.coeffs_[i]);
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& g) {
  check_same(g);
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] = f_->sub(coeffs_[i], g.coeffs_[i]);
  strip();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  const Field& f = *a.f_;
  if (a.is_zero() || b.is_zero()) return UniPoly(f);
  std::vector<uint32_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return UniPoly(f, std::move(out));
}

UniPoly UniPoly::scaled(uint32_t c) const {
  UniPoly out(*f_);
  out.coeffs_.reserve(coeffs_.size());
  for (uint32_t a : coeffs_) out.coeffs_.push_back(f_->mul(c, a));
  out.strip();
  return out;
}

UniPoly UniPoly::times_xpow(int d) const {
  if (d < 0) throw std::invalid_argument("shift must be nonnegative");
  if (coeffs_.empty()) return UniPoly(*f_);
  UniPoly out(*f_);
  out.coeffs_.assign(static_cast<size_t>(d), 0);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

UniPoly UniPoly::div_xpow(int s) const {
  if (s < 0) throw std::invalid_argument("shift must be nonnegative");
  if (coeffs_.empty()) return UniPoly(*f_);
  for (int i = 0; i < s; ++i)
    if (coeff(i) != 0) throw MalformedInput("polynomial not divisible by x^s");
  UniPoly out(*f_);
  out.coeffs_.assign(coeffs_.begin() + s, coeffs_.end());
  return out;
}

void UniPoly::sub_scaled_shifted(const UniPoly& g, uint32_t c, int d) {
  check_same(g);
  if (d < 0) throw std::invalid_argument("shift must be nonnegative");
  if (g.is_zero()) return;
  size_t need = g.coeffs_.size() + static_cast<size_t>(d);
  if (coeffs_.size() < need) coeffs_.resize(need, 0);
  for (size_t i = 0; i < g.coeffs_.size(); ++i) {
    size_t t = i + static_cast<size_t>(d);
    coeffs_[t] = f_->sub(coeffs_[t], f_->mul(c, g.coeffs_[i]));
  }
  strip();
}

void UniPoly::add_term(int degree, uint32_t c) {
  if (degree < 0) throw std::invalid_argument("term degree must be nonnegative");
  if (c >= f_->order()) throw MalformedInput("coefficient out of range");
  if (coeffs_.size() <= static_cast<size_t>(degree)) coeffs_.resize(static_cast<size_t>(degree) + 1, 0);
  coeffs_[static_cast<size_t>(degree)] = f_->add(coeffs_[static_cast<size_t>(degree)], c);
  strip();
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& f, const UniPoly& g) {
  f.check_same(g);
  const Field& fld = *f.f_;
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  UniPoly r = f;
  if (f.deg() < g.deg()) return {UniPoly(fld), r};
  std::vector<uint32_t> q(static_cast<size_t>(f.deg() - g.deg()) + 1, 0);
  uint32_t ilc = fld.inv(g.lc());
  while (r.deg() >= g.deg()) {
    int d = r.deg() - g.deg();
    uint32_t c = fld.mul(r.lc(), ilc);
    q[static_cast<size_t>(d)] = c;
    r.sub_scaled_shifted(g, c, d);
  }
  return {UniPoly(fld, std::move(q)), r};
}

bool UniPoly::operator==(const UniPoly& g) const {
  check_same(g);
  return coeffs_ == g.coeffs_;
}

UniPoly node_poly(const Field& f, const std::vector<uint32_t>& alphas) {
  std::vector<uint32_t> sorted = alphas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateNodes();
  UniPoly out = UniPoly::constant(f, 1);
  for (uint32_t a : alphas) {
    if (a >= f.order()) throw MalformedInput("node out of range");
    out = out.times_xpow(1) - out.scaled(a);
  }
  return out;
}

std::vector<UniPoly> lagrange_basis(const Field& f, const std::vector<uint32_t>& alphas) {
  UniPoly eta = node_poly(f, alphas);
  std::vector<UniPoly> basis;
  basis.reserve(alphas.size());
  for (uint32_t a : alphas) {
    UniPoly lin(f, {f.neg(a), 1});
    auto [quot, rem] = UniPoly::divrem(eta, lin);
    // Each node is a root of eta, so the division is exact.
    if (!rem.is_zero()) throw UnexpectedZero("node polynomial division left a remainder");
    basis.push_back(quot.scaled(f.inv(quot.eval(a))));
  }
  return basis;
}

UniPoly interpolate(const Field& f, const std::vector<uint32_t>& alphas,
                    const std::vector<uint32_t>& values) {
  if (alphas.size() != values.size()) throw LengthMismatch();
  std::vector<UniPoly> basis = lagrange_basis(f, alphas);
  UniPoly out(f);
  for (size_t i = 0; i < values.size(); ++i) out += basis[i].scaled(values[i]);
  return out;
}

}  // namespace rslist
