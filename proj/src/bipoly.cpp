#include "rslist/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslist {

WeightedOrder::WeightedOrder(int u) : u_(u) {
  if (u < 1) throw std::invalid_argument("order weight must be at least 1");
}

int WeightedOrder::compare(const Monomial& a, const Monomial& b) const {
  int wa = wdeg(a), wb = wdeg(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  if (a.j != b.j) return a.j < b.j ? -1 : 1;
  return 0;
}

BiPoly::BiPoly(const Field& f, int ycap) : f_(&f) {
  if (ycap < 0) throw std::invalid_argument("y-degree cap must be nonnegative");
  rows_.assign(static_cast<size_t>(ycap) + 1, UniPoly(f));
}

BiPoly::BiPoly(const Field& f, std::vector<UniPoly> rows) : f_(&f), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("row list must not be empty");
  for (const UniPoly& r : rows_)
    if (&r.field() != f_) throw MixedFields();
}

int BiPoly::ydeg() const {
  for (int j = ycap(); j >= 0; --j)
    if (!rows_[static_cast<size_t>(j)].is_zero()) return j;
  return kNegInfDeg;
}

bool BiPoly::is_zero() const { return ydeg() == kNegInfDeg; }

const UniPoly& BiPoly::row(int j) const {
  if (j < 0 || j > ycap()) throw std::out_of_range("row index out of range");
  return rows_[static_cast<size_t>(j)];
}

UniPoly& BiPoly::mutable_row(int j) {
  if (j < 0 || j > ycap()) throw std::out_of_range("row index out of range");
  return rows_[static_cast<size_t>(j)];
}

void BiPoly::set_row(int j, UniPoly r) {
  if (&r.field() != f_) throw MixedFields();
  mutable_row(j) = std::move(r);
}

uint32_t BiPoly::coeff(int i, int j) const {
  if (j < 0 || j > ycap()) return 0;
  return rows_[static_cast<size_t>(j)].coeff(i);
}

BiPoly BiPoly::operator-() const {
  BiPoly out(*f_, ycap());
  for (int j = 0; j <= ycap(); ++j) out.rows_[static_cast<size_t>(j)] = -rows_[static_cast<size_t>(j)];
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& g) {
  if (f_ != g.f_) throw MixedFields();
  if (g.ydeg() > ycap()) throw YDegreeOverflow();
  for (int j = 0; j <= std::min(ycap(), g.ycap()); ++j)
    rows_[static_cast<size_t>(j)] += g.rows_[static_cast<size_t>(j)];
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& g) {
  if (f_ != g.f_) throw MixedFields();
  if (g.ydeg() > ycap()) throw YDegreeOverflow();
  for (int j = 0; j <= std::min(ycap(), g.ycap()); ++j)
    rows_[static_cast<size_t>(j)] -= g.rows_[static_cast<size_t>(j)];
  return *this;
}

BiPoly BiPoly::scaled(uint32_t c) const {
  BiPoly out(*f_, ycap());
  for (int j = 0; j <= ycap(); ++j)
    out.rows_[static_cast<size_t>(j)] = rows_[static_cast<size_t>(j)].scaled(c);
  return out;
}

BiPoly BiPoly::times_uni(const UniPoly& g) const {
  BiPoly out(*f_, ycap());
  for (int j = 0; j <= ycap(); ++j)
    out.rows_[static_cast<size_t>(j)] = rows_[static_cast<size_t>(j)] * g;
  return out;
}

BiPoly BiPoly::times_xpow(int d) const {
  BiPoly out(*f_, ycap());
  for (int j = 0; j <= ycap(); ++j)
    out.rows_[static_cast<size_t>(j)] = rows_[static_cast<size_t>(j)].times_xpow(d);
  return out;
}

BiPoly BiPoly::times_y(int t) const {
  if (t < 0) throw std::invalid_argument("y shift must be nonnegative");
  int d = ydeg();
  if (d != kNegInfDeg && d + t > ycap()) throw YDegreeOverflow();
  BiPoly out(*f_, ycap());
  for (int j = ycap(); j >= t; --j) out.rows_[static_cast<size_t>(j)] = rows_[static_cast<size_t>(j - t)];
  return out;
}

BiPoly BiPoly::times_y_minus(const UniPoly& h) const {
  BiPoly shifted = times_y(1);
  for (int j = 0; j <= ycap(); ++j)
    shifted.rows_[static_cast<size_t>(j)] -= rows_[static_cast<size_t>(j)] * h;
  return shifted;
}

void BiPoly::sub_scaled_shifted(const BiPoly& g, uint32_t c, int d) {
  if (f_ != g.f_) throw MixedFields();
  if (g.ydeg() > ycap()) throw YDegreeOverflow();
  for (int j = 0; j <= std::min(ycap(), g.ycap()); ++j)
    rows_[static_cast<size_t>(j)].sub_scaled_shifted(g.rows_[static_cast<size_t>(j)], c, d);
}

UniPoly BiPoly::eval_y(const UniPoly& h) const {
  int top = ydeg();
  if (top == kNegInfDeg) return UniPoly(*f_);
  UniPoly acc = rows_[static_cast<size_t>(top)];
  for (int j = top - 1; j >= 0; --j) acc = acc * h + rows_[static_cast<size_t>(j)];
  return acc;
}

namespace {

// In-place Taylor shift r(x) -> r(x + a) by repeated synthetic division.
UniPoly taylor_shift(const UniPoly& r, uint32_t a) {
  if (a == 0 || r.is_zero()) return r;
  const Field& f = r.field();
  std::vector<uint32_t> c = r.coeffs();
  size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t t = n - 1; t-- > i;) c[t] = f.add(c[t], f.mul(a, c[t + 1]));
  return UniPoly(f, std::move(c));
}

}  // namespace

BiPoly BiPoly::shifted_origin(uint32_t a, uint32_t b) const {
  const Field& f = *f_;
  int cap = ycap();
  std::vector<UniPoly> sh;
  sh.reserve(static_cast<size_t>(cap) + 1);
  for (int j = 0; j <= cap; ++j) sh.push_back(taylor_shift(rows_[static_cast<size_t>(j)], a));

  auto binom = binomial_table(f.characteristic(), cap + 1);
  std::vector<uint32_t> bpow(static_cast<size_t>(cap) + 1, 1);
  for (int e = 1; e <= cap; ++e) bpow[static_cast<size_t>(e)] = f.mul(bpow[static_cast<size_t>(e - 1)], b);

  BiPoly out(f, cap);
  for (int t = 0; t <= cap; ++t) {
    UniPoly acc(f);
    for (int j = t; j <= cap; ++j) {
      if (sh[static_cast<size_t>(j)].is_zero()) continue;
      uint32_t c = f.mul(binom[static_cast<size_t>(j)][static_cast<size_t>(t)],
                         bpow[static_cast<size_t>(j - t)]);
      acc += sh[static_cast<size_t>(j)].scaled(c);
    }
    out.rows_[static_cast<size_t>(t)] = std::move(acc);
  }
  return out;
}

bool BiPoly::operator==(const BiPoly& g) const {
  if (f_ != g.f_) throw MixedFields();
  int top = std::max(ycap(), g.ycap());
  for (int j = 0; j <= top; ++j) {
    bool za = j > ycap() || rows_[static_cast<size_t>(j)].is_zero();
    bool zb = j > g.ycap() || g.rows_[static_cast<size_t>(j)].is_zero();
    if (za != zb) return false;
    if (!za && rows_[static_cast<size_t>(j)] != g.rows_[static_cast<size_t>(j)]) return false;
  }
  return true;
}

int wdeg(const WeightedOrder& ord, const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("weighted degree of zero");
  int best = kNegInfDeg;
  for (int j = 0; j <= f.ycap(); ++j) {
    if (f.row(j).is_zero()) continue;
    best = std::max(best, ord.wdeg({f.row(j).deg(), j}));
  }
  return best;
}

LeadingTerm leading_term(const WeightedOrder& ord, const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of zero");
  bool have = false;
  Monomial best{};
  for (int j = 0; j <= f.ycap(); ++j) {
    if (f.row(j).is_zero()) continue;
    Monomial mo{f.row(j).deg(), j};
    if (!have || ord.compare(mo, best) > 0) {
      best = mo;
      have = true;
    }
  }
  return {best, f.row(best.j).lc()};
}

int multiplicity(const BiPoly& f, uint32_t a, uint32_t b) {
  if (f.is_zero()) throw ZeroPolynomial("multiplicity of zero");
  BiPoly sh = f.shifted_origin(a, b);
  int best = std::numeric_limits<int>::max();
  for (int j = 0; j <= sh.ycap(); ++j) {
    if (sh.row(j).is_zero()) continue;
    best = std::min(best, j + sh.row(j).trailing_zeros());
  }
  return best;
}

std::vector<Monomial> first_monomials(const WeightedOrder& ord, int ycap, size_t count) {
  std::vector<Monomial> out;
  out.reserve(count);
  for (int w = 0; out.size() < count; ++w) {
    for (int j = 0; j <= ycap && j * ord.u() <= w; ++j) {
      out.push_back({w - j * ord.u(), j});
      if (out.size() == count) break;
    }
  }
  return out;
}

bool proportional(const WeightedOrder& ord, const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  LeadingTerm lf = leading_term(ord, f);
  LeadingTerm lg = leading_term(ord, g);
  if (!(lf.mono == lg.mono)) return false;
  uint32_t c = f.field().div(lf.coeff, lg.coeff);
  return f == g.scaled(c);
}

BiPoly y_monic(const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("cannot normalize zero");
  uint32_t lead = f.row(f.ydeg()).lc();
  return f.scaled(f.field().inv(lead));
}

std::vector<std::vector<uint32_t>> binomial_table(uint32_t p, int rows) {
  std::vector<std::vector<uint32_t>> t(static_cast<size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    t[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      uint32_t s = t[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                   t[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
      t[static_cast<size_t>(n)][static_cast<size_t>(k)] = s % p;
    }
  }
  return t;
}

}  // namespace rslist
