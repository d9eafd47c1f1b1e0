#include "rslist/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslist {
namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial over GF(p), coefficients lowest degree first.  Used only
// during construction (modulus checks, table building); never counted.
using PPoly = std::vector<uint32_t>;

int pdeg(const PPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

void ptrim(PPoly& a) { a.resize(static_cast<size_t>(pdeg(a) + 1)); }

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<uint32_t>((out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  return out;
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
  int64_t t = 0, newt = 1;
  int64_t r = p, newr = a;
  while (newr != 0) {
    int64_t quot = r / newr;
    int64_t tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

// Remainder of a modulo monic g, in place.
void pmod(PPoly& a, const PPoly& g, uint32_t p) {
  int dg = pdeg(g);
  for (int da = pdeg(a); da >= dg; da = pdeg(a)) {
    uint32_t c = a[static_cast<size_t>(da)];
    int shift = da - dg;
    for (int i = 0; i <= dg; ++i) {
      uint64_t s = a[static_cast<size_t>(i + shift)] + static_cast<uint64_t>(p) * p -
                   static_cast<uint64_t>(c) * g[static_cast<size_t>(i)] % p;
      a[static_cast<size_t>(i + shift)] = static_cast<uint32_t>(s % p);
    }
  }
  ptrim(a);
}

// True when some monic polynomial of degree 1..deg(f)/2 divides f exactly.
bool reducible(const PPoly& f, uint32_t p) {
  int df = pdeg(f);
  for (int dd = 1; dd <= df / 2; ++dd) {
    // Enumerate every monic divisor candidate of degree dd by odometer over
    // the dd lower coefficients.
    PPoly g(static_cast<size_t>(dd + 1), 0);
    g[static_cast<size_t>(dd)] = 1;
    uint64_t total = 1;
    for (int i = 0; i < dd; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t v = idx;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<size_t>(i)] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      PPoly r = f;
      pmod(r, g, p);
      if (r.empty()) return true;
    }
  }
  return false;
}

PPoly find_irreducible(uint32_t p, uint32_t m) {
  PPoly f(m + 1, 0);
  f[m] = 1;
  uint64_t total = 1;
  for (uint32_t i = 0; i < m; ++i) total *= p;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    if (!reducible(f, p)) return f;
  }
  throw ReducibleModulus("no irreducible modulus found");  // unreachable
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus)
    : p_(p), m_(m) {
  if (!is_prime(p)) throw NonPrimeCharacteristic();
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldTooLarge();
  }
  q_ = static_cast<uint32_t>(q);

  if (m_ == 1) {
    if (modulus && !modulus->empty())
      throw std::invalid_argument("prime fields take no modulus");
    return;
  }

  PPoly mod;
  if (modulus) {
    mod = *modulus;
    for (uint32_t c : mod)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    ptrim(mod);
    if (pdeg(mod) != static_cast<int>(m))
      throw std::invalid_argument("modulus degree must equal the extension degree");
    uint32_t lc = mod.back();
    if (lc != 1) {
      uint32_t ilc = mod_inv(lc, p);
      for (uint32_t& c : mod)
        c = static_cast<uint32_t>(static_cast<uint64_t>(c) * ilc % p);
    }
    if (reducible(mod, p)) throw ReducibleModulus();
  } else {
    mod = find_irreducible(p, m);
  }
  modulus_ = mod;
  build_tables();
  reset_counters();
}

void Field::build_tables() {
  // Raw residue arithmetic on canonical encodings, independent of the tables
  // being built.
  auto decode = [&](uint32_t v) {
    PPoly d(m_, 0);
    for (uint32_t i = 0; i < m_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  auto encode = [&](const PPoly& d) {
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return v;
  };
  auto raw_mul = [&](uint32_t a, uint32_t b) {
    PPoly prod = pmul(decode(a), decode(b), p_);
    pmod(prod, modulus_, p_);
    prod.resize(m_, 0);
    return encode(prod);
  };
  auto raw_pow = [&](uint32_t a, uint32_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const uint32_t group = q_ - 1;
  std::vector<uint32_t> factors = prime_factors(group);
  uint32_t gen = 0;
  for (uint32_t g = 2; g < q_; ++g) {
    bool ok = true;
    for (uint32_t f : factors)
      if (raw_pow(g, group / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = g;
      break;
    }
  }

  alog_.assign(group, 0);
  log_.assign(q_, 0);
  alog_[0] = 1;
  for (uint32_t i = 1; i < group; ++i) alog_[i] = raw_mul(alog_[i - 1], gen);
  for (uint32_t i = 0; i < group; ++i) log_[alog_[i]] = i;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (m_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  uint32_t out = 0, place = 1;
  while (a || b) {
    uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

uint32_t Field::neg(uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  uint32_t out = 0, place = 1;
  while (a) {
    uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const {
  if (m_ == 1) {
    return a >= b ? a - b : a + p_ - b;
  }
  if (p_ == 2) return a ^ b;
  uint32_t out = 0, place = 1;
  while (a || b) {
    uint32_t da = a % p_, db = b % p_;
    uint32_t d = da >= db ? da - db : da + p_ - db;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  ++mult_count_;
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  uint32_t s = log_[a] + log_[b];
  const uint32_t group = q_ - 1;
  if (s >= group) s -= group;
  return alog_[s];
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  ++inv_count_;
  if (m_ == 1) return mod_inv(a, p_);
  const uint32_t group = q_ - 1;
  uint32_t e = (group - log_[a]) % group;
  return alog_[e];
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
  if (b == 0) throw DivisionByZero();
  return mul(a, inv(b));
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace rslist
