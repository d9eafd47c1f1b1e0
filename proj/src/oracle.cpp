#include "rslist/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslist {
namespace {

constexpr uint64_t kMaxWork = 2'000'000;

// Local Pascal triangle so the oracle shares no helper with the polynomial
// modules it cross-checks.
std::vector<std::vector<uint32_t>> pascal(uint32_t p, int rows) {
  std::vector<std::vector<uint32_t>> t(static_cast<size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    t[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k)
      t[static_cast<size_t>(n)][static_cast<size_t>(k)] =
          (t[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
           t[static_cast<size_t>(n - 1)][static_cast<size_t>(k)]) %
          p;
  }
  return t;
}

struct Constraint {
  uint32_t alpha;
  uint32_t value;
  int a;
  int b;
};

// Coefficient of the monomial x^i y^j in the constraint "the (a, b) shifted
// coefficient at (alpha, value) vanishes": C(i,a) C(j,b) alpha^(i-a)
// value^(j-b), and zero when i < a or j < b.
uint32_t entry(const Field& f, const std::vector<std::vector<uint32_t>>& binom,
               const Constraint& c, int i, int j) {
  if (i < c.a || j < c.b) return 0;
  uint32_t e = f.mul(binom[static_cast<size_t>(i)][static_cast<size_t>(c.a)],
                     binom[static_cast<size_t>(j)][static_cast<size_t>(c.b)]);
  e = f.mul(e, f.pow(c.alpha, static_cast<uint64_t>(i - c.a)));
  return f.mul(e, f.pow(c.value, static_cast<uint64_t>(j - c.b)));
}

}  // namespace

BiPoly oracle_min_poly(const Field& f, const std::vector<uint32_t>& alphas,
                       const std::vector<uint32_t>& values, int k, int m, int l) {
  if (alphas.size() != values.size()) throw LengthMismatch();
  if (alphas.empty()) throw MalformedInput("need at least one point");
  if (k < 2) throw KTooSmall();
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (l < m) throw LOverrideBelowM();
  for (uint32_t a : alphas)
    if (a >= f.order()) throw MalformedInput("point out of range");
  for (uint32_t v : values)
    if (v >= f.order()) throw MalformedInput("value out of range");
  {
    std::vector<uint32_t> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DuplicateNodes();
  }

  std::vector<Constraint> cons;
  for (size_t s = 0; s < alphas.size(); ++s)
    for (int a = 0; a < m; ++a)
      for (int b = 0; a + b < m; ++b) cons.push_back({alphas[s], values[s], a, b});
  const size_t rows = cons.size();

  // A dependence must appear within rows + 1 columns.
  const size_t max_cols = rows + 1;
  if (static_cast<uint64_t>(rows) * max_cols > kMaxWork) throw InstanceTooLarge();

  WeightedOrder ord(k - 1);
  std::vector<Monomial> monos = first_monomials(ord, l, max_cols);
  int max_exp = 0;
  for (const Monomial& mo : monos) max_exp = std::max({max_exp, mo.i, mo.j});
  auto binom = pascal(f.characteristic(), max_exp + 1);

  // Column-echelon elimination: each accepted column keeps its reduced form,
  // its pivot row, and its expression over the original columns.
  std::vector<std::vector<uint32_t>> reduced;
  std::vector<std::vector<uint32_t>> combos;
  std::vector<size_t> pivot_rows;

  for (size_t t = 0; t < max_cols; ++t) {
    std::vector<uint32_t> col(rows);
    for (size_t r = 0; r < rows; ++r)
      col[r] = entry(f, binom, cons[r], monos[t].i, monos[t].j);
    std::vector<uint32_t> combo(t + 1, 0);
    combo[t] = 1;

    for (size_t pc = 0; pc < reduced.size(); ++pc) {
      uint32_t factor = col[pivot_rows[pc]];
      if (factor == 0) continue;
      for (size_t r = 0; r < rows; ++r)
        col[r] = f.sub(col[r], f.mul(factor, reduced[pc][r]));
      for (size_t i = 0; i < combos[pc].size(); ++i)
        combo[i] = f.sub(combo[i], f.mul(factor, combos[pc][i]));
    }

    size_t pr = rows;
    for (size_t r = 0; r < rows; ++r)
      if (col[r] != 0) {
        pr = r;
        break;
      }

    if (pr == rows) {
      // Dependent column: the combination over monomials 0..t is a kernel
      // vector, and combo[t] = 1 makes it monic at its leading monomial.
      BiPoly out(f, l);
      for (size_t i = 0; i <= t; ++i)
        if (combo[i] != 0) out.mutable_row(monos[i].j).add_term(monos[i].i, combo[i]);
      for (const Constraint& c : cons) {
        uint32_t acc = 0;
        for (size_t i = 0; i <= t; ++i)
          acc = f.add(acc, f.mul(combo[i], entry(f, binom, c, monos[i].i, monos[i].j)));
        if (acc != 0) throw UnexpectedZero("kernel vector fails a constraint");
      }
      return out;
    }

    uint32_t ipiv = f.inv(col[pr]);
    for (size_t r = 0; r < rows; ++r) col[r] = f.mul(col[r], ipiv);
    for (size_t i = 0; i < combo.size(); ++i) combo[i] = f.mul(combo[i], ipiv);
    reduced.push_back(std::move(col));
    combos.push_back(std::move(combo));
    pivot_rows.push_back(pr);
  }
  throw UnexpectedZero("no dependent column within the guaranteed range");
}

BiPoly oracle_min_poly(const RSCode& code, const std::vector<uint32_t>& values, int m, int l) {
  return oracle_min_poly(code.field(), code.alphas(), values, code.k(), m, l);
}

std::pair<std::vector<uint32_t>, int> oracle_nearest(const RSCode& code,
                                                     const std::vector<uint32_t>& v) {
  const Field& f = code.field();
  const int n = code.n(), k = code.k();
  if (static_cast<int>(v.size()) != n) throw LengthMismatch();

  uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= f.order();
    if (total > kMaxWork) throw InstanceTooLarge();
  }

  std::vector<uint32_t> coeffs(static_cast<size_t>(k), 0);
  std::vector<uint32_t> best_word;
  int best_dist = n + 1;
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<uint32_t> word(static_cast<size_t>(n));
    int dist = 0;
    for (int s = 0; s < n; ++s) {
      uint32_t acc = 0;
      for (size_t c = coeffs.size(); c-- > 0;)
        acc = f.add(f.mul(acc, code.alphas()[static_cast<size_t>(s)]), coeffs[c]);
      word[static_cast<size_t>(s)] = acc;
      if (acc != v[static_cast<size_t>(s)]) ++dist;
    }
    if (dist < best_dist) {
      best_dist = dist;
      best_word = std::move(word);
      if (dist == 0) break;
    }
    // Odometer step over the coefficient vector, lowest digit first.
    for (size_t c = 0; c < coeffs.size(); ++c) {
      if (++coeffs[c] < f.order()) break;
      coeffs[c] = 0;
    }
  }
  return {best_word, best_dist};
}

}  // namespace rslist
