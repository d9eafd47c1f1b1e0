// Acceptance gate: nine self-contained checks, one PASS/FAIL line each.
// Run with no arguments for all nine, or with a single number to run one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rslist/cli.hpp"
#include "rslist/decoder.hpp"
#include "rslist/interp.hpp"
#include "rslist/oracle.hpp"
#include "rslist/rootfind.hpp"

using namespace rslist;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint32_t rand_below(std::mt19937_64& gen, uint32_t n) {
  return static_cast<uint32_t>(gen() % n);
}

// Corrupts exactly `t` distinct positions, each by a nonzero delta.
std::vector<uint32_t> corrupt(std::mt19937_64& gen, const Field& f,
                              const std::vector<uint32_t>& cw, int t) {
  std::vector<uint32_t> word = cw;
  std::vector<size_t> idx(cw.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::shuffle(idx.begin(), idx.end(), gen);
  for (int e = 0; e < t; ++e) {
    size_t pos = idx[static_cast<size_t>(e)];
    uint32_t delta = 1 + rand_below(gen, f.order() - 1);
    word[pos] = f.add(word[pos], delta);
  }
  return word;
}

struct RandomInstance {
  uint32_t q;
  int n, k, m;
  std::vector<uint32_t> alphas;
  std::vector<uint32_t> word;
};

// 200 reproducible instances over small prime fields; evaluation points are
// a shuffled prefix of the whole field, so zero appears regularly.
std::vector<RandomInstance> instance_suite() {
  std::mt19937_64 gen(424242);
  const uint32_t qs[] = {5, 7, 11, 13};
  std::vector<RandomInstance> out;
  while (out.size() < 200) {
    uint32_t q = qs[gen() % 4];
    int maxn = std::min<int>(static_cast<int>(q), 10);
    int n = 4 + static_cast<int>(gen() % static_cast<uint32_t>(maxn - 3));
    int k = 2 + static_cast<int>(gen() % static_cast<uint32_t>(n - 3));
    int m = 1 + static_cast<int>(gen() % 3);
    std::vector<uint32_t> alphas(q);
    std::iota(alphas.begin(), alphas.end(), uint32_t{0});
    std::shuffle(alphas.begin(), alphas.end(), gen);
    alphas.resize(static_cast<size_t>(n));
    std::vector<uint32_t> word(static_cast<size_t>(n));
    for (uint32_t& s : word) s = rand_below(gen, q);
    out.push_back({q, n, k, m, std::move(alphas), std::move(word)});
  }
  return out;
}

// 1. The built-in worked instance reproduces every frozen value end to end,
//    inside one second.
bool criterion1() {
  auto t0 = Clock::now();
  Field f(7);
  RSCode code(f, 6, 3);
  const std::vector<uint32_t> v{6, 2, 4, 4, 4, 2};
  bool ok = true;

  ok = ok && code.interpolate_word(v) == UniPoly(f, {6, 4, 4, 5, 1});
  ok = ok && code.node_polynomial() == UniPoly(f, {6, 0, 0, 0, 0, 0, 1});

  Interpolation interp = interpolate_q(code, v, 2);
  ok = ok && interp.params.N == 19 && interp.params.l == 3;
  ok = ok && interp.q.row(0).coeffs() == std::vector<uint32_t>{1, 6, 5, 3, 4, 4, 3, 3};
  ok = ok && interp.q.row(1).coeffs() == std::vector<uint32_t>{5, 1, 1, 3, 1, 4};
  ok = ok && interp.q.row(2).coeffs() == std::vector<uint32_t>{2, 3, 0, 1};
  ok = ok && interp.q.row(3).coeffs() == std::vector<uint32_t>{6};
  ok = ok && wdeg(interp.basis.order, interp.q) == 7;

  BiPoly qm = y_monic(interp.q);
  ok = ok && qm.row(0).coeffs() == std::vector<uint32_t>{6, 1, 2, 4, 3, 3, 4, 4};
  ok = ok && qm.row(1).coeffs() == std::vector<uint32_t>{2, 6, 6, 4, 6, 3};
  ok = ok && qm.row(2).coeffs() == std::vector<uint32_t>{5, 4, 0, 6};
  ok = ok && qm.row(3).coeffs() == std::vector<uint32_t>{1};

  std::vector<UniPoly> roots = y_roots(interp.q, 3);
  ok = ok && roots.size() == 2;
  ok = ok && roots.size() == 2 && roots[0] == UniPoly(f, {1, 3, 4});
  ok = ok && roots.size() == 2 && roots[1] == UniPoly(f, {5, 2, 6});

  DecodeResult res = list_decode(code, v, 2);
  ok = ok && res.w == 7 && res.guarantee_radius == 2 && res.candidates.size() == 2;
  ok = ok && res.candidates.size() == 2 && res.candidates[0].message == UniPoly(f, {1, 3, 4}) &&
       res.candidates[0].distance == 2;
  ok = ok && res.candidates.size() == 2 && res.candidates[1].message == UniPoly(f, {5, 2, 6}) &&
       res.candidates[1].distance == 2;

  return ok && seconds_since(t0) < 1.0;
}

// 2. On 200 random instances the module reduction returns exactly the
//    minimal polynomial found by the independent constraint-matrix search,
//    inside one minute.
bool criterion2() {
  auto t0 = Clock::now();
  for (const RandomInstance& inst : instance_suite()) {
    Field f(inst.q);
    RSCode code(f, inst.n, inst.k, inst.alphas);
    InterpParams params = choose_params(code, inst.m);
    Interpolation interp = interpolate_q(code, inst.word, inst.m);
    BiPoly ref = oracle_min_poly(code, inst.word, inst.m, params.l);
    if (!(interp.q == ref)) return false;
  }
  return seconds_since(t0) < 60.0;
}

// 3. The reduction is deterministic and structurally sound: repeat runs
//    agree, basis leading terms sit at pairwise distinct y-degrees 0..l, and
//    every starting generator reduces to zero against the finished basis.
bool criterion3() {
  for (const RandomInstance& inst : instance_suite()) {
    Field f(inst.q);
    RSCode code(f, inst.n, inst.k, inst.alphas);
    Interpolation a = interpolate_q(code, inst.word, inst.m);
    Interpolation b = interpolate_q(code, inst.word, inst.m);
    if (!(a.q == b.q)) return false;

    const int l = a.params.l;
    if (static_cast<int>(a.basis.gens.size()) != l + 1) return false;
    for (int i = 0; i <= l; ++i)
      if (leading_term(a.basis.order, a.basis.gens[static_cast<size_t>(i)]).mono.j != i)
        return false;

    GeneratorSet fresh = build_generators(code, inst.word, a.params);
    for (const BiPoly& g : fresh.gens)
      if (!normal_form(g, a.basis).is_zero()) return false;
  }
  return true;
}

// 4. On the same instances the returned polynomial satisfies its defining
//    constraints: multiplicity at every point, the y-degree cap, a monic
//    leading coefficient, and the capacity choice of l is exactly at the
//    threshold.
bool criterion4() {
  for (const RandomInstance& inst : instance_suite()) {
    Field f(inst.q);
    RSCode code(f, inst.n, inst.k, inst.alphas);
    Interpolation interp = interpolate_q(code, inst.word, inst.m);

    for (int i = 0; i < inst.n; ++i)
      if (multiplicity(interp.q, inst.alphas[static_cast<size_t>(i)],
                       inst.word[static_cast<size_t>(i)]) < inst.m)
        return false;
    if (interp.q.ydeg() > interp.params.l) return false;
    if (leading_term(interp.basis.order, interp.q).coeff != 1) return false;

    long long l = interp.params.l, u = inst.k - 1, twoN = 2LL * interp.params.N;
    if (l < inst.m) return false;
    if (!(l * (l + 1) * u < twoN)) return false;
    if (!((l + 1) * (l + 2) * u >= twoN)) return false;
  }
  return true;
}

// 5. Beyond half distance: 500 double-error words of the length-6 dimension-3
//    code always stay within the decoding guarantee and the sent message is
//    always on the list.
bool criterion5() {
  Field f(7);
  RSCode code(f, 6, 3);
  std::mt19937_64 gen(777);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<uint32_t> msg(3);
    for (uint32_t& c : msg) c = rand_below(gen, 7);
    UniPoly mp(f, msg);
    std::vector<uint32_t> word = corrupt(gen, f, code.encode(msg), 2);

    DecodeResult res = list_decode(code, word, 2);
    if (res.w > 7) return false;
    if (res.guarantee_radius < 2) return false;
    bool found = false;
    for (const Candidate& c : res.candidates) found = found || c.message == mp;
    if (!found) return false;
  }
  return true;
}

// 6. Exhaustive half-distance check: all 343 messages of the worked code,
//    each under the identity and all 36 single-position corruptions, decode
//    back exactly, inside thirty seconds.
bool criterion6() {
  auto t0 = Clock::now();
  Field f(7);
  RSCode code(f, 6, 3);
  long long decoded = 0;
  for (uint32_t a = 0; a < 7; ++a)
    for (uint32_t b = 0; b < 7; ++b)
      for (uint32_t c = 0; c < 7; ++c) {
        const std::vector<uint32_t> msg{a, b, c};
        UniPoly mp(f, msg);
        std::vector<uint32_t> cw = code.encode(msg);

        std::optional<UniPoly> u = unique_decode(code, cw);
        if (!u || !(*u == mp)) return false;
        ++decoded;

        for (size_t pos = 0; pos < 6; ++pos)
          for (uint32_t delta = 1; delta < 7; ++delta) {
            std::vector<uint32_t> word = cw;
            word[pos] = f.add(word[pos], delta);
            u = unique_decode(code, word);
            if (!u || !(*u == mp)) return false;
            ++decoded;
          }
      }
  return decoded == 343LL * 37 && seconds_since(t0) < 30.0;
}

// 7. The fast unique decoder agrees with the module construction it
//    shortcuts: at multiplicity one and list size one, the minimal element
//    factors as error locator times (y - message), and its single y-root is
//    the decoder's answer.
bool criterion7() {
  Field f7(7), f11(11), f13(13);
  RSCode c0(f7, 6, 3), c1(f11, 8, 4), c2(f13, 10, 4);
  const RSCode* codes[] = {&c0, &c1, &c2};
  std::mt19937_64 gen(1313);

  for (int trial = 0; trial < 200; ++trial) {
    const RSCode& code = *codes[trial % 3];
    const Field& f = code.field();
    std::vector<uint32_t> msg(static_cast<size_t>(code.k()));
    for (uint32_t& c : msg) c = rand_below(gen, f.order());
    UniPoly mp(f, msg);
    std::vector<uint32_t> cw = code.encode(msg);
    int t = static_cast<int>(gen() % static_cast<uint64_t>(code.unique_radius() + 1));
    std::vector<uint32_t> word = corrupt(gen, f, cw, t);

    std::optional<UniPoly> u = unique_decode(code, word);
    if (!u || !(*u == mp)) return false;

    Interpolation one = interpolate_q(code, word, 1, 1);
    std::vector<UniPoly> roots = y_roots(one.q, code.k());
    if (roots.size() != 1 || !(roots[0] == mp)) return false;
    if (!proportional(one.basis.order, one.q, error_locator_check(code, word, cw)))
      return false;
  }
  return true;
}

// 8. Operation counts from the benchmark grid scale politely: more length or
//    more multiplicity never gets cheaper, and the growth in multiplicity at
//    fixed length stays inside a degree-5.5 power law.
bool criterion8() {
  std::ostringstream out, err;
  int rc = run_cli({"bench", "--n-list", "16,32,64", "--m-list", "1,2,3,4", "--rate", "0.5"},
                   out, err);
  if (rc != 0) return false;

  std::istringstream in(out.str());
  std::string line;
  if (!std::getline(in, line) || line != "n,k,m,l,mult_count,wall_time_ns") return false;

  // counts[n][m]
  std::vector<int> ns{16, 32, 64}, ms{1, 2, 3, 4};
  std::vector<std::vector<double>> counts(3, std::vector<double>(4, 0.0));
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ls, tok, ',')) parts.push_back(tok);
    if (parts.size() != 6) return false;
    int n = std::stoi(parts[0]), m = std::stoi(parts[2]);
    auto ni = std::find(ns.begin(), ns.end(), n);
    auto mi = std::find(ms.begin(), ms.end(), m);
    if (ni == ns.end() || mi == ms.end()) return false;
    counts[static_cast<size_t>(ni - ns.begin())][static_cast<size_t>(mi - ms.begin())] =
        std::stod(parts[4]);
    ++rows;
  }
  if (rows != 12) return false;

  for (size_t a = 0; a < 3; ++a)
    for (size_t b = 0; b < 4; ++b) {
      if (counts[a][b] <= 0) return false;
      if (a > 0 && counts[a][b] <= counts[a - 1][b]) return false;
      if (b > 0 && counts[a][b] <= counts[a][b - 1]) return false;
    }

  // least-squares slope of log(count) against log(m) at n = 32
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t b = 0; b < 4; ++b) {
    double x = std::log(static_cast<double>(ms[b])), y = std::log(counts[1][b]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  return slope > 0 && slope <= 5.5;
}

// 9. Edge behaviour: dimension below two is rejected, error-free words decode
//    at distance zero both ways, and 100 words certified far by exhaustive
//    search are all refused by the unique decoder.
bool criterion9() {
  Field f(7);
  bool ok = true;

  try {
    RSCode bad(f, 6, 1);
    ok = false;
  } catch (const KTooSmall&) {
  }
  try {
    choose_params(6, 1, 1);
    ok = false;
  } catch (const KTooSmall&) {
  }

  RSCode code(f, 6, 3);
  const std::vector<uint32_t> msg{5, 2, 6};
  UniPoly mp(f, msg);
  std::vector<uint32_t> cw = code.encode(msg);
  std::optional<UniPoly> u = unique_decode(code, cw);
  ok = ok && u && *u == mp;
  DecodeResult res = list_decode(code, cw, 2);
  ok = ok && !res.candidates.empty() && res.candidates[0].message == mp &&
       res.candidates[0].distance == 0;

  std::mt19937_64 gen(999);
  int far_words = 0;
  while (far_words < 100) {
    std::vector<uint32_t> word(6);
    for (uint32_t& s : word) s = rand_below(gen, 7);
    auto [nearest, dist] = oracle_nearest(code, word);
    if (dist <= code.unique_radius()) continue;
    ++far_words;
    if (unique_decode(code, word)) ok = false;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  using CritFn = bool (*)();
  const CritFn fns[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                        criterion6, criterion7, criterion8, criterion9};
  int lo = 1, hi = 9;
  if (argc > 1) {
    int c = std::atoi(argv[1]);
    if (c < 1 || c > 9) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
      return 1;
    }
    lo = hi = c;
  }

  bool all = true;
  for (int c = lo; c <= hi; ++c) {
    bool ok = false;
    try {
      ok = fns[c - 1]();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d threw: %s\n", c, e.what());
    }
    std::printf("criterion %d: %s\n", c, ok ? "PASS" : "FAIL");
    all = all && ok;
  }
  return all ? 0 : 1;
}
