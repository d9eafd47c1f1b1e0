#include "rslist/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "rslist/decoder.hpp"
#include "rslist/io.hpp"
#include "rslist/rootfind.hpp"

namespace rslist {
namespace {

using nlohmann::json;

// Uniform draw from [0, bound) by rejection, so identical seeds give
// identical output on every platform.
uint64_t rng_below(std::mt19937_64& gen, uint64_t bound) {
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % bound;
}

json poly_json(const UniPoly& h) {
  json a = json::array();
  for (uint32_t c : h.coeffs()) a.push_back(c);
  if (a.empty()) a.push_back(0);
  return a;
}

json rows_json(const BiPoly& q) {
  json rows = json::array();
  for (int j = 0; j <= q.ydeg(); ++j) rows.push_back(poly_json(q.row(j)));
  return rows;
}

void print_bipoly(std::ostream& out, const BiPoly& q) {
  for (int j = 0; j <= q.ydeg(); ++j)
    out << "q[" << j << "]=" << format_poly(q.row(j)) << "\n";
}

struct CodeOptions {
  std::string field_spec = "7";
  int n = 0;
  int k = 0;
  std::string alphas;
};

void add_code_options(CLI::App* cmd, CodeOptions& opts) {
  cmd->add_option("--field", opts.field_spec, "Field as p or p^m")->required();
  cmd->add_option("--n", opts.n, "Code length")->required();
  cmd->add_option("--k", opts.k, "Code dimension")->required();
  cmd->add_option("--alphas", opts.alphas,
                  "Evaluation points (default: the first n nonzero elements)");
}

int cmd_encode(const CodeOptions& copts, const std::string& message, bool emit_json,
               std::ostream& out) {
  auto [p, m] = parse_field_spec(copts.field_spec);
  Field f(p, m);
  std::optional<std::vector<uint32_t>> alphas;
  if (!copts.alphas.empty()) alphas = parse_symbols(copts.alphas);
  RSCode code(f, copts.n, copts.k, std::move(alphas));
  std::vector<uint32_t> cw = code.encode(parse_symbols(message));
  out << "codeword=" << format_symbols(cw) << "\n";
  if (emit_json) out << "json=" << json{{"codeword", cw}}.dump() << "\n";
  return 0;
}

int cmd_corrupt(const std::string& field_spec, const std::string& word_str, int errors,
                uint64_t seed, bool emit_json, std::ostream& out) {
  auto [p, m] = parse_field_spec(field_spec);
  Field f(p, m);
  std::vector<uint32_t> word = parse_symbols(word_str);
  for (uint32_t s : word)
    if (s >= f.order()) throw MalformedInput("symbol out of range");
  if (errors < 0 || errors > static_cast<int>(word.size()))
    throw MalformedInput("error count out of range");

  std::mt19937_64 gen(seed);
  std::vector<size_t> indices(word.size());
  for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::vector<size_t> positions;
  for (int t = 0; t < errors; ++t) {
    size_t pick = static_cast<size_t>(t) + rng_below(gen, indices.size() - static_cast<size_t>(t));
    std::swap(indices[static_cast<size_t>(t)], indices[pick]);
    positions.push_back(indices[static_cast<size_t>(t)]);
  }
  for (size_t pos : positions) {
    uint32_t fresh = static_cast<uint32_t>(rng_below(gen, f.order() - 1));
    if (fresh >= word[pos]) ++fresh;
    word[pos] = fresh;
  }
  std::sort(positions.begin(), positions.end());

  out << "word=" << format_symbols(word) << "\n";
  out << "positions=";
  for (size_t i = 0; i < positions.size(); ++i) out << (i ? "," : "") << positions[i];
  out << "\n";
  if (emit_json)
    out << "json=" << json{{"word", word}, {"positions", positions}}.dump() << "\n";
  return 0;
}

int cmd_decode(const CodeOptions& copts, const std::string& word_str, int mult, bool want_list,
               std::optional<int> list_size, bool emit_json, std::ostream& out) {
  auto [p, m] = parse_field_spec(copts.field_spec);
  Field f(p, m);
  std::optional<std::vector<uint32_t>> alphas;
  if (!copts.alphas.empty()) alphas = parse_symbols(copts.alphas);
  RSCode code(f, copts.n, copts.k, std::move(alphas));
  std::vector<uint32_t> word = parse_symbols(word_str);

  bool list_mode = want_list || mult > 1 || list_size.has_value();
  if (!list_mode) {
    std::optional<UniPoly> msg = unique_decode(code, word);
    if (!msg) {
      out << "status=no_codeword_in_range\nmode=unique\n";
      if (emit_json)
        out << "json=" << json{{"status", "no_codeword_in_range"}, {"mode", "unique"}}.dump()
            << "\n";
      return 2;
    }
    std::vector<uint32_t> cw = code.encode(*msg);
    int dist = hamming_distance(word, cw);
    out << "status=ok\nmode=unique\n";
    out << "message=" << format_poly(*msg) << "\n";
    out << "codeword=" << format_symbols(cw) << "\n";
    out << "distance=" << dist << "\n";
    if (emit_json)
      out << "json="
          << json{{"status", "ok"},
                  {"mode", "unique"},
                  {"message", poly_json(*msg)},
                  {"codeword", cw},
                  {"distance", dist}}
                 .dump()
          << "\n";
    return 0;
  }

  DecodeResult res = list_decode(code, word, mult, list_size);
  bool empty = res.candidates.empty();
  out << "status=" << (empty ? "no_candidates" : "ok") << "\nmode=list\n";
  out << "m=" << res.params.m << "\n";
  out << "l=" << res.params.l << "\n";
  out << "w=" << res.w << "\n";
  out << "radius=" << res.guarantee_radius << "\n";
  print_bipoly(out, res.q);
  out << "candidates=" << res.candidates.size() << "\n";
  for (size_t i = 0; i < res.candidates.size(); ++i) {
    const Candidate& c = res.candidates[i];
    out << "candidate[" << i << "].message=" << format_poly(c.message) << "\n";
    out << "candidate[" << i << "].codeword=" << format_symbols(c.codeword) << "\n";
    out << "candidate[" << i << "].distance=" << c.distance << "\n";
  }
  if (emit_json) {
    json cands = json::array();
    for (const Candidate& c : res.candidates)
      cands.push_back({{"message", poly_json(c.message)},
                       {"codeword", c.codeword},
                       {"distance", c.distance}});
    out << "json="
        << json{{"status", empty ? "no_candidates" : "ok"},
                {"mode", "list"},
                {"m", res.params.m},
                {"l", res.params.l},
                {"w", res.w},
                {"radius", res.guarantee_radius},
                {"q", rows_json(res.q)},
                {"candidates", cands}}
               .dump()
        << "\n";
  }
  return empty ? 2 : 0;
}

// Fixed worked instance over GF(7): RS(6, 3), multiplicity 2.  Every printed
// value is checked against embedded expectations and the exit status reports
// the comparison.
int cmd_example(bool emit_json, std::ostream& out) {
  Field f(7);
  RSCode code(f, 6, 3);
  const std::vector<uint32_t> word{6, 2, 4, 4, 4, 2};

  const std::vector<uint32_t> want_h{6, 4, 4, 5, 1};
  const std::vector<uint32_t> want_eta{6, 0, 0, 0, 0, 0, 1};
  const std::vector<std::vector<uint32_t>> want_q{
      {6, 1, 2, 4, 3, 3, 4, 4}, {2, 6, 6, 4, 6, 3}, {5, 4, 0, 6}, {1}};
  const std::vector<std::vector<uint32_t>> want_roots{{1, 3, 4}, {5, 2, 6}};

  UniPoly h = code.interpolate_word(word);
  Interpolation interp = interpolate_q(code, word, 2);
  BiPoly q = y_monic(interp.q);
  std::vector<UniPoly> roots = y_roots(q, code.k());

  out << "field=7\nn=6\nk=3\n";
  out << "word=" << format_symbols(word) << "\n";
  out << "h=" << format_poly(h) << "\n";
  out << "eta=" << format_poly(code.node_polynomial()) << "\n";
  out << "m=2\nl=" << interp.params.l << "\n";
  print_bipoly(out, q);
  for (size_t i = 0; i < roots.size(); ++i)
    out << "root[" << i << "]=" << format_poly(roots[i]) << "\n";

  bool ok = h.coeffs() == want_h && code.node_polynomial().coeffs() == want_eta &&
            interp.params.l == 3 && q.ydeg() == 3 && roots.size() == want_roots.size();
  if (ok)
    for (size_t j = 0; j < want_q.size(); ++j)
      ok = ok && q.row(static_cast<int>(j)).coeffs() == want_q[j];
  if (ok)
    for (size_t i = 0; i < roots.size(); ++i) ok = ok && roots[i].coeffs() == want_roots[i];

  out << "golden=" << (ok ? "match" : "mismatch") << "\n";
  if (emit_json)
    out << "json="
        << json{{"golden", ok ? "match" : "mismatch"}, {"q", rows_json(q)}}.dump() << "\n";
  return ok ? 0 : 1;
}

uint32_t next_prime_at_least(uint32_t n) {
  auto prime = [](uint32_t x) {
    if (x < 2) return false;
    for (uint32_t d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  while (!prime(n)) ++n;
  return n;
}

int cmd_bench(const std::vector<int>& n_list, const std::vector<int>& m_list, double rate,
              uint64_t seed, std::optional<int> errors, std::ostream& out) {
  out << "n,k,m,l,mult_count,wall_time_ns\n";
  for (int n : n_list) {
    for (int mult : m_list) {
      int k = std::max(2, static_cast<int>(n * rate));
      uint32_t p = next_prime_at_least(static_cast<uint32_t>(n) + 1);
      Field f(p);
      RSCode code(f, n, k);

      std::mt19937_64 gen((seed << 16) ^ (static_cast<uint64_t>(n) << 8) ^
                          static_cast<uint64_t>(mult));
      std::vector<uint32_t> msg(static_cast<size_t>(k));
      for (uint32_t& c : msg) c = static_cast<uint32_t>(rng_below(gen, f.order()));
      std::vector<uint32_t> word = code.encode(msg);
      int t = errors ? *errors : (n - k) / 2;
      if (t > n) t = n;
      std::vector<size_t> indices(word.size());
      for (size_t i = 0; i < indices.size(); ++i) indices[i] = i;
      for (int e = 0; e < t; ++e) {
        size_t pick = static_cast<size_t>(e) + rng_below(gen, indices.size() - static_cast<size_t>(e));
        std::swap(indices[static_cast<size_t>(e)], indices[pick]);
        uint32_t fresh = static_cast<uint32_t>(rng_below(gen, f.order() - 1));
        size_t pos = indices[static_cast<size_t>(e)];
        if (fresh >= word[pos]) ++fresh;
        word[pos] = fresh;
      }

      f.reset_counters();
      auto t0 = std::chrono::steady_clock::now();
      DecodeResult res = list_decode(code, word, mult);
      auto t1 = std::chrono::steady_clock::now();
      uint64_t count = f.mult_count();
      auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      out << n << ',' << k << ',' << mult << ',' << res.params.l << ',' << count << ',' << ns
          << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reed-Solomon list decoding via module Groebner bases"};
  app.require_subcommand(1);

  CodeOptions enc_opts;
  std::string enc_message;
  bool enc_json = false;
  CLI::App* enc = app.add_subcommand("encode", "Evaluate a message polynomial");
  add_code_options(enc, enc_opts);
  enc->add_option("--message", enc_message, "Message coefficients, lowest degree first")
      ->required();
  enc->add_flag("--json", enc_json, "Also emit a JSON line");

  std::string cor_field, cor_word;
  int cor_errors = 0;
  uint64_t cor_seed = 0;
  bool cor_json = false;
  CLI::App* cor = app.add_subcommand("corrupt", "Flip random positions of a word");
  cor->add_option("--field", cor_field, "Field as p or p^m")->required();
  cor->add_option("--word", cor_word, "Word to corrupt")->required();
  cor->add_option("--errors", cor_errors, "Number of positions to flip")->required();
  cor->add_option("--seed", cor_seed, "Random seed")->required();
  cor->add_flag("--json", cor_json, "Also emit a JSON line");

  CodeOptions dec_opts;
  std::string dec_word;
  int dec_mult = 1;
  bool dec_list = false, dec_json = false;
  std::optional<int> dec_list_size;
  CLI::App* dec = app.add_subcommand("decode", "Decode a received word");
  add_code_options(dec, dec_opts);
  dec->add_option("--word", dec_word, "Received word")->required();
  dec->add_option("--mult", dec_mult, "Interpolation multiplicity (default 1)");
  dec->add_flag("--list", dec_list, "List decoding (implied by --mult > 1)");
  dec->add_option("--list-size", dec_list_size, "Override the y-degree cap l");
  dec->add_flag("--json", dec_json, "Also emit a JSON line");

  bool ex_json = false;
  CLI::App* ex = app.add_subcommand("example", "Run the built-in worked instance");
  ex->add_flag("--json", ex_json, "Also emit a JSON line");

  std::string bench_n = "16,32,64", bench_m = "1,2,3";
  double bench_rate = 0.5;
  uint64_t bench_seed = 12345;
  std::optional<int> bench_errors;
  CLI::App* bench = app.add_subcommand("bench", "Decode random instances, print CSV counts");
  bench->add_option("--n-list", bench_n, "Code lengths (comma-separated)");
  bench->add_option("--m-list", bench_m, "Multiplicities (comma-separated)");
  bench->add_option("--rate", bench_rate, "Code rate k/n (default 0.5)");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--errors", bench_errors, "Errors per instance (default half distance)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (enc->parsed()) return cmd_encode(enc_opts, enc_message, enc_json, out);
    if (cor->parsed()) return cmd_corrupt(cor_field, cor_word, cor_errors, cor_seed, cor_json, out);
    if (dec->parsed())
      return cmd_decode(dec_opts, dec_word, dec_mult, dec_list, dec_list_size, dec_json, out);
    if (ex->parsed()) return cmd_example(ex_json, out);
    if (bench->parsed()) {
      std::vector<int> ns, ms;
      for (uint32_t v : parse_symbols(bench_n)) ns.push_back(static_cast<int>(v));
      for (uint32_t v : parse_symbols(bench_m)) ms.push_back(static_cast<int>(v));
      return cmd_bench(ns, ms, bench_rate, bench_seed, bench_errors, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace rslist
