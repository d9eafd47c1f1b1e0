#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rslist/unipoly.hpp"

namespace rslist {

/// Evaluation-style Reed-Solomon code: codewords are the evaluations of
/// polynomials of degree < k at n distinct points.  Minimum distance is
/// n - k + 1 and the half-distance radius is (n - k) / 2.
///
/// The node polynomial and the Lagrange basis for the evaluation points are
/// computed once at construction, so per-word interpolation costs n^2 field
/// multiplications.  The constructor resets the field's counters when done.
class RSCode {
 public:
  /// When alphas is omitted the first n nonzero canonical elements are used
  /// (requires n <= q - 1); explicit alphas may include zero.
  RSCode(const Field& f, int n, int k,
         std::optional<std::vector<uint32_t>> alphas = std::nullopt);

  const Field& field() const { return *f_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<uint32_t>& alphas() const { return alphas_; }

  /// Monic product of (x - alpha_i) over all evaluation points.
  const UniPoly& node_polynomial() const { return eta_; }

  /// Cached Lagrange basis: lagrange()[i](alpha_j) = [i == j].
  const std::vector<UniPoly>& lagrange() const { return basis_; }

  /// Largest error weight the half-distance decoder is guaranteed to correct.
  int unique_radius() const { return (n_ - k_) / 2; }

  /// Evaluates the message polynomial at every point; the message degree must
  /// be below k.
  std::vector<uint32_t> encode(const UniPoly& message) const;
  std::vector<uint32_t> encode(const std::vector<uint32_t>& message_coeffs) const;

  /// The unique polynomial of degree < n agreeing with the word at every
  /// point, via the cached basis.
  UniPoly interpolate_word(const std::vector<uint32_t>& word) const;

 private:
  const Field* f_;
  int n_;
  int k_;
  std::vector<uint32_t> alphas_;
  UniPoly eta_;
  std::vector<UniPoly> basis_;
};

/// Number of nonzero symbols.
int hamming_weight(const std::vector<uint32_t>& u);

/// Number of positions where the words differ; lengths must match.
int hamming_distance(const std::vector<uint32_t>& u, const std::vector<uint32_t>& w);

}  // namespace rslist
