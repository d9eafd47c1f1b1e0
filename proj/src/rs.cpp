#include "rslist/rs.hpp"

#include <stdexcept>

namespace rslist {

RSCode::RSCode(const Field& f, int n, int k, std::optional<std::vector<uint32_t>> alphas)
    : f_(&f), n_(n), k_(k), eta_(f) {
  if (k < 2) throw KTooSmall();
  if (n <= k) throw std::invalid_argument("code length must exceed the dimension");
  if (static_cast<uint32_t>(n) > f.order())
    throw std::invalid_argument("code length exceeds the field order");

  if (alphas) {
    alphas_ = std::move(*alphas);
    if (static_cast<int>(alphas_.size()) != n)
      throw LengthMismatch("evaluation point count must equal n");
    for (uint32_t a : alphas_)
      if (a >= f.order()) throw MalformedInput("evaluation point out of range");
  } else {
    if (static_cast<uint32_t>(n) > f.order() - 1)
      throw std::invalid_argument("default evaluation points require n <= q - 1");
    alphas_.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) alphas_.push_back(static_cast<uint32_t>(i));
  }

  eta_ = node_poly(f, alphas_);  // also rejects duplicate points
  basis_ = lagrange_basis(f, alphas_);
  f.reset_counters();
}

std::vector<uint32_t> RSCode::encode(const UniPoly& message) const {
  if (&message.field() != f_) throw MixedFields();
  if (message.deg() >= k_) throw MessageDegreeTooHigh();
  std::vector<uint32_t> out;
  out.reserve(alphas_.size());
  for (uint32_t a : alphas_) out.push_back(message.eval(a));
  return out;
}

std::vector<uint32_t> RSCode::encode(const std::vector<uint32_t>& message_coeffs) const {
  return encode(UniPoly(*f_, message_coeffs));
}

UniPoly RSCode::interpolate_word(const std::vector<uint32_t>& word) const {
  if (static_cast<int>(word.size()) != n_) throw LengthMismatch();
  UniPoly out(*f_);
  for (size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= f_->order()) throw MalformedInput("symbol out of range");
    out += basis_[i].scaled(word[i]);
  }
  return out;
}

int hamming_weight(const std::vector<uint32_t>& u) {
  int w = 0;
  for (uint32_t s : u)
    if (s != 0) ++w;
  return w;
}

int hamming_distance(const std::vector<uint32_t>& u, const std::vector<uint32_t>& w) {
  if (u.size() != w.size()) throw LengthMismatch();
  int d = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != w[i]) ++d;
  return d;
}

}  // namespace rslist
