#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rslist/errors.hpp"

namespace rslist {

class FieldElem;

/// Arithmetic context for GF(p^m) with q = p^m <= 2^16.
///
/// Elements are canonical integers in [0, q): the integer whose base-p digits
/// are the coefficients of the residue polynomial, lowest degree first.
/// Prime fields (m = 1) use modular integer arithmetic; extension fields use
/// log/antilog tables built over a verified irreducible modulus.
///
/// Every mul() and every div() bumps a mutable multiplication counter;
/// inversions are tallied separately and div() counts as one multiplication
/// plus one inversion.  Counters are per-context and not thread-safe.
class Field {
 public:
  static constexpr uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^m).  A modulus (coefficients lowest first, degree exactly m)
  /// may be supplied for m > 1; otherwise the monic irreducible of degree m
  /// with the smallest canonical encoding is found by exhaustive factor
  /// search.
  explicit Field(uint32_t p, uint32_t m = 1,
                 std::optional<std::vector<uint32_t>> modulus = std::nullopt);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  Field(Field&&) = delete;
  Field& operator=(Field&&) = delete;

  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return m_; }
  uint32_t order() const { return q_; }

  /// Modulus coefficients, lowest degree first (empty for m = 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  FieldElem elem(uint32_t value) const;
  FieldElem zero() const;
  FieldElem one() const;

  uint64_t mult_count() const { return mult_count_; }
  uint64_t inv_count() const { return inv_count_; }
  void reset_counters() const { mult_count_ = 0; inv_count_ = 0; }

 private:
  void build_tables();

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> log_;
  std::vector<uint32_t> alog_;
  mutable uint64_t mult_count_ = 0;
  mutable uint64_t inv_count_ = 0;
};

/// A field element tagged with its owning context.  Arithmetic between
/// elements of different contexts throws MixedFields.
class FieldElem {
 public:
  FieldElem(const Field& f, uint32_t value) : f_(&f), v_(value) {
    if (value >= f.order()) throw MalformedInput("element value out of range");
  }

  uint32_t value() const { return v_; }
  const Field& field() const { return *f_; }

  FieldElem inv() const { return FieldElem(*f_, f_->inv(v_)); }
  FieldElem pow(uint64_t e) const { return FieldElem(*f_, f_->pow(v_, e)); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return FieldElem(*a.f_, a.f_->add(a.v_, b.v_));
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return FieldElem(*a.f_, a.f_->sub(a.v_, b.v_));
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return FieldElem(*a.f_, a.f_->mul(a.v_, b.v_));
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return FieldElem(*a.f_, a.f_->div(a.v_, b.v_));
  }
  FieldElem operator-() const { return FieldElem(*f_, f_->neg(v_)); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

 private:
  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.f_ != b.f_) throw MixedFields();
  }

  const Field* f_;
  uint32_t v_;
};

inline FieldElem Field::elem(uint32_t value) const { return FieldElem(*this, value); }
inline FieldElem Field::zero() const { return FieldElem(*this, 0); }
inline FieldElem Field::one() const { return FieldElem(*this, 1); }

}  // namespace rslist
