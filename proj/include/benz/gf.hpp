// GF(q) arithmetic for prime powers q = p^e.
//
// Elements are canonical indices 0..q-1: the index is the p-adic value of
// the coefficient vector (c_0, c_1, ...) of the element written in the
// power basis of the modulus.  0 and 1 are the additive and multiplicative
// identities.  The modulus is the lexicographically smallest irreducible
// monic polynomial of degree e (smallest p-adic coefficient index), found
// by trial division, so indices are reproducible across runs.
//
// Multiplication and division run on discrete-log tables over a fixed
// primitive element (smallest index among generators); addition runs on a
// precomputed table for moderate q and on coefficient vectors above that.
#pragma once

#include <memory>
#include <vector>

#include "benz/errors.hpp"

namespace benz {

enum class QChar { zero, square, nonsquare };

class Field {
 public:
  // Throws Errc::not_a_prime_power unless q = p^e with p prime, e >= 1.
  // Supported up to q = 2^16.
  static std::shared_ptr<const Field> create(long long q);

  long long order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  // Coefficients c_0..c_e of the modulus, c_e = 1.  For e = 1 this is x.
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return exp_[q_ > 2 ? 1 : 0]; }

  int add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[(size_t)a * q_ + b];
    return add_slow(a, b);
  }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  int inv(int a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  int div(int a, int b) const {
    if (b == 0) fail(Errc::division_by_zero, "division by zero");
    if (a == 0) return 0;
    return exp_[(log_[a] - log_[b] + q_ - 1) % (q_ - 1)];
  }
  int pow(int a, long long n) const;

  QChar quadratic_character(int a) const {
    if (a == 0) return QChar::zero;
    if (p_ == 2) return QChar::square;
    return (log_[a] % 2 == 0) ? QChar::square : QChar::nonsquare;
  }

  // Discrete-log tables: exp_at(i) = g^i for 0 <= i < q-1, log_at inverts.
  int exp_at(int i) const { return exp_[i]; }
  int log_at(int a) const {
    if (a == 0) fail(Errc::division_by_zero, "log of zero");
    return log_[a];
  }

  // Trace into the prime field; the result is an element index < p.
  int trace_to_prime(int a) const;

  // Coefficient vector (c_0..c_{e-1}) of an element index.
  std::vector<int> coeffs(int a) const;
  int from_coeffs(const std::vector<int>& c) const;

  // Smallest nonsquare by index (odd q only).
  int smallest_nonsquare() const;
  // Smallest element with trace 1 into GF(2) (q even only).
  int smallest_trace_one() const;

 private:
  Field() = default;
  int add_slow(int a, int b) const;

  long long q_ = 0;
  int p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_, log_, neg_;
  std::vector<int> add_table_;  // only for q <= 1024
};

// Checked element wrapper.  Mixing elements of two Field instances throws
// Errc::field_mismatch even if the orders agree.
struct FieldElement {
  const Field* field = nullptr;
  int idx = 0;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field, a.field->add(a.idx, b.idx)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field, a.field->sub(a.idx, b.idx)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field, a.field->mul(a.idx, b.idx)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    check(a, b);
    return {a.field, a.field->div(a.idx, b.idx)};
  }
  FieldElement operator-() const { return {field, field->neg(idx)}; }
  FieldElement pow(long long n) const { return {field, field->pow(idx, n)}; }
  friend bool operator==(FieldElement a, FieldElement b) {
    check(a, b);
    return a.idx == b.idx;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (a.field != b.field) fail(Errc::field_mismatch, "elements of different fields");
  }
};

inline FieldElement element(const std::shared_ptr<const Field>& f, int idx) {
  return {f.get(), idx};
}

}  // namespace benz
