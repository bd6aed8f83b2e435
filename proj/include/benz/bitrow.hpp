// Fixed-width bit vector with popcount-based set operations.  Circles are
// stored as bit rows over points, relation matrices as bit rows over
// circles; intersection sizes are a single and+popcount pass.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace benz {

class Bitrow {
 public:
  Bitrow() : nbits_(0) {}
  explicit Bitrow(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  int words() const { return (int)w_.size(); }

  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  int and_count(const Bitrow& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  bool intersects(const Bitrow& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitrow& operator&=(const Bitrow& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitrow& operator|=(const Bitrow& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bitrow& and_not(const Bitrow& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitrow operator&(Bitrow a, const Bitrow& b) { return a &= b; }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool operator==(const Bitrow& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

  // Index of the lowest set bit, -1 when empty.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (int)(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f((int)(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int nbits_;
  std::vector<uint64_t> w_;
};

}  // namespace benz
