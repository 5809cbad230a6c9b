#pragma once

#include <cstdint>
#include <vector>

namespace ea {

// Fixed-width bit row used for order relations and tight-constraint sets.
class Bits {
public:
  Bits() = default;
  explicit Bits(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }

  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  // Lowest set bit, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(int(k * 64 + __builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace ea
