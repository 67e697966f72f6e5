#ifndef GQ_BITSET_HPP
#define GQ_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace gq {

// Fixed-universe dynamic bitset. Every set operation assumes equal universe sizes.
class Bitset {
 public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ull; }

  void clear() { std::fill(w_.begin(), w_.end(), 0ull); }

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
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  int count_and(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  // Visits set bits in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t x = w_[wi];
      while (x) {
        int b = __builtin_ctzll(x);
        f(int(wi * 64 + b));
        x &= x - 1;
      }
    }
  }
  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }
  int first() const {
    for (size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return int(wi * 64 + __builtin_ctzll(w_[wi]));
    return -1;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull ^ uint64_t(n_);
    for (uint64_t x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

  static Bitset of(int n, const std::vector<int>& ids) {
    Bitset b(n);
    for (int i : ids) b.set(i);
    return b;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return size_t(b.hash()); }
};

}  // namespace gq

#endif
