#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace mwiso {

/// Fixed-width vertex set over at most 128 vertices (two 64-bit words).
/// All boundary computations reduce to word operations on these.
struct vset {
  static constexpr int max_bits = 128;

  std::array<std::uint64_t, 2> w{0, 0};

  static vset full(int n) {
    vset s;
    if (n >= 64) {
      s.w[0] = ~0ULL;
      s.w[1] = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      s.w[0] = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    }
    return s;
  }

  static vset single(int i) {
    vset s;
    s.set(i);
    return s;
  }

  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool empty() const { return (w[0] | w[1]) == 0; }

  bool intersects(const vset& o) const { return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0; }
  bool contains(const vset& o) const {
    return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0;
  }

  friend vset operator&(const vset& a, const vset& b) {
    return vset{{a.w[0] & b.w[0], a.w[1] & b.w[1]}};
  }
  friend vset operator|(const vset& a, const vset& b) {
    return vset{{a.w[0] | b.w[0], a.w[1] | b.w[1]}};
  }
  friend vset operator^(const vset& a, const vset& b) {
    return vset{{a.w[0] ^ b.w[0], a.w[1] ^ b.w[1]}};
  }
  /// a minus b
  friend vset operator-(const vset& a, const vset& b) {
    return vset{{a.w[0] & ~b.w[0], a.w[1] & ~b.w[1]}};
  }

  friend bool operator==(const vset& a, const vset& b) = default;

  /// Lowest set bit, or -1 when empty.
  int first() const {
    if (w[0]) return std::countr_zero(w[0]);
    if (w[1]) return 64 + std::countr_zero(w[1]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t x = w[word];
      while (x) {
        int b = std::countr_zero(x);
        f(word * 64 + b);
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
};

/// Orders sets by the sorted list of their elements (so {0,5} < {1,2}).
inline bool vset_lex_less(const vset& a, const vset& b) {
  vset d = a ^ b;
  if (d.empty()) return false;
  return a.test(d.first());
}

struct vset_hash {
  std::size_t operator()(const vset& s) const {
    std::uint64_t h = s.w[0] * 0x9e3779b97f4a7c15ULL;
    h ^= s.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace mwiso
