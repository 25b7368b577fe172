// Subsets of a ground set of at most 64 elements, stored as bitmasks.
//
// Element i of the ground set is bit i (0-based). Everything user facing
// (CLI, JSON, presentation files) uses 1-based indices.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace cycflat {

inline constexpr int kMaxGround = 64;

class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SubsetMask single(int i) { return SubsetMask(std::uint64_t{1} << i); }
  // Builds a set from 1-based indices.
  static SubsetMask of(std::initializer_list<int> one_based);
  static SubsetMask of(const std::vector<int>& one_based);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(SubsetMask o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(SubsetMask o) const { return (bits_ & o.bits_) != 0; }
  constexpr SubsetMask with(int i) const { return SubsetMask(bits_ | (std::uint64_t{1} << i)); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << i)); }
  // Lowest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }
  SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
  SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }
  SubsetMask& operator-=(SubsetMask o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const SubsetMask&) const = default;
  constexpr auto operator<=>(const SubsetMask&) const = default;

  // 0-based element indices in ascending order.
  std::vector<int> elements() const;
  // 1-based indices in ascending order.
  std::vector<int> one_based() const;
  // "{1,2,3}" with 1-based indices; "{}" for the empty set.
  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Order by ascending 1-based index list, compared lexicographically.
bool lex_less(SubsetMask a, SubsetMask b);

// Maps a subset of `support` to the ground set {0..|support|-1}, keeping order.
SubsetMask compress(SubsetMask s, SubsetMask support);
// Inverse of compress.
SubsetMask expand(SubsetMask local, SubsetMask support);

// Calls f on every subset of `s`, including the empty set and `s` itself.
template <typename F>
void for_each_subset(SubsetMask s, F&& f) {
  std::uint64_t b = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(SubsetMask(sub));
    if (sub == b) break;
    sub = (sub - b) & b;
  }
}

// Calls f on every subset of `s` of the given size.
template <typename F>
void for_each_subset_of_size(SubsetMask s, int size, F&& f) {
  const std::vector<int> elems = s.elements();
  const int m = static_cast<int>(elems.size());
  if (size < 0 || size > m) return;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << elems[i];
    f(SubsetMask(bits));
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace cycflat

template <>
struct std::hash<cycflat::SubsetMask> {
  std::size_t operator()(cycflat::SubsetMask s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
