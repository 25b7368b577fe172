#include "cycflat/subset.hpp"

#include <algorithm>

namespace cycflat {

SubsetMask SubsetMask::of(std::initializer_list<int> one_based) {
  return of(std::vector<int>(one_based));
}

SubsetMask SubsetMask::of(const std::vector<int>& one_based) {
  std::uint64_t bits = 0;
  for (int i : one_based) bits |= std::uint64_t{1} << (i - 1);
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::vector<int> SubsetMask::one_based() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int i) { out.push_back(i + 1); });
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int i) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  });
  return s + "}";
}

bool lex_less(SubsetMask a, SubsetMask b) {
  // Compare ascending index lists: walk the common prefix.
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

SubsetMask compress(SubsetMask s, SubsetMask support) {
  std::uint64_t out = 0;
  int pos = 0;
  support.for_each([&](int i) {
    if (s.contains(i)) out |= std::uint64_t{1} << pos;
    ++pos;
  });
  return SubsetMask(out);
}

SubsetMask expand(SubsetMask local, SubsetMask support) {
  std::uint64_t out = 0;
  int pos = 0;
  support.for_each([&](int i) {
    if (local.contains(pos)) out |= std::uint64_t{1} << i;
    ++pos;
  });
  return SubsetMask(out);
}

}  // namespace cycflat
