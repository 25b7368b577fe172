// Matroids on ground sets of at most 64 elements, given by a rank oracle.
//
// A Matroid is a cheap, immutable handle. Copies share one memoized rank
// cache, which may be filled from several threads at once.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cycflat/gf2.hpp"
#include "cycflat/subset.hpp"

namespace cycflat {

struct RankedSet {
  SubsetMask set;
  int rank = 0;
  bool operator==(const RankedSet&) const = default;
};

enum class Backend { Matrix, CyclicFlats, Uniform, RankTable, Dual, Minor };

class Matroid {
 public:
  static Matroid from_matrix(BinaryMatrix m);
  // Trusts that `flats` is a valid cyclic-flat presentation; use
  // matroid_from_cyclic_flats for checked construction.
  static Matroid from_cyclic_flats(int n, std::vector<RankedSet> flats);
  static Matroid uniform(int n, int k);
  // ranks[X.bits()] is the rank of X; the table has 2^n entries. The rank
  // axioms are not checked.
  static Matroid from_rank_table(int n, std::vector<int> ranks);

  int size() const;
  SubsetMask ground() const { return SubsetMask::full(size()); }
  Backend backend() const;

  int rank(SubsetMask x) const;
  int rank() const { return rank(ground()); }
  int nullity(SubsetMask x) const { return x.size() - rank(x); }
  int nullity() const { return nullity(ground()); }
  SubsetMask closure(SubsetMask x) const;
  // cyc(X): elements of X lying on a circuit inside X.
  SubsetMask cyclic_operator(SubsetMask x) const;

  bool is_independent(SubsetMask x) const { return rank(x) == x.size(); }
  bool is_flat(SubsetMask x) const { return closure(x) == x; }
  bool is_cyclic(SubsetMask x) const { return cyclic_operator(x) == x; }
  bool is_cyclic_flat(SubsetMask x) const { return is_flat(x) && is_cyclic(x); }

  // For a minor, element i of this matroid is element index_map()[i] of the
  // matroid it was taken from. Identity otherwise.
  const std::vector<int>& index_map() const;
  // Subset of the parent ground set that a minor lives on (Y - X); the whole
  // ground set otherwise.
  SubsetMask parent_support() const;
  SubsetMask lift(SubsetMask local) const { return expand(local, parent_support()); }

  // Non-null for matrix-backed matroids.
  const BinaryMatrix* matrix() const;
  // Non-null for cyclic-flat backed matroids.
  const std::vector<RankedSet>* cyclic_flats() const;

  struct Impl;

 private:
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend Matroid dual(const Matroid&);
  friend Matroid minor(const Matroid&, SubsetMask, SubsetMask);
};

// rho*(A) = |A| + rho(E - A) - rho(E).
Matroid dual(const Matroid& m);
// M|Y / X, relabeled onto 0..|Y-X|-1 in ascending order. Requires X inside Y.
Matroid minor(const Matroid& m, SubsetMask x, SubsetMask y);
Matroid restrict_to(const Matroid& m, SubsetMask y);
Matroid contract(const Matroid& m, SubsetMask x);

SubsetMask loops(const Matroid& m);
SubsetMask isthmuses(const Matroid& m);
// No loops and no isthmuses.
bool is_nondegenerate(const Matroid& m);
// No loops and no parallel pairs.
bool is_simple(const Matroid& m);

// min |X| with rho(E - X) < rho(E). Uses codewords for matrix backends of
// small row-space dimension, the cyclic-flat formula for non-degenerate
// cyclic-flat backends, and a subset sweep otherwise. Requires rho(E) > 0.
int minimum_distance(const Matroid& m);

// If rank(A) == min(|A|, rank(E)) for every A, the matroid is U_{n}^{k};
// checks all 2^n subsets.
bool is_uniform_matroid(const Matroid& m);

inline constexpr int kMaxIsomorphismSize = 12;

// A bijection psi with rho1(X) = rho2(psi(X)) for all X, as psi[i] = image of
// element i, or nullopt. Requires n <= kMaxIsomorphismSize.
std::optional<std::vector<int>> is_isomorphic(const Matroid& a, const Matroid& b);

}  // namespace cycflat
