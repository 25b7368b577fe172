// The lattice of cyclic flats, with cover edges labeled by rank and nullity
// jumps.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycflat/matroid.hpp"

namespace cycflat {

enum class EdgeKind { Elementary, Rank, Nullity, Mixed };

struct EdgeLabel {
  EdgeKind kind = EdgeKind::Elementary;
  int d_rho = 1;
  int d_eta = 1;
  // "elementary", "rank:l", "nullity:l", "mixed:r,e".
  std::string to_string() const;
  bool operator==(const EdgeLabel&) const = default;
};

EdgeLabel classify_jump(int d_rho, int d_eta);

struct ZElement {
  int id = 0;
  SubsetMask set;
  int rank = 0;
  int nullity = 0;
};

struct CoverEdge {
  int child = 0;
  int parent = 0;
  EdgeLabel label;
};

class ZLattice {
 public:
  ZLattice() = default;
  // Orders the family by (rank, ascending index list) and computes covers.
  // The family must be a lattice under inclusion; use verify_z_axioms first
  // for untrusted input.
  static ZLattice from_family(int n, std::vector<RankedSet> family);

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<ZElement>& elements() const { return elems_; }
  const ZElement& operator[](int id) const { return elems_[id]; }
  const std::vector<CoverEdge>& edges() const { return edges_; }
  const std::vector<int>& lower_covers(int id) const { return down_[id]; }
  const std::vector<int>& upper_covers(int id) const { return up_[id]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  // Number of elements in a longest chain.
  int height() const { return height_; }
  std::optional<int> find(SubsetMask s) const;
  bool is_cover(int child, int parent) const;
  std::vector<RankedSet> presentation() const;

 private:
  int n_ = 0;
  std::vector<ZElement> elems_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<int>> up_;
  int bottom_ = 0;
  int top_ = 0;
  int height_ = 0;
};

inline constexpr std::size_t kMaxVisitedFlats = 10'000'000;

// Flats of M inside the flat `within` of rank at most max_rank, found by a
// breadth-first walk over covers cl(F u e) starting at cl(empty). Throws
// GuardExceeded past kMaxVisitedFlats.
std::vector<SubsetMask> enumerate_flats(const Matroid& m, SubsetMask within, int max_rank);

ZLattice build_zlattice(const Matroid& m);

// Least upper bound and greatest lower bound, computed inside the lattice.
int z_join(const ZLattice& l, int a, int b);
int z_meet(const ZLattice& l, int a, int b);
// Meet/join of a list of elements; the empty join is bottom, the empty meet top.
int z_join_all(const ZLattice& l, const std::vector<int>& ids);
int z_meet_all(const ZLattice& l, const std::vector<int>& ids);

std::vector<CoverEdge> classify_edges(const ZLattice& l);

std::vector<int> atoms(const ZLattice& l);
std::vector<int> coatoms(const ZLattice& l);
// Every element is the join of the atoms below it.
bool is_atomic(const ZLattice& l);
// Every element is the union of the atoms below it.
bool is_atomic_by_union(const ZLattice& l);
// Every element is the meet of the coatoms above it.
bool is_coatomic(const ZLattice& l);

struct AxiomReport {
  bool ok = true;
  std::string axiom;  // "Z0".."Z3", empty when ok
  std::optional<SubsetMask> x;
  std::optional<SubsetMask> y;
  std::string detail;
};

// Checks the cyclic-flat axioms on a ranked family. Throws PreconditionError
// on duplicate sets or sets outside the ground set.
AxiomReport verify_z_axioms(int n, const std::vector<RankedSet>& family);

// rho(X) = min over Z of rho(Z) + |X - Z|.
int rank_from_cyclic_flats(const std::vector<RankedSet>& family, SubsetMask x);

// Checked construction; throws PreconditionError naming the failed axiom.
Matroid matroid_from_cyclic_flats(int n, std::vector<RankedSet> family);

// d = eta(E) + 1 - max eta(Z) over Z != E. Requires M non-degenerate.
int min_distance_via_cyclic_flats(const Matroid& m, const ZLattice& l);

}  // namespace cycflat
