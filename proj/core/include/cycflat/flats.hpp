// Flats, rank-2 uniform minors and binarity, read off the lattice of cyclic
// flats.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycflat/zlattice.hpp"

namespace cycflat {

// {e not in A : A u e is a flat}.
SubsetMask flat_extension_set(const Matroid& m, SubsetMask a);
// Same set for a flat A, by rho(A u {e, f}) = rho(A) + 2 for all f != e
// outside A. Throws PreconditionError if A is not a flat.
SubsetMask flat_extension_set_by_rank(const Matroid& m, SubsetMask a);

// Join of the lattice elements inside A (bottom if there are none).
int join_below(const ZLattice& l, SubsetMask a);
// Meet of the lattice elements containing A (top if there are none).
int meet_above(const ZLattice& l, SubsetMask a);

struct FlatContext {
  SubsetMask a;
  int lower = 0;  // join of cyclic flats inside A
  int upper = 0;  // meet of cyclic flats containing A
  SubsetMask cl_cyc;  // cl(cyc(A))
  SubsetMask cyc_cl;  // cyc(cl(A))
  std::vector<int> z_interval;       // [cl cyc A, cyc cl A]
  std::vector<int> z_prime_interval;  // [lower, upper]
};
FlatContext cyclic_bounds(const Matroid& m, const ZLattice& l, SubsetMask a);

inline constexpr int kMaxFlatConditionGap = 16;

struct FlatConditions {
  // False when the join of the cyclic flats inside F is not inside F; F is
  // then not a flat and the remaining fields are false.
  bool applicable = false;
  bool closure = false;  // (i) cl(F) = F
  bool top_of_interval = false;  // (ii)
  bool interval_bound = false;   // (iii)
  // (iv) and (v) range over every B between the lower bound and F; skipped
  // when that gap exceeds kMaxFlatConditionGap elements.
  std::optional<bool> all_between_flat;
  std::optional<bool> all_between_bound;
};
FlatConditions flat_conditions(const Matroid& m, const ZLattice& l, SubsetMask f);
// Decides flatness from (iii), after checking that every evaluated condition
// agrees; throws InvariantViolation otherwise.
bool is_flat_via_zlattice(const Matroid& m, const ZLattice& l, SubsetMask f);

struct UpsilonFamily {
  SubsetMask f;
  // Cyclic flats X with rho(1_Z) - 1 = rho(X) + |F - X|.
  std::vector<int> members;
  std::vector<int> maximal;
  // Maximal members not contained in F; these drive the interval count.
  std::vector<int> counted;
};
// F must be a flat inside 1_Z of rank rho(1_Z) - 2.
UpsilonFamily upsilon(const Matroid& m, const ZLattice& l, SubsetMask f);
// {cyc(cl(F u e)) : e in 1_Z - F - F^F} as lattice ids, sorted.
std::vector<int> upsilon_via_closures(const Matroid& m, const ZLattice& l, SubsetMask f);

// Number of flats strictly between F and 1_Z.
int count_corank2_interval(const Matroid& m, const ZLattice& l, SubsetMask f);
// Flats inside 1_Z of rank rho(1_Z) - 2.
std::vector<SubsetMask> corank2_flats(const Matroid& m, const ZLattice& l);

enum class BoundStatus { Computed, RankTooSmall };

struct Rank2MinorBound {
  // Largest n with U_n^2 a minor (for n >= 3 when Computed).
  int n_max = 0;
  BoundStatus status = BoundStatus::Computed;
  std::optional<SubsetMask> witness;
};
Rank2MinorBound max_rank2_uniform_minor(const Matroid& m, const ZLattice& l);
// Largest n with U_n^{n-2} a minor, via the dual.
Rank2MinorBound max_corank2_uniform_minor(const Matroid& m);

struct BinarityVerdict {
  bool binary = true;
  // Rank of 1_Z below 2: no rank-2 uniform minor can exist.
  bool vacuous = false;
  // Corank-2 flat whose interval holds at least 4 flats.
  std::optional<SubsetMask> witness_flat;
  // Cyclic set failing the dual test.
  std::optional<SubsetMask> witness_cyclic;
  int witness_value = 0;
};
// Runs the flat test and the dual cyclic-set test and checks they agree.
BinarityVerdict is_binary_via_zlattice(const Matroid& m, const ZLattice& l);

inline constexpr int kMaxU42Search = 14;

struct MinorSpec {
  SubsetMask x;  // contract
  SubsetMask y;  // keep
};
// M|Y/X isomorphic to U_4^2 with X a flat of rank rho(E) - 2, or nullopt.
std::optional<MinorSpec> find_u4_2_minor(const Matroid& m);

}  // namespace cycflat
