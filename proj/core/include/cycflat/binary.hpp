// Structure of the lattice of cyclic flats of binary matroids: nullity and
// rank relations across rank-2 and nullity-2 intervals, height-3
// classification, blunt cyclic flats, residual sets and Griesmer chains.
//
// Routines here assume a binary input unless they say otherwise; on other
// matroids their checks may report failures.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycflat/zlattice.hpp"

namespace cycflat {

enum class RelationCase { None, One, TwoCovering, TwoProper, Three, TooMany };
const char* to_string(RelationCase c);

struct RelationCheck {
  int z1 = 0;
  int z2 = 0;
  std::vector<int> between;  // elements strictly between z1 and z2
  RelationCase rcase = RelationCase::None;
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};

// Rank-2 non-degenerate M: eta(E) against the cyclic flats strictly between
// bottom and top.
RelationCheck check_rank2_relations(const Matroid& m);
// Every pair Z1 < Z2 with rho(Z2) - rho(Z1) = 2.
std::vector<RelationCheck> check_rankdiff2_relations(const ZLattice& l);
// Every pair Z1 < Z2 with eta(Z2) - eta(Z1) = 2.
std::vector<RelationCheck> check_null2_relations(const ZLattice& l);

enum class Height3Kind { Eta2, Iso633, Iso734, Iso743, Iso844 };
const char* to_string(Height3Kind k);

struct Height3Class {
  Height3Kind kind = Height3Kind::Eta2;
  int n = 0;
  int k = 0;
  int d = 0;
  int atom_count = 0;
  int nullity = 0;
  // psi[i] = element of the reference matroid matched with element i.
  std::optional<std::vector<int>> witness;
};

// Reference matrices for the four height-3 classes with nullity above 2.
BinaryMatrix reference_matrix(Height3Kind kind);

// Simple, binary, no isthmuses, lattice of height 3. Throws
// PreconditionError if these fail, InvariantViolation if no class matches.
Height3Class classify_height3(const Matroid& m);

struct PropertyCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct BluntFlag {
  int id = 0;
  bool blunt = true;
  std::optional<int> witness_child;  // a lower cover with rank jump > 1
};

struct BluntAnalysis {
  std::vector<BluntFlag> flags;
  int d = 0;
  std::optional<int> zd;  // lexicographically least coatom of maximal nullity
  std::vector<PropertyCheck> checks;
};

// Blunt: every lower cover has rank jump 1. Checks the coatom-edge and
// distance bounds for non-degenerate M of positive rank.
BluntAnalysis blunt_flags(const Matroid& m, const ZLattice& l);

struct DmzcCheck {
  int coatom = 0;
  bool applicable = false;  // false when M|Z^c has no proper nonempty cyclic flat
  std::optional<int> z1;
  int d_c = 0;  // minimum distance of M|Z^c
  std::vector<int> upsilon;  // coatoms containing z1
  RelationCase rcase = RelationCase::None;
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
  bool lower_bound_holds = false;  // 2 d_c >= d - (eta(Z^d) - eta(Z^c))
};

struct DmzcReport {
  int d = 0;
  int zd = 0;
  std::vector<DmzcCheck> checks;
  // Every cyclic flat of rank k-2 lies under at least two coatoms.
  std::vector<PropertyCheck> upsilon2;
};

// Non-degenerate M with d >= 3; one check per blunt coatom of rank k-1 and
// per maximal-nullity cyclic flat below it.
DmzcReport dMZc_relation_check(const Matroid& m, const ZLattice& l);

enum class ResidualCase { CoatomD3, CoatomD2, Augmented, Hyperplane };
const char* to_string(ResidualCase c);

struct ResidualResult {
  SubsetMask set;  // labels of M
  int n = 0;
  int k = 0;
  int d = 0;
  ResidualCase rcase = ResidualCase::CoatomD3;
};

// A set of size n - d and rank k - 1 whose restriction has minimum distance
// at least ceil(d/2). Requires rho(E) >= 2; throws InvariantViolation if
// the result misses these parameters.
ResidualResult residual_set(const Matroid& m);
ResidualResult residual_set(const Matroid& m, const ZLattice& l);

struct GriesmerBound {
  int bound = 0;
  int slack = 0;
};
// bound = sum_{i<k} ceil(d / 2^i), slack = n - bound.
GriesmerBound griesmer_check(int n, int k, int d);

struct ChainLevel {
  SubsetMask set;
  int n = 0;
  int k = 0;
  int d = 0;
};
// Iterated residual sets from E down to rank 1.
std::vector<ChainLevel> griesmer_chain(const Matroid& m);

struct CodewordCoatom {
  Codeword word;
  int coatom = 0;
};

struct CodewordCoatomMap {
  int d = 0;
  int weight_bound = 0;  // codewords with 0 < wt < weight_bound
  int size_bound = 0;    // coatoms with |Z| > size_bound
  std::vector<CodewordCoatom> pairs;
  std::vector<int> qualifying_coatoms;
  bool bijective = false;
};

// c -> E - supp(c). Requires a matrix-backed non-degenerate M with d >= 3.
CodewordCoatomMap coatom_codeword_map(const Matroid& m, const ZLattice& l);

}  // namespace cycflat
