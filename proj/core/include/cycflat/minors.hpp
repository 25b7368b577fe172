// Cyclic flats of minors, and uniformity tests for minors read off the
// lattice of the whole matroid.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycflat/zlattice.hpp"

namespace cycflat {

// Lattice of M|Y/X for X cyclic and Y a flat: the interval [X, Y] shifted
// down by X, relabeled like minor(m, x, y).
ZLattice zlattice_interval_minor(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y);

// Images of Z(M) describing the cyclic flats of a minor. All sets use the
// labels of M and come back sorted by mask, without duplicates.
std::vector<SubsetMask> zmap_restriction(const Matroid& m, const ZLattice& l, SubsetMask y);
std::vector<SubsetMask> zmap_contraction(const Matroid& m, const ZLattice& l, SubsetMask x);

struct MinorImages {
  // cl(X u cyc(Z n Y)) n (Y - X)
  std::vector<SubsetMask> restrict_first;
  // cyc(cl(X u Z) n Y) - X
  std::vector<SubsetMask> contract_first;
};
MinorImages zmap_minor(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y);

enum class UniformRoute { Edge, Independent, RankZero, Restriction, Contraction, General };
const char* to_string(UniformRoute r);

struct UniformVerdict {
  bool is_uniform = false;
  int n = 0;  // size of the minor ground set
  int k = 0;  // rank of the minor
  UniformRoute route = UniformRoute::General;
  // Failed condition, empty when uniform.
  std::string reason;
  std::optional<SubsetMask> witness;
};

// M|Y/X for a cover X < Y of Z(M) is U_{|Y|-|X|}^{rho(Y)-rho(X)}. Throws
// PreconditionError if the pair is not a cover; throws InvariantViolation if
// the constructed minor is not uniform.
UniformVerdict uniform_minor_from_edge(const Matroid& m, const ZLattice& l, int child, int parent);

// M|Y for Y of full rank.
UniformVerdict is_restriction_uniform(const Matroid& m, const ZLattice& l, SubsetMask y);
// M/X for X independent.
UniformVerdict is_contraction_uniform(const Matroid& m, const ZLattice& l, SubsetMask x);
// M|Y/X for any X inside Y. X is replaced by cyc(X) and Y by cl(Y) through
// the interval lattice, then the restriction, contraction or general test
// runs on what is left.
UniformVerdict is_minor_uniform(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y);

}  // namespace cycflat
