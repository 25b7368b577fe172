// Brute-force cross-checks of the lattice-based routines, run by the CLI's
// --verify flag. Each check recomputes a value directly from the rank
// function.
#pragma once

#include <string>
#include <vector>

#include "cycflat/zlattice.hpp"

namespace cycflat {

struct VerifyItem {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

inline constexpr int kMaxBruteForce = 16;

// Cyclic flats by testing every subset.
std::vector<SubsetMask> brute_force_cyclic_flats(const Matroid& m);
// Flats strictly between F and T, by testing every subset.
int brute_force_flats_between(const Matroid& m, SubsetMask f, SubsetMask t);

std::vector<VerifyItem> verify_analysis(const Matroid& m, const ZLattice& l);

}  // namespace cycflat
