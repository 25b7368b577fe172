#include "cycflat/flats.hpp"

#include <algorithm>

#include "cycflat/error.hpp"

namespace cycflat {

SubsetMask flat_extension_set(const Matroid& m, SubsetMask a) {
  SubsetMask out;
  (m.ground() - a).for_each([&](int e) {
    if (m.is_flat(a.with(e))) out = out.with(e);
  });
  return out;
}

SubsetMask flat_extension_set_by_rank(const Matroid& m, SubsetMask a) {
  if (!m.is_flat(a)) throw PreconditionError("A = " + a.to_string() + " is not a flat");
  const int r = m.rank(a);
  const SubsetMask rest = m.ground() - a;
  SubsetMask out;
  rest.for_each([&](int e) {
    bool ok = true;
    rest.without(e).for_each([&](int f) {
      if (ok && m.rank(a.with(e).with(f)) != r + 2) ok = false;
    });
    if (ok) out = out.with(e);
  });
  return out;
}

int join_below(const ZLattice& l, SubsetMask a) {
  int acc = l.bottom();
  for (const auto& z : l.elements()) {
    if (z.set.subset_of(a)) acc = z_join(l, acc, z.id);
  }
  return acc;
}

int meet_above(const ZLattice& l, SubsetMask a) {
  int acc = l.top();
  for (const auto& z : l.elements()) {
    if (a.subset_of(z.set)) acc = z_meet(l, acc, z.id);
  }
  return acc;
}

namespace {

std::vector<int> interval_ids(const ZLattice& l, SubsetMask lo, SubsetMask hi) {
  std::vector<int> out;
  for (const auto& z : l.elements()) {
    if (lo.subset_of(z.set) && z.set.subset_of(hi)) out.push_back(z.id);
  }
  return out;
}

// (iii) for a set S whose lower bound lies inside S.
bool interval_bound(const ZLattice& l, SubsetMask s, int lower, int upper) {
  const int eta = l[lower].nullity;
  for (int id : interval_ids(l, l[lower].set, l[upper].set)) {
    if (id == lower) continue;
    if ((s & l[id].set).size() - l[id].rank >= eta) return false;
  }
  return true;
}

bool flat_by_lattice(const ZLattice& l, SubsetMask s) {
  const int lower = join_below(l, s);
  if (!l[lower].set.subset_of(s)) return false;
  return interval_bound(l, s, lower, meet_above(l, s));
}

}  // namespace

FlatContext cyclic_bounds(const Matroid& m, const ZLattice& l, SubsetMask a) {
  FlatContext c;
  c.a = a;
  c.lower = join_below(l, a);
  c.upper = meet_above(l, a);
  c.cl_cyc = m.closure(m.cyclic_operator(a));
  c.cyc_cl = m.cyclic_operator(m.closure(a));
  c.z_interval = interval_ids(l, c.cl_cyc, c.cyc_cl);
  c.z_prime_interval = interval_ids(l, l[c.lower].set, l[c.upper].set);
  return c;
}

FlatConditions flat_conditions(const Matroid& m, const ZLattice& l, SubsetMask f) {
  FlatConditions c;
  const int lower = join_below(l, f);
  const SubsetMask lo = l[lower].set;
  if (!lo.subset_of(f)) return c;
  c.applicable = true;
  const int upper = meet_above(l, f);
  c.closure = m.is_flat(f);
  c.top_of_interval = lo == m.cyclic_operator(m.closure(f));
  c.interval_bound = interval_bound(l, f, lower, upper);

  const SubsetMask gap = f - lo;
  if (gap.size() > kMaxFlatConditionGap) return c;
  bool all_flat = true;
  bool all_bound = true;
  for_each_subset(gap, [&](SubsetMask s) {
    const SubsetMask b = lo | s;
    if (all_flat && !flat_by_lattice(l, b)) all_flat = false;
    if (all_bound) {
      const auto& bu = l[meet_above(l, b)];
      if (b.proper_subset_of(bu.set) &&
          b.size() - bu.rank >= l[join_below(l, b)].nullity) {
        all_bound = false;
      }
    }
  });
  const auto& fu = l[upper];
  if (f.proper_subset_of(fu.set) && f.size() - fu.rank >= l[lower].nullity) all_flat = false;
  c.all_between_flat = all_flat;
  c.all_between_bound = all_bound;
  return c;
}

bool is_flat_via_zlattice(const Matroid& m, const ZLattice& l, SubsetMask f) {
  const FlatConditions c = flat_conditions(m, l, f);
  if (!c.applicable) {
    if (m.is_flat(f)) {
      throw InvariantViolation("flat " + f.to_string() + " misses a cyclic flat below it");
    }
    return false;
  }
  const bool v = c.interval_bound;
  const bool agree = c.closure == v && c.top_of_interval == v &&
                     c.all_between_flat.value_or(v) == v && c.all_between_bound.value_or(v) == v;
  if (!agree) {
    throw InvariantViolation("flat conditions disagree on " + f.to_string());
  }
  return v;
}

namespace {

void require_corank2(const Matroid& m, const ZLattice& l, SubsetMask f) {
  const auto& top = l[l.top()];
  if (!f.subset_of(top.set) || !m.is_flat(f) || m.rank(f) != top.rank - 2) {
    throw PreconditionError("F = " + f.to_string() +
                            " is not a flat of rank rho(1_Z) - 2 inside 1_Z");
  }
}

}  // namespace

UpsilonFamily upsilon(const Matroid& m, const ZLattice& l, SubsetMask f) {
  require_corank2(m, l, f);
  const int target = l[l.top()].rank - 1;
  UpsilonFamily u;
  u.f = f;
  for (const auto& z : l.elements()) {
    if (z.rank + (f - z.set).size() == target) u.members.push_back(z.id);
  }
  for (int a : u.members) {
    const bool dominated = std::any_of(u.members.begin(), u.members.end(), [&](int b) {
      return l[a].set.proper_subset_of(l[b].set);
    });
    if (!dominated) {
      u.maximal.push_back(a);
      if (!l[a].set.subset_of(f)) u.counted.push_back(a);
    }
  }
  return u;
}

std::vector<int> upsilon_via_closures(const Matroid& m, const ZLattice& l, SubsetMask f) {
  require_corank2(m, l, f);
  const SubsetMask free = l[l.top()].set - f - flat_extension_set(m, f);
  std::vector<int> out;
  free.for_each([&](int e) {
    const auto id = l.find(m.cyclic_operator(m.closure(f.with(e))));
    if (!id) throw InvariantViolation("cyc of a flat is not in the lattice");
    out.push_back(*id);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_corank2_interval(const Matroid& m, const ZLattice& l, SubsetMask f) {
  const UpsilonFamily u = upsilon(m, l, f);
  int count = (l[l.top()].set - f).size();
  for (int id : u.counted) count -= (l[id].set - f).size() - 1;
  return count;
}

std::vector<SubsetMask> corank2_flats(const Matroid& m, const ZLattice& l) {
  const auto& top = l[l.top()];
  std::vector<SubsetMask> out;
  if (top.rank < 2) return out;
  for (SubsetMask f : enumerate_flats(m, top.set, top.rank - 2)) {
    if (m.rank(f) == top.rank - 2) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Rank2MinorBound max_rank2_uniform_minor(const Matroid& m, const ZLattice& l) {
  Rank2MinorBound b;
  if (l[l.top()].rank < 2) {
    b.status = BoundStatus::RankTooSmall;
    return b;
  }
  for (SubsetMask f : corank2_flats(m, l)) {
    const int c = count_corank2_interval(m, l, f);
    if (c > b.n_max) {
      b.n_max = c;
      b.witness = f;
    }
  }
  return b;
}

Rank2MinorBound max_corank2_uniform_minor(const Matroid& m) {
  const Matroid d = dual(m);
  return max_rank2_uniform_minor(d, build_zlattice(d));
}

namespace {

struct CyclicSetTest {
  bool ok = true;
  SubsetMask u;
  int value = 0;
};

// Dual form: cyclic sets U containing 0_Z with eta(U) = |0_Z| + 2.
CyclicSetTest cyclic_set_test(const Matroid& m, const ZLattice& l) {
  CyclicSetTest out;
  const SubsetMask b0 = l[l.bottom()].set;
  const Matroid d = dual(m);
  const SubsetMask dual_top = m.ground() - b0;
  const int target = d.rank(dual_top) - 2;
  if (target < 0) return out;
  std::vector<SubsetMask> us;
  for (SubsetMask fs : enumerate_flats(d, dual_top, target)) {
    if (d.rank(fs) == target) us.push_back(m.ground() - fs);
  }
  std::sort(us.begin(), us.end(), lex_less);
  for (SubsetMask u : us) {
    if (m.nullity(u) != b0.size() + 2 || !m.is_cyclic(u)) {
      throw InvariantViolation("dual corank-2 flat does not give a cyclic set of nullity |0_Z|+2");
    }
    std::vector<int> fam;
    for (const auto& x : l.elements()) {
      if ((x.set & u).size() == b0.size() + 1 + x.rank) fam.push_back(x.id);
    }
    int value = (u - b0).size();
    for (int a : fam) {
      const bool dominated = std::any_of(fam.begin(), fam.end(), [&](int b) {
        return l[b].set.proper_subset_of(l[a].set);
      });
      if (!dominated && !u.subset_of(l[a].set)) value -= (u - l[a].set).size() - 1;
    }
    if (value >= 4) {
      out.ok = false;
      out.u = u;
      out.value = value;
      return out;
    }
  }
  return out;
}

}  // namespace

BinarityVerdict is_binary_via_zlattice(const Matroid& m, const ZLattice& l) {
  BinarityVerdict v;
  if (l[l.top()].rank < 2) {
    v.vacuous = true;
    return v;
  }
  for (SubsetMask f : corank2_flats(m, l)) {
    const int c = count_corank2_interval(m, l, f);
    if (c >= 4) {
      v.binary = false;
      v.witness_flat = f;
      v.witness_value = c;
      break;
    }
  }
  const CyclicSetTest dual_test = cyclic_set_test(m, l);
  if (dual_test.ok != v.binary) {
    throw InvariantViolation("flat test and cyclic-set test disagree on binarity");
  }
  if (!dual_test.ok) v.witness_cyclic = dual_test.u;
  return v;
}

std::optional<MinorSpec> find_u4_2_minor(const Matroid& m) {
  if (m.size() > kMaxU42Search) {
    throw GuardExceeded("U_4^2 search is limited to " + std::to_string(kMaxU42Search) +
                        " elements");
  }
  const int k = m.rank();
  if (k < 2) return std::nullopt;
  for (SubsetMask a : enumerate_flats(m, m.ground(), k - 2)) {
    if (m.rank(a) != k - 2) continue;
    // One representative from each line through A.
    SubsetMask reps;
    SubsetMask seen = a;
    (m.ground() - a).for_each([&](int e) {
      if (seen.contains(e) || reps.size() == 4) return;
      reps = reps.with(e);
      seen |= m.closure(a.with(e));
    });
    if (reps.size() == 4) return MinorSpec{a, a | reps};
  }
  return std::nullopt;
}

}  // namespace cycflat
