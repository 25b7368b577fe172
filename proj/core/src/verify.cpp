#include "cycflat/verify.hpp"

#include <algorithm>

#include "cycflat/binary.hpp"
#include "cycflat/error.hpp"
#include "cycflat/flats.hpp"
#include "cycflat/minors.hpp"

namespace cycflat {

std::vector<SubsetMask> brute_force_cyclic_flats(const Matroid& m) {
  if (m.size() > kMaxBruteForce) throw GuardExceeded("brute force is limited to 16 elements");
  std::vector<SubsetMask> out;
  for_each_subset(m.ground(), [&](SubsetMask x) {
    if (m.is_cyclic_flat(x)) out.push_back(x);
  });
  return out;
}

int brute_force_flats_between(const Matroid& m, SubsetMask f, SubsetMask t) {
  int count = 0;
  for_each_subset(t - f, [&](SubsetMask s) {
    const SubsetMask g = f | s;
    if (g != f && g != t && m.is_flat(g)) ++count;
  });
  return count;
}

namespace {

VerifyItem skipped(std::string name, std::string why) {
  VerifyItem v;
  v.name = std::move(name);
  v.skipped = true;
  v.detail = std::move(why);
  return v;
}

VerifyItem item(std::string name, bool ok, std::string detail = {}) {
  VerifyItem v;
  v.name = std::move(name);
  v.passed = ok;
  v.detail = std::move(detail);
  return v;
}

int distance_by_subsets(const Matroid& m) {
  const int k = m.rank();
  int best = m.size() + 1;
  for_each_subset(m.ground(), [&](SubsetMask x) {
    if (x.size() < best && m.rank(m.ground() - x) < k) best = x.size();
  });
  return best;
}

template <typename F>
VerifyItem guarded(std::string name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return item(std::move(name), false, e.what());
  }
}

}  // namespace

std::vector<VerifyItem> verify_analysis(const Matroid& m, const ZLattice& l) {
  std::vector<VerifyItem> out;
  const int n = m.size();
  if (n > kMaxBruteForce) {
    out.push_back(skipped("brute-force", "more than 16 elements"));
    return out;
  }

  out.push_back(guarded("cyclic-flats", [&] {
    auto brute = brute_force_cyclic_flats(m);
    std::vector<SubsetMask> mine;
    for (const auto& z : l.elements()) mine.push_back(z.set);
    std::sort(brute.begin(), brute.end());
    std::sort(mine.begin(), mine.end());
    return item("cyclic-flats", brute == mine,
                std::to_string(mine.size()) + " lattice elements, " +
                    std::to_string(brute.size()) + " by subsets");
  }));

  out.push_back(guarded("rank-reconstruction", [&] {
    const auto pres = l.presentation();
    bool ok = true;
    std::string bad;
    for_each_subset(m.ground(), [&](SubsetMask x) {
      if (ok && rank_from_cyclic_flats(pres, x) != m.rank(x)) {
        ok = false;
        bad = x.to_string();
      }
    });
    return item("rank-reconstruction", ok, bad);
  }));

  out.push_back(guarded("join-meet", [&] {
    for (const auto& a : l.elements()) {
      for (const auto& b : l.elements()) {
        if (l[z_join(l, a.id, b.id)].set != m.closure(a.set | b.set) ||
            l[z_meet(l, a.id, b.id)].set != m.cyclic_operator(a.set & b.set)) {
          return item("join-meet", false, a.set.to_string() + ", " + b.set.to_string());
        }
      }
    }
    return item("join-meet", true);
  }));

  if (m.rank() > 0 && is_nondegenerate(m)) {
    out.push_back(guarded("minimum-distance", [&] {
      const int a = min_distance_via_cyclic_flats(m, l);
      const int b = distance_by_subsets(m);
      return item("minimum-distance", a == b,
                  "lattice " + std::to_string(a) + ", subsets " + std::to_string(b));
    }));
  }

  out.push_back(guarded("edge-minors", [&] {
    for (const auto& e : l.edges()) uniform_minor_from_edge(m, l, e.child, e.parent);
    return item("edge-minors", true);
  }));

  out.push_back(guarded("flat-conditions", [&] {
    if (n > 12) return skipped("flat-conditions", "more than 12 elements");
    bool ok = true;
    std::string bad;
    for_each_subset(m.ground(), [&](SubsetMask f) {
      if (ok && is_flat_via_zlattice(m, l, f) != m.is_flat(f)) {
        ok = false;
        bad = f.to_string();
      }
    });
    return item("flat-conditions", ok, bad);
  }));

  out.push_back(guarded("corank2-intervals", [&] {
    const SubsetMask top = l[l.top()].set;
    for (SubsetMask f : corank2_flats(m, l)) {
      const int a = count_corank2_interval(m, l, f);
      const int b = brute_force_flats_between(m, f, top);
      if (a != b) {
        return item("corank2-intervals", false,
                    f.to_string() + ": " + std::to_string(a) + " vs " + std::to_string(b));
      }
    }
    return item("corank2-intervals", true);
  }));

  bool binary = false;
  out.push_back(guarded("binarity", [&] {
    if (n > kMaxU42Search) return skipped("binarity", "more than 14 elements");
    const auto v = is_binary_via_zlattice(m, l);
    const auto u42 = find_u4_2_minor(m);
    binary = v.binary;
    return item("binarity", v.binary == !u42.has_value(),
                std::string("lattice says ") + (v.binary ? "binary" : "non-binary"));
  }));

  if (!binary) return out;

  out.push_back(guarded("relations", [&] {
    for (const auto& c : check_rankdiff2_relations(l)) {
      if (!c.holds) {
        return item("relations", false, "rank-2 interval " + l[c.z1].set.to_string() + " < " +
                                            l[c.z2].set.to_string());
      }
    }
    for (const auto& c : check_null2_relations(l)) {
      if (!c.holds) {
        return item("relations", false, "nullity-2 interval " + l[c.z1].set.to_string() +
                                            " < " + l[c.z2].set.to_string());
      }
    }
    return item("relations", true);
  }));

  if (is_simple(m) && isthmuses(m).empty()) {
    out.push_back(item("atomic", is_atomic(l) && is_atomic_by_union(l)));
  }
  if (m.rank() > 0 && is_nondegenerate(m)) {
    out.push_back(guarded("blunt-checks", [&] {
      for (const auto& c : blunt_flags(m, l).checks) {
        if (c.applicable && !c.holds) return item("blunt-checks", false, c.name + ": " + c.detail);
      }
      return item("blunt-checks", true);
    }));
    if (min_distance_via_cyclic_flats(m, l) >= 3) {
      out.push_back(item("coatomic", is_coatomic(l)));
    }
  }
  if (m.rank() >= 1) {
    out.push_back(guarded("griesmer-chain", [&] {
      const auto chain = griesmer_chain(m);
      const auto g = griesmer_check(chain[0].n, chain[0].k, chain[0].d);
      return item("griesmer-chain", g.slack >= 0, "slack " + std::to_string(g.slack));
    }));
  }
  return out;
}

}  // namespace cycflat
