#include "cycflat/zlattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "cycflat/error.hpp"

namespace cycflat {

std::string EdgeLabel::to_string() const {
  switch (kind) {
    case EdgeKind::Elementary:
      return "elementary";
    case EdgeKind::Rank:
      return "rank:" + std::to_string(d_rho);
    case EdgeKind::Nullity:
      return "nullity:" + std::to_string(d_eta);
    case EdgeKind::Mixed:
      return "mixed:" + std::to_string(d_rho) + "," + std::to_string(d_eta);
  }
  return {};
}

EdgeLabel classify_jump(int d_rho, int d_eta) {
  EdgeLabel l;
  l.d_rho = d_rho;
  l.d_eta = d_eta;
  if (d_rho == 1 && d_eta == 1) {
    l.kind = EdgeKind::Elementary;
  } else if (d_eta == 1) {
    l.kind = EdgeKind::Rank;
  } else if (d_rho == 1) {
    l.kind = EdgeKind::Nullity;
  } else {
    l.kind = EdgeKind::Mixed;
  }
  return l;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool get_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }

}  // namespace

ZLattice ZLattice::from_family(int n, std::vector<RankedSet> family) {
  if (family.empty()) throw PreconditionError("empty cyclic-flat family");
  std::sort(family.begin(), family.end(), [](const RankedSet& a, const RankedSet& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return lex_less(a.set, b.set);
  });
  ZLattice l;
  l.n_ = n;
  const int m = static_cast<int>(family.size());
  for (int i = 0; i < m; ++i) {
    l.elems_.push_back({i, family[i].set, family[i].rank, family[i].set.size() - family[i].rank});
  }
  // below[j] = elements strictly inside element j. Proper inclusion implies a
  // strictly smaller rank, hence a smaller id.
  const int words = (m + 63) / 64;
  std::vector<Bits> below(m, Bits(words, 0));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      if (l.elems_[i].set.proper_subset_of(l.elems_[j].set)) set_bit(below[j], i);
    }
  }
  l.down_.assign(m, {});
  l.up_.assign(m, {});
  for (int j = 0; j < m; ++j) {
    // i is a cover child of j when nothing in below[j] lies strictly above i.
    Bits covered(words, 0);
    for (int i = j - 1; i >= 0; --i) {
      if (!get_bit(below[j], i) || get_bit(covered, i)) continue;
      l.down_[j].push_back(i);
      for (int w = 0; w < words; ++w) covered[w] |= below[i][w];
    }
    std::sort(l.down_[j].begin(), l.down_[j].end());
    for (int i : l.down_[j]) {
      l.up_[i].push_back(j);
      const auto& c = l.elems_[i];
      const auto& p = l.elems_[j];
      l.edges_.push_back({i, j, classify_jump(p.rank - c.rank, p.nullity - c.nullity)});
    }
  }
  for (auto& u : l.up_) std::sort(u.begin(), u.end());
  std::sort(l.edges_.begin(), l.edges_.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return a.child != b.child ? a.child < b.child : a.parent < b.parent;
  });
  l.bottom_ = 0;
  l.top_ = m - 1;
  std::vector<int> h(m, 1);
  for (int j = 0; j < m; ++j) {
    for (int i : l.down_[j]) h[j] = std::max(h[j], h[i] + 1);
  }
  l.height_ = *std::max_element(h.begin(), h.end());
  for (int j = 0; j < m; ++j) {
    if (!l.elems_[0].set.subset_of(l.elems_[j].set) ||
        !l.elems_[j].set.subset_of(l.elems_[m - 1].set)) {
      throw PreconditionError("cyclic-flat family has no bottom or no top");
    }
  }
  return l;
}

std::optional<int> ZLattice::find(SubsetMask s) const {
  for (const auto& e : elems_) {
    if (e.set == s) return e.id;
  }
  return std::nullopt;
}

bool ZLattice::is_cover(int child, int parent) const {
  const auto& d = down_[parent];
  return std::binary_search(d.begin(), d.end(), child);
}

std::vector<RankedSet> ZLattice::presentation() const {
  std::vector<RankedSet> out;
  for (const auto& e : elems_) out.push_back({e.set, e.rank});
  return out;
}

std::vector<SubsetMask> enumerate_flats(const Matroid& m, SubsetMask within, int max_rank) {
  std::vector<SubsetMask> out;
  std::unordered_set<SubsetMask> seen;
  std::deque<std::pair<SubsetMask, int>> queue;
  const SubsetMask start = m.closure(SubsetMask());
  if (!start.subset_of(within) || m.rank(start) > max_rank) return out;
  seen.insert(start);
  queue.push_back({start, 0});
  while (!queue.empty()) {
    const auto [f, r] = queue.front();
    queue.pop_front();
    out.push_back(f);
    if (r >= max_rank) continue;
    SubsetMask reached = f;
    (within - f).for_each([&](int e) {
      if (reached.contains(e)) return;
      const SubsetMask g = m.closure(f.with(e));
      reached |= g;
      if (seen.insert(g).second) {
        if (seen.size() > kMaxVisitedFlats) {
          throw GuardExceeded("flat enumeration visited more than " +
                              std::to_string(kMaxVisitedFlats) + " flats");
        }
        queue.push_back({g, r + 1});
      }
    });
  }
  return out;
}

ZLattice build_zlattice(const Matroid& m) {
  std::vector<RankedSet> family;
  for (SubsetMask f : enumerate_flats(m, m.ground(), m.rank())) {
    if (m.is_cyclic(f)) family.push_back({f, m.rank(f)});
  }
  return ZLattice::from_family(m.size(), std::move(family));
}

int z_join(const ZLattice& l, int a, int b) {
  const SubsetMask u = l[a].set | l[b].set;
  // Elements are rank-sorted and proper inclusion raises rank, so the first
  // upper bound is the least one.
  for (const auto& e : l.elements()) {
    if (u.subset_of(e.set)) return e.id;
  }
  throw InvariantViolation("no upper bound in lattice");
}

int z_meet(const ZLattice& l, int a, int b) {
  const SubsetMask u = l[a].set & l[b].set;
  for (int i = l.size() - 1; i >= 0; --i) {
    if (l[i].set.subset_of(u)) return i;
  }
  throw InvariantViolation("no lower bound in lattice");
}

int z_join_all(const ZLattice& l, const std::vector<int>& ids) {
  int acc = l.bottom();
  for (int i : ids) acc = z_join(l, acc, i);
  return acc;
}

int z_meet_all(const ZLattice& l, const std::vector<int>& ids) {
  int acc = l.top();
  for (int i : ids) acc = z_meet(l, acc, i);
  return acc;
}

std::vector<CoverEdge> classify_edges(const ZLattice& l) { return l.edges(); }

std::vector<int> atoms(const ZLattice& l) {
  std::vector<int> out = l.upper_covers(l.bottom());
  return out;
}

std::vector<int> coatoms(const ZLattice& l) {
  std::vector<int> out = l.lower_covers(l.top());
  return out;
}

namespace {

std::vector<int> atoms_below(const ZLattice& l, int id) {
  std::vector<int> out;
  for (int a : atoms(l)) {
    if (l[a].set.subset_of(l[id].set)) out.push_back(a);
  }
  return out;
}

}  // namespace

bool is_atomic(const ZLattice& l) {
  for (const auto& e : l.elements()) {
    if (z_join_all(l, atoms_below(l, e.id)) != e.id) return false;
  }
  return true;
}

bool is_atomic_by_union(const ZLattice& l) {
  for (const auto& e : l.elements()) {
    SubsetMask u = l[l.bottom()].set;
    for (int a : atoms_below(l, e.id)) u |= l[a].set;
    if (u != e.set) return false;
  }
  return true;
}

bool is_coatomic(const ZLattice& l) {
  const auto co = coatoms(l);
  for (const auto& e : l.elements()) {
    std::vector<int> above;
    for (int c : co) {
      if (e.set.subset_of(l[c].set)) above.push_back(c);
    }
    if (z_meet_all(l, above) != e.id) return false;
  }
  return true;
}

namespace {

// Least upper bound / greatest lower bound in an arbitrary family, or -1.
int family_lub(const std::vector<RankedSet>& f, SubsetMask u) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (!u.subset_of(f[i].set)) continue;
    if (best < 0 || f[i].set.subset_of(f[best].set)) best = i;
  }
  if (best < 0) return -1;
  for (const auto& z : f) {
    if (u.subset_of(z.set) && !f[best].set.subset_of(z.set)) return -1;
  }
  return best;
}

int family_glb(const std::vector<RankedSet>& f, SubsetMask u) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (!f[i].set.subset_of(u)) continue;
    if (best < 0 || f[best].set.subset_of(f[i].set)) best = i;
  }
  if (best < 0) return -1;
  for (const auto& z : f) {
    if (z.set.subset_of(u) && !z.set.subset_of(f[best].set)) return -1;
  }
  return best;
}

AxiomReport fail(const char* axiom, SubsetMask x, std::optional<SubsetMask> y, std::string d) {
  AxiomReport r;
  r.ok = false;
  r.axiom = axiom;
  r.x = x;
  r.y = y;
  r.detail = std::move(d);
  return r;
}

}  // namespace

AxiomReport verify_z_axioms(int n, const std::vector<RankedSet>& family) {
  const SubsetMask ground = SubsetMask::full(n);
  std::unordered_set<SubsetMask> seen;
  for (const auto& z : family) {
    if (!z.set.subset_of(ground)) {
      throw PreconditionError("set " + z.set.to_string() + " is not inside the ground set");
    }
    if (!seen.insert(z.set).second) {
      throw PreconditionError("duplicate set " + z.set.to_string());
    }
  }
  if (family.empty()) {
    AxiomReport r;
    r.ok = false;
    r.axiom = "Z0";
    r.detail = "empty family";
    return r;
  }
  const int m = static_cast<int>(family.size());
  std::vector<int> join(m * m), meet(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const int jo = family_lub(family, family[i].set | family[j].set);
      const int me = family_glb(family, family[i].set & family[j].set);
      if (jo < 0) return fail("Z0", family[i].set, family[j].set, "no join");
      if (me < 0) return fail("Z0", family[i].set, family[j].set, "no meet");
      join[i * m + j] = join[j * m + i] = jo;
      meet[i * m + j] = meet[j * m + i] = me;
    }
  }
  int bottom = 0;
  for (int i = 1; i < m; ++i) bottom = meet[bottom * m + i];
  if (family[bottom].rank != 0) {
    return fail("Z1", family[bottom].set, std::nullopt,
                "bottom has rank " + std::to_string(family[bottom].rank));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const auto& x = family[i];
      const auto& y = family[j];
      if (!x.set.proper_subset_of(y.set)) continue;
      const int dr = y.rank - x.rank;
      if (dr <= 0 || dr >= y.set.size() - x.set.size()) {
        return fail("Z2", x.set, y.set,
                    "rank difference " + std::to_string(dr) + " with size difference " +
                        std::to_string(y.set.size() - x.set.size()));
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& x = family[i];
      const auto& y = family[j];
      const auto& jo = family[join[i * m + j]];
      const auto& me = family[meet[i * m + j]];
      const int lhs = x.rank + y.rank;
      const int rhs = jo.rank + me.rank + ((x.set & y.set) - me.set).size();
      if (lhs < rhs) {
        return fail("Z3", x.set, y.set,
                    std::to_string(lhs) + " < " + std::to_string(rhs));
      }
    }
  }
  return {};
}

int rank_from_cyclic_flats(const std::vector<RankedSet>& family, SubsetMask x) {
  int best = x.size();
  for (const auto& z : family) best = std::min(best, z.rank + (x - z.set).size());
  return best;
}

Matroid matroid_from_cyclic_flats(int n, std::vector<RankedSet> family) {
  const AxiomReport r = verify_z_axioms(n, family);
  if (!r.ok) {
    std::string msg = "axiom " + r.axiom + " fails";
    if (r.x) msg += " at " + r.x->to_string();
    if (r.y) msg += ", " + r.y->to_string();
    throw PreconditionError(msg + ": " + r.detail);
  }
  return Matroid::from_cyclic_flats(n, std::move(family));
}

int min_distance_via_cyclic_flats(const Matroid& m, const ZLattice& l) {
  if (!is_nondegenerate(m)) throw PreconditionError("matroid has loops or isthmuses");
  if (m.rank() == 0) throw PreconditionError("minimum distance is undefined for rank 0");
  int best = 0;
  for (const auto& z : l.elements()) {
    if (z.id != l.top()) best = std::max(best, z.nullity);
  }
  return m.nullity() + 1 - best;
}

}  // namespace cycflat
