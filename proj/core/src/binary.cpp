#include "cycflat/binary.hpp"

#include <algorithm>

#include "cycflat/error.hpp"
#include "cycflat/flats.hpp"

namespace cycflat {

const char* to_string(RelationCase c) {
  switch (c) {
    case RelationCase::None:
      return "none";
    case RelationCase::One:
      return "one";
    case RelationCase::TwoCovering:
      return "two-covering";
    case RelationCase::TwoProper:
      return "two-proper";
    case RelationCase::Three:
      return "three";
    case RelationCase::TooMany:
      return "too-many";
  }
  return "";
}

const char* to_string(Height3Kind k) {
  switch (k) {
    case Height3Kind::Eta2:
      return "eta2";
    case Height3Kind::Iso633:
      return "iso-(6,3,3)";
    case Height3Kind::Iso734:
      return "iso-(7,3,4)";
    case Height3Kind::Iso743:
      return "iso-(7,4,3)";
    case Height3Kind::Iso844:
      return "iso-(8,4,4)";
  }
  return "";
}

const char* to_string(ResidualCase c) {
  switch (c) {
    case ResidualCase::CoatomD3:
      return "coatom-d3";
    case ResidualCase::CoatomD2:
      return "coatom-d2";
    case ResidualCase::Augmented:
      return "augmented";
    case ResidualCase::Hyperplane:
      return "hyperplane";
  }
  return "";
}

namespace {

std::vector<int> strictly_between(const ZLattice& l, int lo, int hi) {
  std::vector<int> out;
  for (const auto& z : l.elements()) {
    if (l[lo].set.proper_subset_of(z.set) && z.set.proper_subset_of(l[hi].set)) {
      out.push_back(z.id);
    }
  }
  return out;
}

RelationCheck rankdiff2_check(const ZLattice& l, int z1, int z2) {
  RelationCheck c;
  c.z1 = z1;
  c.z2 = z2;
  c.between = strictly_between(l, z1, z2);
  const int e1 = l[z1].nullity;
  int sum = 0;
  SubsetMask uni;
  for (int id : c.between) {
    sum += l[id].nullity;
    uni |= l[id].set;
  }
  c.lhs = l[z2].nullity;
  switch (c.between.size()) {
    case 0:
      c.rcase = RelationCase::None;
      c.rhs = e1 + 1;
      break;
    case 1:
      c.rcase = RelationCase::One;
      c.rhs = sum + 1;
      break;
    case 2:
      if (uni == l[z2].set) {
        c.rcase = RelationCase::TwoCovering;
        c.rhs = sum - e1;
      } else {
        c.rcase = RelationCase::TwoProper;
        c.rhs = 1 + sum - e1;
      }
      break;
    case 3:
      c.rcase = RelationCase::Three;
      c.rhs = 1 + sum - 2 * e1;
      break;
    default:
      c.rcase = RelationCase::TooMany;
      c.rhs = -1;
  }
  c.holds = c.rcase != RelationCase::TooMany && c.lhs == c.rhs;
  return c;
}

RelationCheck null2_check(const ZLattice& l, int z1, int z2) {
  RelationCheck c;
  c.z1 = z1;
  c.z2 = z2;
  c.between = strictly_between(l, z1, z2);
  const int r1 = l[z1].rank;
  const int r2 = l[z2].rank;
  int sum = 0;
  SubsetMask inter = l[z2].set;
  for (int id : c.between) {
    sum += l[id].rank;
    inter &= l[id].set;
  }
  switch (c.between.size()) {
    case 0:
      c.rcase = RelationCase::None;
      c.lhs = r2;
      c.rhs = r1 + 1;
      break;
    case 1:
      c.rcase = RelationCase::One;
      c.lhs = sum;
      c.rhs = r1 + 1;
      break;
    case 2:
      c.lhs = sum;
      if (inter == l[z1].set) {
        c.rcase = RelationCase::TwoCovering;
        c.rhs = r1 + r2;
      } else {
        c.rcase = RelationCase::TwoProper;
        c.rhs = 1 + r1 + r2;
      }
      break;
    case 3:
      c.rcase = RelationCase::Three;
      c.lhs = sum;
      c.rhs = 1 + r1 + 2 * r2;
      break;
    default:
      c.rcase = RelationCase::TooMany;
      c.lhs = sum;
      c.rhs = -1;
  }
  c.holds = c.rcase != RelationCase::TooMany && c.lhs == c.rhs;
  return c;
}

// Lexicographically least coatom of maximal nullity.
int pick_zd(const ZLattice& l) {
  int best = -1;
  for (int c : coatoms(l)) {
    if (best < 0 || l[c].nullity > l[best].nullity ||
        (l[c].nullity == l[best].nullity && lex_less(l[c].set, l[best].set))) {
      best = c;
    }
  }
  if (best < 0) throw PreconditionError("lattice has no coatoms");
  return best;
}

void require_nondegenerate(const Matroid& m) {
  if (!is_nondegenerate(m)) throw PreconditionError("matroid has loops or isthmuses");
  if (m.rank() == 0) throw PreconditionError("matroid has rank 0");
}

}  // namespace

RelationCheck check_rank2_relations(const Matroid& m) {
  require_nondegenerate(m);
  if (m.rank() != 2) throw PreconditionError("matroid must have rank 2");
  const ZLattice l = build_zlattice(m);
  return rankdiff2_check(l, l.bottom(), l.top());
}

std::vector<RelationCheck> check_rankdiff2_relations(const ZLattice& l) {
  std::vector<RelationCheck> out;
  for (const auto& a : l.elements()) {
    for (const auto& b : l.elements()) {
      if (a.set.proper_subset_of(b.set) && b.rank - a.rank == 2) {
        out.push_back(rankdiff2_check(l, a.id, b.id));
      }
    }
  }
  return out;
}

std::vector<RelationCheck> check_null2_relations(const ZLattice& l) {
  std::vector<RelationCheck> out;
  for (const auto& a : l.elements()) {
    for (const auto& b : l.elements()) {
      if (a.set.proper_subset_of(b.set) && b.nullity - a.nullity == 2) {
        out.push_back(null2_check(l, a.id, b.id));
      }
    }
  }
  return out;
}

BinaryMatrix reference_matrix(Height3Kind kind) {
  switch (kind) {
    case Height3Kind::Iso633:
      return parse_matrix_text("1 0 0 1 1 1\n0 1 0 1 0 1\n0 0 1 0 1 1\n");
    case Height3Kind::Iso734:
      return parse_matrix_text("1 0 1 0 1 0 1\n0 1 1 0 0 1 1\n0 0 0 1 1 1 1\n");
    case Height3Kind::Iso743:
      return parse_matrix_text(
          "1 0 0 0 0 1 1\n0 1 0 0 1 0 1\n0 0 1 0 1 1 0\n0 0 0 1 1 1 1\n");
    case Height3Kind::Iso844:
      return parse_matrix_text(
          "1 0 0 0 1 0 1 1\n0 1 0 0 1 1 0 1\n0 0 1 0 1 1 1 0\n0 0 0 1 0 1 1 1\n");
    case Height3Kind::Eta2:
      break;
  }
  throw PreconditionError("no reference matrix for the nullity-2 class");
}

Height3Class classify_height3(const Matroid& m) {
  if (!is_simple(m)) throw PreconditionError("matroid is not simple");
  if (!isthmuses(m).empty()) throw PreconditionError("matroid has isthmuses");
  const ZLattice l = build_zlattice(m);
  if (l.height() != 3) {
    throw PreconditionError("lattice has height " + std::to_string(l.height()) + ", not 3");
  }
  if (!is_binary_via_zlattice(m, l).binary) throw PreconditionError("matroid is not binary");
  Height3Class c;
  c.n = m.size();
  c.k = m.rank();
  c.d = min_distance_via_cyclic_flats(m, l);
  c.atom_count = static_cast<int>(atoms(l).size());
  c.nullity = m.nullity();
  if (c.nullity == 2) {
    c.kind = Height3Kind::Eta2;
    return c;
  }
  for (Height3Kind kind :
       {Height3Kind::Iso633, Height3Kind::Iso734, Height3Kind::Iso743, Height3Kind::Iso844}) {
    const Matroid ref = Matroid::from_matrix(reference_matrix(kind));
    if (ref.size() != c.n || ref.rank() != c.k) continue;
    if (auto w = is_isomorphic(m, ref)) {
      c.kind = kind;
      c.witness = std::move(w);
      return c;
    }
  }
  throw InvariantViolation("height-3 matroid (" + std::to_string(c.n) + "," +
                           std::to_string(c.k) + "," + std::to_string(c.d) +
                           ") with nullity " + std::to_string(c.nullity) +
                           " matches no known class");
}

BluntAnalysis blunt_flags(const Matroid& m, const ZLattice& l) {
  BluntAnalysis a;
  for (const auto& z : l.elements()) {
    BluntFlag f;
    f.id = z.id;
    for (int c : l.lower_covers(z.id)) {
      if (z.rank - l[c].rank > 1) {
        f.blunt = false;
        f.witness_child = c;
        break;
      }
    }
    a.flags.push_back(f);
  }
  if (!is_nondegenerate(m) || m.rank() == 0) return a;
  a.d = min_distance_via_cyclic_flats(m, l);
  const int zd = pick_zd(l);
  a.zd = zd;

  PropertyCheck edges{"coatom-edges-are-nullity-edges", a.d >= 3, true, ""};
  if (edges.applicable) {
    for (int c : coatoms(l)) {
      const EdgeLabel lab = classify_jump(l[l.top()].rank - l[c].rank,
                                          l[l.top()].nullity - l[c].nullity);
      if (lab.kind != EdgeKind::Nullity) {
        edges.holds = false;
        edges.detail = l[c].set.to_string() + " -> top is " + lab.to_string();
        break;
      }
    }
  }
  a.checks.push_back(edges);

  PropertyCheck zd_check{"non-blunt-zd-implies-d-at-most-4", !a.flags[zd].blunt, true, ""};
  if (zd_check.applicable) {
    zd_check.holds = a.d <= 4;
    zd_check.detail = "d = " + std::to_string(a.d);
  }
  a.checks.push_back(zd_check);

  PropertyCheck bound{"non-blunt-coatom-distance-bound", false, true, ""};
  if (a.d >= 3) {
    for (int c : coatoms(l)) {
      if (l[c].set.size() >= l[zd].set.size() || a.flags[c].blunt) continue;
      bound.applicable = true;
      const int limit = 2 * (l[zd].nullity - l[c].nullity + 1);
      if (a.d > limit) {
        bound.holds = false;
        bound.detail = l[c].set.to_string() + ": d = " + std::to_string(a.d) + " > " +
                       std::to_string(limit);
      }
    }
  }
  a.checks.push_back(bound);
  return a;
}

DmzcReport dMZc_relation_check(const Matroid& m, const ZLattice& l) {
  require_nondegenerate(m);
  DmzcReport r;
  r.d = min_distance_via_cyclic_flats(m, l);
  if (r.d < 3) throw PreconditionError("minimum distance is below 3");
  r.zd = pick_zd(l);
  const int k = m.rank();
  const int eta_d = l[r.zd].nullity;
  const auto co = coatoms(l);
  const auto flags = blunt_flags(m, l).flags;

  for (int c : co) {
    if (l[c].rank != k - 1 || !flags[c].blunt) continue;
    const auto below = strictly_between(l, l.bottom(), c);
    if (below.empty()) {
      DmzcCheck chk;
      chk.coatom = c;
      r.checks.push_back(chk);
      continue;
    }
    int max_eta = 0;
    for (int z : below) max_eta = std::max(max_eta, l[z].nullity);
    max_eta = std::max(max_eta, l[l.bottom()].nullity);
    const int d_c = l[c].nullity + 1 - max_eta;
    std::vector<int> cands = below;
    cands.push_back(l.bottom());
    for (int z1 : cands) {
      if (l[z1].nullity != max_eta) continue;
      DmzcCheck chk;
      chk.coatom = c;
      chk.applicable = true;
      chk.z1 = z1;
      chk.d_c = d_c;
      for (int u : co) {
        if (l[z1].set.subset_of(l[u].set)) chk.upsilon.push_back(u);
      }
      std::vector<int> others;
      for (int u : chk.upsilon) {
        if (u != c) others.push_back(u);
      }
      const int eta_c = l[c].nullity;
      if (l[z1].rank != k - 2) {
        chk.rcase = RelationCase::TooMany;
      } else if (chk.upsilon.size() == 3) {
        chk.rcase = RelationCase::Three;
        chk.lhs = 2 * d_c;
        chk.rhs = r.d + eta_d + eta_c - (l[others[0]].nullity + l[others[1]].nullity);
        chk.holds = chk.lhs == chk.rhs;
      } else if (chk.upsilon.size() == 2) {
        const int z_other = others[0];
        chk.lhs = d_c;
        if ((l[c].set | l[z_other].set) == m.ground()) {
          chk.rcase = RelationCase::TwoCovering;
          chk.rhs = r.d + eta_d - l[z_other].nullity;
        } else {
          chk.rcase = RelationCase::TwoProper;
          chk.rhs = r.d - 1 + eta_d - l[z_other].nullity;
        }
        chk.holds = chk.lhs == chk.rhs;
      } else {
        chk.rcase = chk.upsilon.size() < 2 ? RelationCase::One : RelationCase::TooMany;
      }
      chk.lower_bound_holds = 2 * d_c >= r.d - (eta_d - eta_c);
      r.checks.push_back(chk);
    }
  }

  for (const auto& z : l.elements()) {
    if (z.rank != k - 2) continue;
    int count = 0;
    for (int c : co) count += z.set.subset_of(l[c].set) ? 1 : 0;
    r.upsilon2.push_back({"coatoms-above " + z.set.to_string(), true, count >= 2,
                          std::to_string(count) + " coatoms"});
  }
  return r;
}

ResidualResult residual_set(const Matroid& m) { return residual_set(m, build_zlattice(m)); }

ResidualResult residual_set(const Matroid& m, const ZLattice& l) {
  const int k = m.rank();
  if (k < 2) throw PreconditionError("residual sets need rank at least 2");
  const int n = m.size();
  const int d = minimum_distance(m);
  const SubsetMask e = m.ground();
  const auto& top = l[l.top()];

  ResidualResult r;
  if (top.set != e) {
    r.set = e.without((e - top.set).min());
    r.rcase = ResidualCase::Hyperplane;
  } else {
    int max_eta = -1;
    for (const auto& z : l.elements()) {
      if (z.id != l.top()) max_eta = std::max(max_eta, z.nullity);
    }
    std::optional<int> pick;
    for (const auto& z : l.elements()) {
      if (z.id == l.top() || z.nullity != max_eta || z.rank != k - 1) continue;
      if (!pick || lex_less(z.set, l[*pick].set)) pick = z.id;
    }
    if (pick) {
      r.set = l[*pick].set;
      r.rcase = d >= 3 ? ResidualCase::CoatomD3 : ResidualCase::CoatomD2;
    } else if (d >= 3) {
      throw InvariantViolation("no maximal-nullity cyclic flat of rank k-1 with d >= 3");
    } else {
      std::optional<int> z;
      for (int c : coatoms(l)) {
        if (l[c].nullity != top.nullity - 1) continue;
        if (!z || lex_less(l[c].set, l[*z].set)) z = c;
      }
      if (!z) throw InvariantViolation("no coatom of nullity eta(E) - 1");
      const int need = k - l[*z].rank - 1;
      SubsetMask b;
      (e - l[*z].set).for_each([&](int x) {
        if (b.size() < need) b = b.with(x);
      });
      r.set = l[*z].set | b;
      r.rcase = ResidualCase::Augmented;
    }
  }
  r.n = r.set.size();
  r.k = m.rank(r.set);
  r.d = minimum_distance(restrict_to(m, r.set));
  if (r.n != n - d || r.k != k - 1 || 2 * r.d < d) {
    throw InvariantViolation("residual set " + r.set.to_string() + " has parameters (" +
                             std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                             std::to_string(r.d) + ") for d = " + std::to_string(d));
  }
  return r;
}

GriesmerBound griesmer_check(int n, int k, int d) {
  if (k < 0 || d < 0) throw PreconditionError("k and d must be non-negative");
  GriesmerBound g;
  for (int i = 0; i < k && i < 62; ++i) {
    const long long p = 1LL << i;
    g.bound += static_cast<int>((d + p - 1) / p);
  }
  g.slack = n - g.bound;
  return g;
}

std::vector<ChainLevel> griesmer_chain(const Matroid& m) {
  if (m.rank() == 0) throw PreconditionError("matroid has rank 0");
  std::vector<ChainLevel> out;
  SubsetMask cur = m.ground();
  while (true) {
    const Matroid sub = restrict_to(m, cur);
    ChainLevel lvl{cur, cur.size(), sub.rank(), minimum_distance(sub)};
    out.push_back(lvl);
    if (lvl.k < 2) break;
    cur = sub.lift(residual_set(sub).set);
  }
  return out;
}

CodewordCoatomMap coatom_codeword_map(const Matroid& m, const ZLattice& l) {
  const BinaryMatrix* a = m.matrix();
  if (a == nullptr) throw PreconditionError("codewords need a matrix-backed matroid");
  require_nondegenerate(m);
  CodewordCoatomMap out;
  out.d = min_distance_via_cyclic_flats(m, l);
  if (out.d < 3) throw PreconditionError("minimum distance is below 3");
  const int n = m.size();
  out.weight_bound = 2 * out.d - 2;
  out.size_bound = n - 2 * out.d + 2;
  const auto co = coatoms(l);
  for (int c : co) {
    if (l[c].set.size() > out.size_bound) out.qualifying_coatoms.push_back(c);
  }
  bool all_mapped = true;
  std::vector<int> image;
  for (const Codeword& w : enumerate_codewords(*a)) {
    if (w.weight == 0 || w.weight >= out.weight_bound) continue;
    const auto id = l.find(m.ground() - SubsetMask(w.bits));
    if (!id || std::find(co.begin(), co.end(), *id) == co.end()) {
      all_mapped = false;
      continue;
    }
    out.pairs.push_back({w, *id});
    image.push_back(*id);
  }
  std::sort(image.begin(), image.end());
  const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  out.bijective = all_mapped && injective && image == out.qualifying_coatoms;
  return out;
}

}  // namespace cycflat
