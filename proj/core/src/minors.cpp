#include "cycflat/minors.hpp"

#include <algorithm>

#include "cycflat/error.hpp"

namespace cycflat {

namespace {

std::vector<SubsetMask> sorted_unique(std::vector<SubsetMask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

UniformVerdict verdict(bool ok, int n, int k, UniformRoute route) {
  UniformVerdict v;
  v.is_uniform = ok;
  v.n = n;
  v.k = k;
  v.route = route;
  return v;
}

UniformVerdict reject(UniformVerdict v, std::string reason, std::optional<SubsetMask> w) {
  v.is_uniform = false;
  v.reason = std::move(reason);
  v.witness = w;
  return v;
}

}  // namespace

const char* to_string(UniformRoute r) {
  switch (r) {
    case UniformRoute::Edge:
      return "edge";
    case UniformRoute::Independent:
      return "independent";
    case UniformRoute::RankZero:
      return "rank-zero";
    case UniformRoute::Restriction:
      return "restriction";
    case UniformRoute::Contraction:
      return "contraction";
    case UniformRoute::General:
      return "general";
  }
  return "";
}

ZLattice zlattice_interval_minor(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y) {
  if (!x.subset_of(y)) throw PreconditionError("X is not a subset of Y");
  if (!m.is_cyclic(x)) throw PreconditionError("X = " + x.to_string() + " is not cyclic");
  if (!m.is_flat(y)) throw PreconditionError("Y = " + y.to_string() + " is not a flat");
  const SubsetMask support = y - x;
  const int rx = m.rank(x);
  std::vector<RankedSet> family;
  for (const auto& z : l.elements()) {
    if (x.subset_of(z.set) && z.set.subset_of(y)) {
      family.push_back({compress(z.set - x, support), z.rank - rx});
    }
  }
  return ZLattice::from_family(support.size(), std::move(family));
}

std::vector<SubsetMask> zmap_restriction(const Matroid& m, const ZLattice& l, SubsetMask y) {
  std::vector<SubsetMask> out;
  for (const auto& z : l.elements()) out.push_back(m.cyclic_operator(z.set & y));
  return sorted_unique(std::move(out));
}

std::vector<SubsetMask> zmap_contraction(const Matroid& m, const ZLattice& l, SubsetMask x) {
  std::vector<SubsetMask> out;
  for (const auto& z : l.elements()) out.push_back(m.closure(x | z.set) - x);
  return sorted_unique(std::move(out));
}

MinorImages zmap_minor(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y) {
  if (!x.subset_of(y)) throw PreconditionError("X is not a subset of Y");
  MinorImages out;
  for (const auto& z : l.elements()) {
    out.restrict_first.push_back(m.closure(x | m.cyclic_operator(z.set & y)) & (y - x));
    out.contract_first.push_back(m.cyclic_operator(m.closure(x | z.set) & y) - x);
  }
  out.restrict_first = sorted_unique(std::move(out.restrict_first));
  out.contract_first = sorted_unique(std::move(out.contract_first));
  return out;
}

UniformVerdict uniform_minor_from_edge(const Matroid& m, const ZLattice& l, int child, int parent) {
  if (child < 0 || parent < 0 || child >= l.size() || parent >= l.size() ||
      !l.is_cover(child, parent)) {
    throw PreconditionError("elements " + std::to_string(child) + " and " +
                            std::to_string(parent) + " do not form a cover");
  }
  const auto& c = l[child];
  const auto& p = l[parent];
  UniformVerdict v = verdict(true, p.set.size() - c.set.size(), p.rank - c.rank, UniformRoute::Edge);
  if (v.n <= 20 && !is_uniform_matroid(minor(m, c.set, p.set))) {
    throw InvariantViolation("minor across cover " + c.set.to_string() + " < " +
                             p.set.to_string() + " is not uniform");
  }
  return v;
}

UniformVerdict is_restriction_uniform(const Matroid& m, const ZLattice& l, SubsetMask y) {
  const int k = m.rank();
  if (m.rank(y) != k) throw PreconditionError("Y = " + y.to_string() + " is not of full rank");
  UniformVerdict v = verdict(true, y.size(), k, UniformRoute::Restriction);
  if (m.is_independent(y)) return v;
  if (!m.is_cyclic(y)) return reject(v, "Y is not cyclic", y - m.cyclic_operator(y));
  for (const auto& z : l.elements()) {
    if (z.rank < k && !m.is_independent(z.set & y)) {
      return reject(v, "Z n Y is dependent for a cyclic flat Z of rank below rho(E)", z.set);
    }
  }
  return v;
}

UniformVerdict is_contraction_uniform(const Matroid& m, const ZLattice& l, SubsetMask x) {
  if (!m.is_independent(x)) throw PreconditionError("X = " + x.to_string() + " is dependent");
  const int k = m.rank();
  UniformVerdict v = verdict(true, m.size() - x.size(), k - x.size(), UniformRoute::Contraction);
  if (x.size() == k) return v;
  if (!m.is_flat(x)) return reject(v, "X is not a flat", m.closure(x) - x);
  for (const auto& z : l.elements()) {
    if (z.id == l.bottom()) continue;
    if (m.closure(x | z.set) != m.ground()) {
      return reject(v, "cl(X u Z) is not spanning for a cyclic flat Z", z.set);
    }
  }
  return v;
}

namespace {

// Both forms of the general criterion; X independent, Y dependent and
// spanning, X not spanning.
UniformVerdict general_minor_test(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y) {
  const SubsetMask e = m.ground();
  UniformVerdict v = verdict(true, (y - x).size(), m.rank(y) - m.rank(x), UniformRoute::General);
  if ((m.closure(x) & y) != x) return reject(v, "cl(X) n Y != X", (m.closure(x) & y) - x);
  const SubsetMask cy = m.cyclic_operator(y);
  if (!(y - x).subset_of(cy)) return reject(v, "Y - X is not inside cyc(Y)", (y - x) - cy);

  std::optional<SubsetMask> first_fail;
  std::optional<SubsetMask> second_fail;
  for (const auto& z : l.elements()) {
    const SubsetMask zy = z.set & y;
    if (!first_fail && !m.is_independent(zy) &&
        m.closure(x | m.cyclic_operator(zy)) != e) {
      first_fail = z.set;
    }
    const SubsetMask c = m.closure(x | z.set);
    if (!second_fail && !m.is_independent(c & y) && c != e) second_fail = z.set;
  }
  if (first_fail.has_value() != second_fail.has_value()) {
    throw InvariantViolation("the two forms of the minor criterion disagree for X = " +
                             x.to_string() + ", Y = " + y.to_string());
  }
  if (first_fail) {
    return reject(v, "a cyclic flat Z has Z n Y dependent and cl(X u cyc(Z n Y)) != E",
                  *first_fail);
  }
  return v;
}

}  // namespace

UniformVerdict is_minor_uniform(const Matroid& m, const ZLattice& l, SubsetMask x, SubsetMask y) {
  if (!y.subset_of(m.ground())) throw PreconditionError("Y is not inside the ground set");
  if (!x.subset_of(y)) {
    throw PreconditionError("X = " + x.to_string() + " is not a subset of Y = " + y.to_string());
  }
  const int n = (y - x).size();
  const int k = m.rank(y) - m.rank(x);

  // M|Y/X = (M|cl(Y)/cyc(X)) | (Y - cyc X) / (X - cyc X); in the outer minor
  // the contracted set is independent and the kept set spans.
  const SubsetMask x0 = m.cyclic_operator(x);
  const SubsetMask y0 = m.closure(y);
  const Matroid m2 = minor(m, x0, y0);
  const ZLattice l2 = zlattice_interval_minor(m, l, x0, y0);
  const SubsetMask support = y0 - x0;
  const SubsetMask x2 = compress(x - x0, support);
  const SubsetMask y2 = compress(y - x0, support);

  auto finish = [&](UniformVerdict v) {
    v.n = n;
    v.k = k;
    if (v.witness) v.witness = expand(*v.witness, support);
    return v;
  };

  if (m2.is_independent(y2)) return verdict(true, n, k, UniformRoute::Independent);
  if (m2.rank(x2) == m2.rank()) return verdict(true, n, k, UniformRoute::RankZero);
  if (x2.empty()) return finish(is_restriction_uniform(m2, l2, y2));
  if (y2 == m2.ground()) return finish(is_contraction_uniform(m2, l2, x2));
  return finish(general_minor_test(m2, l2, x2, y2));
}

}  // namespace cycflat
