// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact; there are no tolerances.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "cycflat/binary.hpp"
#include "cycflat/error.hpp"
#include "cycflat/flats.hpp"
#include "cycflat/minors.hpp"
#include "oracle.hpp"

using namespace cycflat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " (" << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed: " << notes_.str();
    os << ")";
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::vector<SubsetMask> sorted(std::vector<SubsetMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<SubsetMask> parse_sets(std::initializer_list<const char*> digits_or_lists) {
  std::vector<SubsetMask> out;
  for (const char* s : digits_or_lists) {
    std::vector<int> idx;
    std::string str(s);
    if (str.find(',') != std::string::npos) {
      std::istringstream parts(str);
      std::string part;
      while (std::getline(parts, part, ',')) idx.push_back(std::stoi(part));
    } else {
      for (char c : str) idx.push_back(c - '0');
    }
    out.push_back(SubsetMask::of(idx));
  }
  return sorted(out);
}

std::vector<SubsetMask> element_sets(const ZLattice& l, const std::vector<int>& ids) {
  std::vector<SubsetMask> out;
  for (int id : ids) out.push_back(l[id].set);
  return sorted(out);
}

std::vector<SubsetMask> rank_level(const ZLattice& l, int rank) {
  std::vector<SubsetMask> out;
  for (const auto& z : l.elements()) {
    if (z.rank == rank) out.push_back(z.set);
  }
  return sorted(out);
}

// Minimal and maximal proper members of a family with a bottom and a top.
std::vector<SubsetMask> minimal_above(const std::vector<SubsetMask>& fam, SubsetMask bottom) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : fam) {
    if (a == bottom) continue;
    bool minimal = true;
    for (SubsetMask b : fam) minimal = minimal && !(b != bottom && b.proper_subset_of(a));
    if (minimal) out.push_back(a);
  }
  return sorted(out);
}
std::vector<SubsetMask> maximal_below(const std::vector<SubsetMask>& fam, SubsetMask top) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : fam) {
    if (a == top) continue;
    bool maximal = true;
    for (SubsetMask b : fam) maximal = maximal && !(b != top && a.proper_subset_of(b));
    if (maximal) out.push_back(a);
  }
  return sorted(out);
}

std::vector<Matroid> structured_corpus() {
  return corpus::simple_binary_no_isthmus(2024, 200, 5, 12);
}

std::vector<Matroid> general_corpus() {
  std::vector<Matroid> out;
  for (const auto& f : corpus::all_fixtures()) out.push_back(f.matroid());
  for (const Matroid& m : structured_corpus()) out.push_back(m);
  for (const Matroid& m : corpus::random_binary(99, 150, 5, 11)) out.push_back(m);
  return out;
}

// 1. Known lattices of the small fixtures.
Outcome printed_lattices() {
  Tally t;
  {
    const ZLattice l = build_zlattice(corpus::kWorked6.matroid());
    std::vector<std::pair<SubsetMask, int>> got;
    for (const auto& z : l.elements()) got.emplace_back(z.set, z.rank);
    const std::vector<std::pair<SubsetMask, int>> want{{SubsetMask(), 0},
                                                       {SubsetMask::of({5, 6}), 1},
                                                       {SubsetMask::of({1, 2, 3}), 2},
                                                       {SubsetMask::of({3, 4, 5, 6}), 2},
                                                       {SubsetMask::full(6), 3}};
    t.expect(got == want, "worked example elements");
    std::map<std::pair<SubsetMask, SubsetMask>, std::string> labels;
    for (const auto& e : l.edges()) labels[{l[e.child].set, l[e.parent].set}] = e.label.to_string();
    t.expect(labels.size() == 5, "worked example edge count");
    t.expect(labels[{SubsetMask(), SubsetMask::of({1, 2, 3})}] == "rank:2", "rank edge");
    t.expect(labels[{SubsetMask::of({1, 2, 3}), SubsetMask::full(6)}] == "nullity:2", "nullity edge");
    t.expect(labels[{SubsetMask(), SubsetMask::of({5, 6})}] == "elementary", "elementary edge");
    t.expect(labels[{SubsetMask::of({5, 6}), SubsetMask::of({3, 4, 5, 6})}] == "elementary",
             "elementary edge 2");
    t.expect(labels[{SubsetMask::of({3, 4, 5, 6}), SubsetMask::full(6)}] == "elementary",
             "elementary edge 3");
  }
  {
    const ZLattice l = build_zlattice(corpus::kCode633.matroid());
    t.expect(element_sets(l, atoms(l)) == parse_sets({"124", "135", "256", "346"}), "(6,3,3) atoms");
  }
  {
    const ZLattice l = build_zlattice(corpus::kRm13.matroid());
    t.expect(element_sets(l, atoms(l)) ==
                 parse_sets({"1235", "1248", "1267", "1347", "1368", "1456", "1578", "2346",
                             "2378", "2457", "2568", "3458", "3567", "4678"}),
             "(8,4,4) atoms");
    t.expect(l.size() == 16 && l.edges().size() == 28, "(8,4,4) size");
  }
  {
    const ZLattice l = build_zlattice(corpus::kCode1145.matroid());
    t.expect(rank_level(l, 2) == parse_sets({"1,4,9", "1,6,11", "1,7,10", "2,4,6", "2,8,10",
                                             "2,9,11", "3,6,7", "3,8,9", "3,10,11", "4,5,10",
                                             "5,6,8", "5,7,9"}),
             "(11,4,5) rank-2 elements");
    const auto co = parse_sets({"1,2,3,5", "1,2,4,6,9,11", "1,2,7,8,10", "1,3,4,8,9",
                                "1,3,6,7,10,11", "1,4,5,7,9,10", "1,5,6,8,11", "2,3,4,6,7",
                                "2,3,8,9,10,11", "2,4,5,6,8,10", "2,5,7,9,11", "3,4,5,10,11",
                                "3,5,6,7,8,9", "4,7,8,11"});
    t.expect(element_sets(l, coatoms(l)) == co, "(11,4,5) coatoms");
    t.expect(rank_level(l, 3) == co, "(11,4,5) rank-3 elements");
  }
  return t.done("worked example, (6,3,3), (8,4,4), (11,4,5)");
}

// 2. Lattice binarity test against a direct U_4^2 search.
Outcome binarity() {
  Tally t;
  int cases = 0;
  int nonbinary = 0;
  auto check = [&](const Matroid& m, const oracle::Table& tab, const std::string& name) {
    ++cases;
    try {
      const bool lattice = is_binary_via_zlattice(m, build_zlattice(m)).binary;
      const bool has_minor = oracle::has_u42_minor(tab);
      nonbinary += has_minor ? 1 : 0;
      t.expect(lattice == !has_minor, name);
    } catch (const InvariantViolation& e) {
      t.expect(false, name + ": " + e.what());
    }
  };
  for (const auto& f : corpus::printed_fixtures()) check(f.matroid(), f.table(), f.name);
  for (int n = 3; n <= 6; ++n) {
    const Matroid u = Matroid::uniform(n, 2);
    check(u, oracle::table_from_matroid(u), "U_" + std::to_string(n) + "^2");
  }
  int i = 0;
  for (const auto& tab : corpus::random_rank_tables(2718, 60, 7)) {
    check(oracle::to_matroid(tab), tab, "random table " + std::to_string(i++));
  }
  return t.done(std::to_string(cases) + " matroids, " + std::to_string(nonbinary) +
                " with a U_4^2 minor");
}

// 3. Both minor images against the cyclic flats of the minor itself.
Outcome minor_images() {
  Tally t;
  long pairs = 0;
  auto check = [&](const Matroid& m, const ZLattice& l, const oracle::Table& tab, SubsetMask x,
                   SubsetMask y, const std::string& name) {
    ++pairs;
    std::vector<SubsetMask> want;
    for (SubsetMask z : oracle::cyclic_flats(oracle::minor(tab, x, y))) want.push_back(expand(z, y - x));
    want = sorted(want);
    const MinorImages got = zmap_minor(m, l, x, y);
    const bool ok = got.restrict_first == want && got.contract_first == want;
    t.expect(ok, name + " X=" + x.to_string() + " Y=" + y.to_string());
  };
  for (const auto& f : corpus::all_fixtures()) {
    const Matroid m = f.matroid();
    const ZLattice l = build_zlattice(m);
    const oracle::Table tab = f.table();
    if (f.n() <= 8) {
      for_each_subset(m.ground(), [&](SubsetMask y) {
        for_each_subset(y, [&](SubsetMask x) { check(m, l, tab, x, y, f.name); });
      });
    } else {
      std::mt19937_64 rng(31337 + f.n());
      for (int s = 0; s < 6000; ++s) {
        const SubsetMask y(rng() & m.ground().bits());
        const SubsetMask x(rng() & y.bits());
        check(m, l, tab, x, y, f.name);
      }
    }
  }
  return t.done(std::to_string(pairs) + " pairs");
}

// 4. Matrix -> lattice -> presentation-backed matroid keeps every rank.
Outcome reconstruction() {
  Tally t;
  long subsets = 0;
  for (const auto& f : corpus::all_fixtures()) {
    const ZLattice l = build_zlattice(f.matroid());
    const Matroid back = matroid_from_cyclic_flats(f.n(), l.presentation());
    const oracle::Table tab = f.table();
    bool ok = true;
    for (std::uint64_t b = 0; b < tab.r.size(); ++b, ++subsets) ok = ok && back.rank(SubsetMask(b)) == tab.r[b];
    t.expect(ok, f.name);
  }
  return t.done(std::to_string(subsets) + " subsets");
}

// 5. Flats between a corank-2 flat and 1_Z, counted from the lattice.
Outcome interval_counts() {
  Tally t;
  int flats = 0;
  for (const auto& f : corpus::all_fixtures()) {
    const Matroid m = f.matroid();
    const ZLattice l = build_zlattice(m);
    const oracle::Table tab = f.table();
    const SubsetMask top = tab.ground() - oracle::isthmuses(tab);
    // Corank-2 flats found directly, to make sure none is skipped.
    std::vector<SubsetMask> direct;
    for (SubsetMask g : oracle::flats(tab)) {
      if (g.subset_of(top) && tab.rank(g) == tab.rank(top) - 2) direct.push_back(g);
    }
    t.expect(sorted(corank2_flats(m, l)) == sorted(direct), f.name + " corank-2 flats");
    for (SubsetMask g : direct) {
      ++flats;
      t.expect(count_corank2_interval(m, l, g) == oracle::flats_strictly_between(tab, g, top),
               f.name + " F=" + g.to_string());
    }
  }
  return t.done(std::to_string(flats) + " corank-2 flats");
}

// 6. Atomic and coatomic lattices on simple binary matroids.
Outcome atomicity() {
  Tally t;
  const auto ms = structured_corpus();
  int coatomic_cases = 0;
  for (const Matroid& m : ms) {
    const ZLattice l = build_zlattice(m);
    t.expect(is_atomic(l), "atomic");
    t.expect(is_atomic_by_union(l), "union of atoms");
    // Coatomicity needs d >= 3; with d = 2 a series pair can break it.
    const bool d3 = minimum_distance(m) >= 3;
    if (d3) {
      ++coatomic_cases;
      t.expect(is_coatomic(l), "coatomic");
    }
    // Same properties from the oracle's own cyclic flats.
    const oracle::Table tab = corpus::binary_table(m);
    const auto fam = oracle::cyclic_flats(tab);
    const SubsetMask bottom = oracle::loops(tab);
    const SubsetMask top = tab.ground() - oracle::isthmuses(tab);
    const auto at = minimal_above(fam, bottom);
    const auto co = maximal_below(fam, top);
    bool ok = true;
    for (SubsetMask z : fam) {
      SubsetMask uni = bottom;
      for (SubsetMask a : at) {
        if (a.subset_of(z)) uni |= a;
      }
      SubsetMask inter = top;
      for (SubsetMask c : co) {
        if (z.subset_of(c)) inter &= c;
      }
      ok = ok && uni == z && (!d3 || oracle::cyc(tab, inter) == z);
    }
    t.expect(ok, "oracle atomic/coatomic");
  }
  return t.done(std::to_string(ms.size()) + " matroids, " + std::to_string(coatomic_cases) +
                " with d >= 3");
}

// 7. Height-3 lattices with nullity at least 3, up to isomorphism.
Outcome height3() {
  Tally t;
  struct Rep {
    Matroid m;
    int d;
    int atoms;
  };
  std::vector<Rep> reps;
  int candidates = 0;
  for (const Matroid& m : corpus::exhaustive_simple_binary(4, 8)) {
    if (m.nullity() < 3) continue;
    const ZLattice l = build_zlattice(m);
    if (l.height() != 3) continue;
    ++candidates;
    const int a = static_cast<int>(atoms(l).size());
    bool known = false;
    for (const Rep& r : reps) {
      if (r.m.size() == m.size() && r.m.rank() == m.rank() && r.atoms == a &&
          is_isomorphic(r.m, m)) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back({m, minimum_distance(m), a});
    const Height3Class c = classify_height3(m);
    t.expect(c.kind != Height3Kind::Eta2 && c.atom_count == a, "classifier");
  }
  std::vector<std::tuple<int, int, int, int>> got;
  for (const Rep& r : reps) got.emplace_back(r.m.size(), r.m.rank(), r.d, r.atoms);
  std::sort(got.begin(), got.end());
  const std::vector<std::tuple<int, int, int, int>> want{
      {6, 3, 3, 4}, {7, 3, 4, 7}, {7, 4, 3, 7}, {8, 4, 4, 14}};
  t.expect(got == want, std::to_string(got.size()) + " classes");
  return t.done(std::to_string(candidates) + " labeled matroids in " + std::to_string(reps.size()) +
                " classes");
}

// 8. Nullity and rank relations across rank-2 and nullity-2 intervals.
Outcome relations() {
  Tally t;
  long pairs = 0;
  for (const Matroid& m : general_corpus()) {
    const ZLattice l = build_zlattice(m);
    for (const auto& c : check_rankdiff2_relations(l)) {
      ++pairs;
      t.expect(c.holds, std::string("rank-2 gap ") + to_string(c.rcase));
    }
    for (const auto& c : check_null2_relations(l)) {
      ++pairs;
      t.expect(c.holds, std::string("nullity-2 gap ") + to_string(c.rcase));
    }
    if (m.rank() == 2 && is_nondegenerate(m)) {
      ++pairs;
      t.expect(check_rank2_relations(m).holds, "rank-2 matroid");
    }
  }
  return t.done(std::to_string(pairs) + " intervals");
}

// 9. Residual sets, the Griesmer bound and the worked chain.
Outcome residual_griesmer() {
  Tally t;
  int count = 0;
  for (const Matroid& m : general_corpus()) {
    if (m.rank() < 2) continue;
    ++count;
    const oracle::Table tab = corpus::binary_table(m);
    const int d = oracle::min_distance(tab);
    const ResidualResult r = residual_set(m);
    const oracle::Table sub = oracle::minor(tab, SubsetMask(), r.set);
    t.expect(r.set.size() == m.size() - d, "size n-d");
    t.expect(tab.rank(r.set) == m.rank() - 1, "rank k-1");
    t.expect(2 * oracle::min_distance(sub) >= d, "distance ceil(d/2)");
    t.expect(griesmer_check(m.size(), m.rank(), d).slack >= 0, "slack >= 0");
  }
  t.expect(griesmer_check(11, 4, 5).slack == 0, "(11,4,5)");
  t.expect(griesmer_check(6, 3, 3).slack == 0, "(6,3,3)");
  t.expect(griesmer_check(7, 3, 4).slack == 0, "(7,3,4)");
  t.expect(griesmer_check(8, 4, 4).slack == 0, "(8,4,4)");
  const auto chain = griesmer_chain(corpus::kCode1145.matroid());
  std::vector<int> ds;
  int sum = 0;
  for (const auto& lvl : chain) {
    ds.push_back(lvl.d);
    sum += lvl.d;
  }
  t.expect(ds == std::vector<int>{5, 3, 2, 1} && sum == 11, "(11,4,5) chain");
  return t.done(std::to_string(count) + " matroids, chain 5+3+2+1");
}

// 10. Low-weight codewords against large coatoms.
Outcome codewords() {
  Tally t;
  std::map<std::string, std::size_t> counts;
  for (const auto& f : corpus::all_fixtures()) {
    const Matroid m = f.matroid();
    const oracle::Table tab = f.table();
    const int d = oracle::min_distance(tab);
    if (d < 3) continue;
    const ZLattice l = build_zlattice(m);
    const CodewordCoatomMap map = coatom_codeword_map(m, l);
    // Both sides recomputed directly.
    const BinaryMatrix a = f.matrix();
    std::vector<SubsetMask> words;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << a.rows()); ++pick) {
      std::uint64_t w = 0;
      for (int r = 0; r < a.rows(); ++r) {
        if ((pick >> r) & 1U) w ^= a.row(r);
      }
      const int wt = std::popcount(w);
      if (wt > 0 && wt < 2 * d - 2) words.push_back(SubsetMask(w));
    }
    words = sorted(words);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::vector<SubsetMask> big;
    for (SubsetMask c : maximal_below(oracle::cyclic_flats(tab), tab.ground())) {
      if (c.size() > f.n() - 2 * d + 2) big.push_back(c);
    }
    std::vector<SubsetMask> images;
    for (SubsetMask w : words) images.push_back(tab.ground() - w);
    t.expect(sorted(images) == sorted(big), f.name + " direct bijection");
    t.expect(map.bijective && map.pairs.size() == words.size() &&
                 map.qualifying_coatoms.size() == big.size(),
             f.name + " library map");
    counts[f.name] = map.pairs.size();
  }
  t.expect(counts[corpus::kCode633.name] == 4, "(6,3,3) count");
  t.expect(counts[corpus::kCode1145.name] == 14, "(11,4,5) count");
  return t.done(std::to_string(counts.size()) + " fixtures with d >= 3");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"printed lattices reproduced", printed_lattices},
      {"binarity test vs U_4^2 search", binarity},
      {"minor images vs direct lattices", minor_images},
      {"rank reconstruction from the lattice", reconstruction},
      {"corank-2 interval counts", interval_counts},
      {"atomic and coatomic lattices", atomicity},
      {"height-3 classes", height3},
      {"rank and nullity relations", relations},
      {"residual sets and Griesmer bound", residual_griesmer},
      {"codeword-coatom bijection", codewords},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("AC%-2d %s  %s: %s [%.1fs]\n", n, o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
