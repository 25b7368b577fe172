#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "cycflat/error.hpp"
#include "cycflat/zlattice.hpp"
#include "oracle.hpp"

using namespace cycflat;

namespace {

std::vector<SubsetMask> sets_of(const ZLattice& l) {
  std::vector<SubsetMask> out;
  for (const auto& z : l.elements()) out.push_back(z.set);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> sorted(std::vector<SubsetMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

int id_of(const ZLattice& l, std::initializer_list<int> s) {
  auto id = l.find(SubsetMask::of(s));
  REQUIRE(id);
  return *id;
}

std::vector<RankedSet> worked6_presentation() {
  return {{SubsetMask(), 0},
          {SubsetMask::of({5, 6}), 1},
          {SubsetMask::of({1, 2, 3}), 2},
          {SubsetMask::of({3, 4, 5, 6}), 2},
          {SubsetMask::full(6), 3}};
}

}  // namespace

TEST_SUITE("zlattice") {
  TEST_CASE("worked example lattice") {
    const ZLattice l = build_zlattice(corpus::kWorked6.matroid());
    REQUIRE(l.size() == 5);
    const std::vector<std::pair<SubsetMask, int>> want{{SubsetMask(), 0},
                                                       {SubsetMask::of({5, 6}), 1},
                                                       {SubsetMask::of({1, 2, 3}), 2},
                                                       {SubsetMask::of({3, 4, 5, 6}), 2},
                                                       {SubsetMask::full(6), 3}};
    for (int i = 0; i < 5; ++i) {
      CHECK(l[i].id == i);
      CHECK(l[i].set == want[i].first);
      CHECK(l[i].rank == want[i].second);
      CHECK(l[i].nullity == want[i].first.size() - want[i].second);
    }
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 4);
    CHECK(l.height() == 4);
    CHECK(l.edges().size() == 5);

    const int e = 0, a56 = id_of(l, {5, 6}), a123 = id_of(l, {1, 2, 3}),
              a3456 = id_of(l, {3, 4, 5, 6}), top = l.top();
    auto label = [&](int c, int p) {
      for (const auto& ed : l.edges()) {
        if (ed.child == c && ed.parent == p) return ed.label.to_string();
      }
      return std::string("none");
    };
    CHECK(label(e, a123) == "rank:2");
    CHECK(label(a123, top) == "nullity:2");
    CHECK(label(e, a56) == "elementary");
    CHECK(label(a56, a3456) == "elementary");
    CHECK(label(a3456, top) == "elementary");
    CHECK(label(e, a3456) == "none");
    CHECK(l.is_cover(a56, a3456));
    CHECK_FALSE(l.is_cover(e, top));
  }

  TEST_CASE("edge labels") {
    CHECK(classify_jump(1, 1).kind == EdgeKind::Elementary);
    CHECK(classify_jump(3, 1).to_string() == "rank:3");
    CHECK(classify_jump(1, 4).to_string() == "nullity:4");
    CHECK(classify_jump(2, 2).to_string() == "mixed:2,2");
  }

  TEST_CASE("(6,3,3) lattice") {
    const ZLattice l = build_zlattice(corpus::kCode633.matroid());
    CHECK(sets_of(l) == sorted({SubsetMask(), SubsetMask::of({1, 2, 4}), SubsetMask::of({1, 3, 5}),
                                SubsetMask::of({2, 5, 6}), SubsetMask::of({3, 4, 6}),
                                SubsetMask::full(6)}));
    CHECK(l.height() == 3);
    CHECK(atoms(l).size() == 4);
    CHECK(is_atomic(l));
    CHECK(is_coatomic(l));
    CHECK(z_join(l, id_of(l, {1, 2, 4}), id_of(l, {1, 3, 5})) == l.top());
    CHECK(z_meet(l, id_of(l, {1, 2, 4}), id_of(l, {1, 3, 5})) == l.bottom());
  }

  TEST_CASE("uniform lattices have two elements") {
    const ZLattice l = build_zlattice(Matroid::uniform(4, 2));
    CHECK(sets_of(l) == std::vector<SubsetMask>{SubsetMask(), SubsetMask::full(4)});
    CHECK(l.height() == 2);
    const ZLattice one = build_zlattice(Matroid::uniform(3, 3));
    CHECK(one.size() == 1);
    CHECK(one.height() == 1);
  }

  TEST_CASE("lattice elements match the oracle") {
    for (const auto& f : corpus::all_fixtures()) {
      CHECK(sets_of(build_zlattice(f.matroid())) == sorted(oracle::cyclic_flats(f.table())));
    }
    for (const auto& t : corpus::random_rank_tables(21, 40, 8)) {
      CHECK(sets_of(build_zlattice(oracle::to_matroid(t))) == sorted(oracle::cyclic_flats(t)));
    }
    for (const Matroid& m : corpus::random_binary(5, 40, 4, 9)) {
      const oracle::Table t = oracle::table_from_matroid(m);
      const ZLattice l = build_zlattice(m);
      CHECK(sets_of(l) == sorted(oracle::cyclic_flats(t)));
      for (const auto& z : l.elements()) CHECK(z.rank == t.rank(z.set));
    }
  }

  TEST_CASE("ordering is by rank then index list") {
    const ZLattice l = build_zlattice(corpus::kCode1145.matroid());
    for (int i = 1; i < l.size(); ++i) {
      const auto& a = l[i - 1];
      const auto& b = l[i];
      CHECK((a.rank < b.rank || (a.rank == b.rank && lex_less(a.set, b.set))));
    }
  }

  TEST_CASE("join and meet agree with closure and cyc") {
    const Matroid w6 = corpus::kWorked6.matroid();
    const ZLattice le = build_zlattice(w6);
    CHECK(z_meet(le, id_of(le, {1, 2, 3}), id_of(le, {3, 4, 5, 6})) == le.bottom());
    for (const auto& f : corpus::all_fixtures()) {
      const Matroid m = f.matroid();
      const ZLattice l = build_zlattice(m);
      for (int a = 0; a < l.size(); ++a) {
        for (int b = 0; b < l.size(); ++b) {
          CHECK(l[z_join(l, a, b)].set == m.closure(l[a].set | l[b].set));
          CHECK(l[z_meet(l, a, b)].set == m.cyclic_operator(l[a].set & l[b].set));
        }
      }
      CHECK(z_join_all(l, {}) == l.bottom());
      CHECK(z_meet_all(l, {}) == l.top());
    }
  }

  TEST_CASE("atoms, coatoms and atomicity") {
    const ZLattice w6 = build_zlattice(corpus::kWorked6.matroid());
    CHECK(atoms(w6).size() == 2);
    CHECK_FALSE(is_atomic(w6));
    const ZLattice rm = build_zlattice(corpus::kRm13.matroid());
    CHECK(atoms(rm).size() == 14);
    CHECK(coatoms(rm).size() == 14);
    CHECK(rm.size() == 16);
    CHECK(rm.edges().size() == 28);
    CHECK(is_atomic(rm));
    CHECK(is_atomic_by_union(rm));
    CHECK(is_coatomic(rm));
  }

  TEST_CASE("axioms on valid presentations") {
    CHECK(verify_z_axioms(6, worked6_presentation()).ok);
    for (const auto& f : corpus::all_fixtures()) {
      const ZLattice l = build_zlattice(f.matroid());
      CHECK(verify_z_axioms(f.n(), l.presentation()).ok);
    }
  }

  TEST_CASE("axiom violations") {
    auto bad = worked6_presentation();
    bad[2].rank = 3;
    AxiomReport r = verify_z_axioms(6, bad);
    CHECK_FALSE(r.ok);
    CHECK(r.axiom == "Z2");
    REQUIRE(r.x);
    REQUIRE(r.y);
    // Whichever pair is reported must break 0 < rank gap < size gap.
    auto rank_in = [&](SubsetMask s) {
      for (const auto& z : bad) {
        if (z.set == s) return z.rank;
      }
      return -1;
    };
    const int gap = rank_in(*r.y) - rank_in(*r.x);
    CHECK_FALSE((0 < gap && gap < (*r.y - *r.x).size()));
    CHECK(rank_in(SubsetMask::full(6)) - rank_in(SubsetMask::of({1, 2, 3})) == 0);

    r = verify_z_axioms(3, {{SubsetMask(), 0}, {SubsetMask::of({1, 2}), 1}, {SubsetMask::of({2, 3}), 1}});
    CHECK(r.axiom == "Z0");

    auto z1 = worked6_presentation();
    z1[0].rank = 1;
    r = verify_z_axioms(6, z1);
    CHECK(r.axiom == "Z1");

    r = verify_z_axioms(5, {{SubsetMask(), 0},
                            {SubsetMask::of({1, 2, 3}), 1},
                            {SubsetMask::of({3, 4, 5}), 1},
                            {SubsetMask::full(5), 2}});
    CHECK(r.axiom == "Z3");
    CHECK(r.x == SubsetMask::of({1, 2, 3}));
    CHECK(r.y == SubsetMask::of({3, 4, 5}));

    auto dup = worked6_presentation();
    dup.push_back({SubsetMask::of({5, 6}), 1});
    CHECK_THROWS_AS(verify_z_axioms(6, dup), PreconditionError);
    CHECK_THROWS_AS(verify_z_axioms(3, worked6_presentation()), PreconditionError);
    CHECK_THROWS_AS(matroid_from_cyclic_flats(6, bad), PreconditionError);
  }

  TEST_CASE("rank from cyclic flats") {
    const auto p = worked6_presentation();
    CHECK(rank_from_cyclic_flats(p, SubsetMask::of({4, 5, 6})) == 2);
    for (const auto& z : p) CHECK(rank_from_cyclic_flats(p, z.set) == z.rank);
    for (const auto& f : corpus::all_fixtures()) {
      const ZLattice l = build_zlattice(f.matroid());
      const Matroid back = matroid_from_cyclic_flats(f.n(), l.presentation());
      const oracle::Table t = f.table();
      for (std::uint64_t b = 0; b < t.r.size(); ++b) REQUIRE(back.rank(SubsetMask(b)) == t.r[b]);
    }
  }

  TEST_CASE("minimum distance from the lattice") {
    const int expected[] = {2, 3, 4, 3, 4, 5, 3};
    int i = 0;
    for (const auto& f : corpus::all_fixtures()) {
      const Matroid m = f.matroid();
      CHECK(min_distance_via_cyclic_flats(m, build_zlattice(m)) == expected[i++]);
    }
    const Matroid u = Matroid::uniform(4, 2);
    CHECK(min_distance_via_cyclic_flats(u, build_zlattice(u)) == 3);
    const Matroid id = Matroid::from_matrix(parse_matrix_text("10\n01"));
    CHECK_THROWS_AS(min_distance_via_cyclic_flats(id, build_zlattice(id)), PreconditionError);
    for (const Matroid& m : corpus::simple_binary_no_isthmus(3, 40, 4, 10)) {
      CHECK(min_distance_via_cyclic_flats(m, build_zlattice(m)) ==
            oracle::min_distance(oracle::table_from_matroid(m)));
    }
  }

  TEST_CASE("flat enumeration matches the oracle") {
    for (const auto& f : corpus::all_fixtures()) {
      const Matroid m = f.matroid();
      auto got = enumerate_flats(m, m.ground(), m.rank());
      CHECK(sorted(got) == sorted(oracle::flats(f.table())));
      for (SubsetMask g : enumerate_flats(m, m.ground(), 1)) CHECK(m.rank(g) <= 1);
    }
  }
}
