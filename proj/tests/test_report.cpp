#include <doctest.h>

#include <fstream>
#include <iterator>

#include "corpus.hpp"
#include "cycflat/error.hpp"
#include "cycflat/report.hpp"

using namespace cycflat;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream f(std::string(CYCFLAT_TEST_DATA_DIR) + "/" + name);
  REQUIRE(f);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

ParseErrorKind presentation_error(std::string_view text) {
  try {
    parse_presentation_text(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error");
  return ParseErrorKind::Malformed;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("lattice JSON matches the stored worked example") {
    const ZLattice l = build_zlattice(corpus::kWorked6.matroid());
    CHECK(lattice_to_json(l) == slurp("worked6_lattice.json"));
    CHECK(lattice_to_json(l) == lattice_to_json(build_zlattice(corpus::kWorked6.matroid())));
  }

  TEST_CASE("DOT output") {
    const std::string dot = lattice_to_dot(build_zlattice(corpus::kWorked6.matroid()));
    CHECK(dot.rfind("digraph zlattice {", 0) == 0);
    CHECK(dot.find("rankdir=BT;") != std::string::npos);
    CHECK(dot.find("{ rank=same; z2; z3; }") != std::string::npos);
    CHECK(dot.find("z0 -> z2 [label=\"rank:2\"];") != std::string::npos);
    CHECK(dot.find("z2 -> z4 [label=\"nullity:2\"];") != std::string::npos);
    CHECK(dot.back() == '\n');
  }

  TEST_CASE("text output") {
    const std::string text = lattice_to_text(build_zlattice(corpus::kWorked6.matroid()));
    CHECK(text.find("n=6 elements=5 height=4") == 0);
    CHECK(text.find("3\t2\t2\t{3,4,5,6}") != std::string::npos);
  }

  TEST_CASE("presentation parsing") {
    const Presentation p = parse_presentation_text(slurp("worked6_presentation.txt"));
    CHECK(p.n == 6);
    REQUIRE(p.flats.size() == 5);
    CHECK(p.flats[0].set == SubsetMask());
    CHECK(p.flats[3].set == SubsetMask::of({3, 4, 5, 6}));
    CHECK(p.flats[3].rank == 2);
    CHECK(parse_presentation_text(presentation_to_text(p)).flats == p.flats);

    CHECK(presentation_error("") == ParseErrorKind::Empty);
    CHECK(presentation_error("- 0\n") == ParseErrorKind::Malformed);
    CHECK(presentation_error("n=x\n") == ParseErrorKind::Malformed);
    CHECK(presentation_error("n=65\n") == ParseErrorKind::TooWide);
    CHECK(presentation_error("n=3\n2,1 1\n") == ParseErrorKind::Malformed);
    CHECK(presentation_error("n=3\n1,4 1\n") == ParseErrorKind::Malformed);
    CHECK(presentation_error("n=3\n1,2\n") == ParseErrorKind::Malformed);
    CHECK(presentation_error("n=3\n1,2 1 7\n") == ParseErrorKind::Malformed);
  }

  TEST_CASE("lattice JSON roundtrips through the axiom checker") {
    for (const auto& f : corpus::all_fixtures()) {
      const ZLattice l = build_zlattice(f.matroid());
      const std::string js = lattice_to_json(l);
      const Presentation p = presentation_from_lattice_json(js);
      CHECK(p.n == f.n());
      REQUIRE(verify_z_axioms(p.n, p.flats).ok);
      CHECK(lattice_to_json(ZLattice::from_family(p.n, p.flats)) == js);
    }
    CHECK_THROWS_AS(presentation_from_lattice_json("{"), ParseError);
    CHECK_THROWS_AS(presentation_from_lattice_json("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(presentation_from_lattice_json(
                        "{\"n\": 2, \"elements\": [{\"set\": [3], \"rank\": 1}]}"),
                    ParseError);
  }

  TEST_CASE("edge census") {
    const EdgeCensus w6 = edge_census(build_zlattice(corpus::kWorked6.matroid()));
    CHECK(w6.elementary == 3);
    CHECK(w6.rank == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(w6.nullity == std::vector<std::pair<int, int>>{{2, 1}});
    const EdgeCensus g = edge_census(build_zlattice(corpus::kCode1145.matroid()));
    CHECK(g.elementary == 12);
    CHECK(g.rank == std::vector<std::pair<int, int>>{{2, 12}, {3, 2}});
    CHECK(g.nullity == std::vector<std::pair<int, int>>{{2, 24}, {4, 6}, {5, 6}, {6, 2}});
  }

  TEST_CASE("analysis report") {
    const AnalysisReport r = analyze(corpus::kCode1145.matroid(), true);
    CHECK(r.n == 11);
    CHECK(r.k == 4);
    CHECK(r.d == 5);
    CHECK(r.binarity.binary);
    REQUIRE(r.griesmer);
    CHECK(r.griesmer->slack == 0);
    CHECK(r.residual_chain.size() == 4);
    CHECK_FALSE(r.verification_failed());
    const std::string js = analysis_to_json(r);
    CHECK(js == analysis_to_json(analyze(corpus::kCode1145.matroid(), true)));
    CHECK(js.find("\"slack\": 0") != std::string::npos);
    CHECK_FALSE(analysis_to_text(r).empty());

    const AnalysisReport u = analyze(Matroid::uniform(4, 2), false);
    CHECK_FALSE(u.binarity.binary);
    CHECK_FALSE(u.griesmer);
  }
}
