// Serialization of lattices and analysis reports.
//
// JSON output is byte-stable: fixed key order, two-space indent, trailing
// newline. Sets are lists of 1-based indices.
#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycflat/binary.hpp"
#include "cycflat/flats.hpp"
#include "cycflat/verify.hpp"
#include "cycflat/zlattice.hpp"

namespace cycflat {

std::string lattice_to_json(const ZLattice& l);
std::string lattice_to_dot(const ZLattice& l);
std::string lattice_to_text(const ZLattice& l);

struct Presentation {
  int n = 0;
  std::vector<RankedSet> flats;
};

// "n=<int>" then one "<set> <rank>" line per cyclic flat, where <set> is a
// comma-separated ascending list of 1-based indices or "-" for the empty
// set. Blank lines and '#' comments are skipped. Throws ParseError.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(std::string_view text);
std::string presentation_to_text(const Presentation& p);
// Reads the elements of a lattice JSON document. Throws ParseError.
Presentation presentation_from_lattice_json(std::string_view text);

struct EdgeCensus {
  int elementary = 0;
  int mixed = 0;
  // (jump, count), ascending by jump
  std::vector<std::pair<int, int>> rank;
  std::vector<std::pair<int, int>> nullity;
};
EdgeCensus edge_census(const ZLattice& l);

struct AnalysisReport {
  int n = 0;
  int k = 0;
  int nullity = 0;
  std::optional<int> d;
  SubsetMask loops;
  SubsetMask isthmuses;
  ZLattice lattice;
  BinarityVerdict binarity;
  EdgeCensus census;
  std::vector<int> atoms;
  std::vector<int> coatoms;
  bool atomic = false;
  bool coatomic = false;
  BluntAnalysis blunt;
  // Present for binary matroids of positive rank.
  std::optional<GriesmerBound> griesmer;
  std::vector<ChainLevel> residual_chain;
  std::vector<VerifyItem> verification;

  bool verification_failed() const;
};

AnalysisReport analyze(const Matroid& m, bool verify);
std::string analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);

}  // namespace cycflat
