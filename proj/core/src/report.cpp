#include "cycflat/report.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cycflat/error.hpp"

namespace cycflat {

using json = nlohmann::ordered_json;

namespace {

json set_json(SubsetMask s) { return json(s.one_based()); }

json lattice_json(const ZLattice& l) {
  json j;
  j["n"] = l.ground_size();
  json elems = json::array();
  for (const auto& e : l.elements()) {
    json o;
    o["id"] = e.id;
    o["set"] = set_json(e.set);
    o["rank"] = e.rank;
    o["nullity"] = e.nullity;
    elems.push_back(std::move(o));
  }
  j["elements"] = std::move(elems);
  json edges = json::array();
  for (const auto& e : l.edges()) {
    json o;
    o["child"] = e.child;
    o["parent"] = e.parent;
    o["label"] = e.label.to_string();
    o["d_rho"] = e.label.d_rho;
    o["d_eta"] = e.label.d_eta;
    edges.push_back(std::move(o));
  }
  j["edges"] = std::move(edges);
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  j["height"] = l.height();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string set_label(SubsetMask s) {
  if (s.empty()) return "-";
  std::string out;
  for (int i : s.one_based()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

std::string lattice_to_json(const ZLattice& l) { return dump(lattice_json(l)); }

std::string lattice_to_dot(const ZLattice& l) {
  std::ostringstream os;
  os << "digraph zlattice {\n  rankdir=BT;\n  node [shape=box];\n";
  std::map<int, std::vector<int>> by_rank;
  for (const auto& e : l.elements()) by_rank[e.rank].push_back(e.id);
  for (const auto& [rank, ids] : by_rank) {
    os << "  { rank=same;";
    for (int id : ids) os << " z" << id << ";";
    os << " }\n";
  }
  for (const auto& e : l.elements()) {
    os << "  z" << e.id << " [label=\"" << (e.set.empty() ? "\xE2\x88\x85" : set_label(e.set))
       << "\\nrank " << e.rank << "\"];\n";
  }
  for (const auto& e : l.edges()) {
    os << "  z" << e.child << " -> z" << e.parent << " [label=\"" << e.label.to_string()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string lattice_to_text(const ZLattice& l) {
  std::ostringstream os;
  os << "n=" << l.ground_size() << " elements=" << l.size() << " height=" << l.height()
     << " bottom=" << l.bottom() << " top=" << l.top() << "\n";
  os << "id\trank\tnullity\tset\n";
  for (const auto& e : l.elements()) {
    os << e.id << "\t" << e.rank << "\t" << e.nullity << "\t" << e.set.to_string() << "\n";
  }
  os << "edges\n";
  for (const auto& e : l.edges()) {
    os << e.child << " -> " << e.parent << "\t" << e.label.to_string() << "\n";
  }
  return os.str();
}

namespace {

[[noreturn]] void malformed(int line, const std::string& msg) {
  throw ParseError(ParseErrorKind::Malformed, line,
                   (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + msg);
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    malformed(line, "expected an integer, found '" + tok + "'");
  }
  if (used != tok.size()) malformed(line, "expected an integer, found '" + tok + "'");
  return v;
}

}  // namespace

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  bool have_n = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    if (!have_n) {
      std::string tok;
      ss >> tok;
      if (tok.rfind("n=", 0) != 0) malformed(lineno, "first line must be n=<int>");
      p.n = parse_int(tok.substr(2), lineno);
      if (p.n < 0 || p.n > kMaxGround) {
        throw ParseError(ParseErrorKind::TooWide, lineno, "n must be between 0 and 64");
      }
      have_n = true;
      continue;
    }
    std::string set_tok, rank_tok, extra;
    if (!(ss >> set_tok >> rank_tok) || (ss >> extra)) {
      malformed(lineno, "expected '<set> <rank>'");
    }
    SubsetMask s;
    if (set_tok != "-") {
      std::istringstream parts(set_tok);
      std::string part;
      int prev = 0;
      while (std::getline(parts, part, ',')) {
        const int i = parse_int(part, lineno);
        if (i <= prev || i > p.n) malformed(lineno, "indices must ascend within 1..n");
        s = s.with(i - 1);
        prev = i;
      }
    }
    p.flats.push_back({s, parse_int(rank_tok, lineno)});
  }
  if (!have_n) throw ParseError(ParseErrorKind::Empty, 0, "empty presentation");
  return p;
}

Presentation parse_presentation_text(std::string_view text) {
  std::istringstream ss{std::string(text)};
  return parse_presentation(ss);
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream os;
  os << "n=" << p.n << "\n";
  for (const auto& z : p.flats) os << set_label(z.set) << " " << z.rank << "\n";
  return os.str();
}

Presentation presentation_from_lattice_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    Presentation p;
    p.n = j.at("n").get<int>();
    if (p.n < 0 || p.n > kMaxGround) {
      throw ParseError(ParseErrorKind::TooWide, 0, "n must be between 0 and 64");
    }
    for (const auto& e : j.at("elements")) {
      SubsetMask s;
      for (int i : e.at("set").get<std::vector<int>>()) {
        if (i < 1 || i > p.n) malformed(0, "set index out of range");
        s = s.with(i - 1);
      }
      p.flats.push_back({s, e.at("rank").get<int>()});
    }
    return p;
  } catch (const json::exception& e) {
    malformed(0, std::string("unexpected lattice JSON: ") + e.what());
  }
}

EdgeCensus edge_census(const ZLattice& l) {
  EdgeCensus c;
  std::map<int, int> rank, nullity;
  for (const auto& e : l.edges()) {
    switch (e.label.kind) {
      case EdgeKind::Elementary:
        ++c.elementary;
        break;
      case EdgeKind::Rank:
        ++rank[e.label.d_rho];
        break;
      case EdgeKind::Nullity:
        ++nullity[e.label.d_eta];
        break;
      case EdgeKind::Mixed:
        ++c.mixed;
        break;
    }
  }
  c.rank.assign(rank.begin(), rank.end());
  c.nullity.assign(nullity.begin(), nullity.end());
  return c;
}

bool AnalysisReport::verification_failed() const {
  for (const auto& v : verification) {
    if (!v.skipped && !v.passed) return true;
  }
  return false;
}

AnalysisReport analyze(const Matroid& m, bool verify) {
  AnalysisReport r;
  r.n = m.size();
  r.k = m.rank();
  r.nullity = m.nullity();
  r.loops = loops(m);
  r.isthmuses = isthmuses(m);
  if (r.k > 0) r.d = minimum_distance(m);
  r.lattice = build_zlattice(m);
  const ZLattice& l = r.lattice;
  r.binarity = is_binary_via_zlattice(m, l);
  r.census = edge_census(l);
  r.atoms = atoms(l);
  r.coatoms = coatoms(l);
  r.atomic = is_atomic(l);
  r.coatomic = is_coatomic(l);
  r.blunt = blunt_flags(m, l);
  if (r.binarity.binary && r.k > 0) {
    r.griesmer = griesmer_check(r.n, r.k, *r.d);
    r.residual_chain = griesmer_chain(m);
  }
  if (verify) r.verification = verify_analysis(m, l);
  return r;
}

namespace {

json census_json(const EdgeCensus& c) {
  json j;
  j["elementary"] = c.elementary;
  json rank = json::object();
  for (auto [jump, count] : c.rank) rank[std::to_string(jump)] = count;
  j["rank"] = std::move(rank);
  json nullity = json::object();
  for (auto [jump, count] : c.nullity) nullity[std::to_string(jump)] = count;
  j["nullity"] = std::move(nullity);
  j["mixed"] = c.mixed;
  return j;
}

json optional_set(const std::optional<SubsetMask>& s) {
  return s ? set_json(*s) : json(nullptr);
}

}  // namespace

std::string analysis_to_json(const AnalysisReport& r) {
  json j;
  json params;
  params["n"] = r.n;
  params["k"] = r.k;
  params["d"] = r.d ? json(*r.d) : json(nullptr);
  params["nullity"] = r.nullity;
  params["loops"] = set_json(r.loops);
  params["isthmuses"] = set_json(r.isthmuses);
  j["params"] = std::move(params);
  j["lattice"] = lattice_json(r.lattice);

  json bin;
  bin["binary"] = r.binarity.binary;
  bin["vacuous"] = r.binarity.vacuous;
  bin["witness_flat"] = optional_set(r.binarity.witness_flat);
  bin["witness_cyclic"] = optional_set(r.binarity.witness_cyclic);
  bin["witness_value"] = r.binarity.witness_value;
  j["binarity"] = std::move(bin);

  j["edge_census"] = census_json(r.census);
  j["atoms"] = r.atoms;
  j["coatoms"] = r.coatoms;
  j["atomic"] = r.atomic;
  j["coatomic"] = r.coatomic;

  json blunt = json::array();
  for (const auto& f : r.blunt.flags) {
    json o;
    o["id"] = f.id;
    o["blunt"] = f.blunt;
    o["witness_child"] = f.witness_child ? json(*f.witness_child) : json(nullptr);
    blunt.push_back(std::move(o));
  }
  j["blunt"] = std::move(blunt);
  json checks = json::array();
  for (const auto& c : r.blunt.checks) {
    json o;
    o["name"] = c.name;
    o["applicable"] = c.applicable;
    o["holds"] = c.holds;
    o["detail"] = c.detail;
    checks.push_back(std::move(o));
  }
  j["blunt_checks"] = std::move(checks);

  if (r.griesmer) {
    json g;
    g["bound"] = r.griesmer->bound;
    g["slack"] = r.griesmer->slack;
    j["griesmer"] = std::move(g);
  } else {
    j["griesmer"] = nullptr;
  }
  json chain = json::array();
  for (const auto& lvl : r.residual_chain) {
    json o;
    o["set"] = set_json(lvl.set);
    o["n"] = lvl.n;
    o["k"] = lvl.k;
    o["d"] = lvl.d;
    chain.push_back(std::move(o));
  }
  j["residual_chain"] = std::move(chain);
  if (!r.verification.empty()) {
    json ver = json::array();
    for (const auto& v : r.verification) {
      json o;
      o["name"] = v.name;
      o["status"] = v.skipped ? "skipped" : (v.passed ? "pass" : "fail");
      o["detail"] = v.detail;
      ver.push_back(std::move(o));
    }
    j["verification"] = std::move(ver);
  }
  return dump(j);
}

std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " k=" << r.k << " d=" << (r.d ? std::to_string(*r.d) : "-")
     << " nullity=" << r.nullity << "\n";
  os << "loops " << r.loops.to_string() << " isthmuses " << r.isthmuses.to_string() << "\n";
  os << "cyclic flats " << r.lattice.size() << ", height " << r.lattice.height() << "\n";
  os << "binary " << (r.binarity.binary ? "yes" : "no");
  if (r.binarity.vacuous) os << " (rank of 1_Z below 2)";
  if (r.binarity.witness_flat) {
    os << ", flat " << r.binarity.witness_flat->to_string() << " has "
       << r.binarity.witness_value << " flats above it";
  }
  os << "\n";
  os << "edges: elementary " << r.census.elementary;
  for (auto [jump, count] : r.census.rank) os << ", rank:" << jump << " " << count;
  for (auto [jump, count] : r.census.nullity) os << ", nullity:" << jump << " " << count;
  if (r.census.mixed > 0) os << ", mixed " << r.census.mixed;
  os << "\n";
  os << "atoms " << r.atoms.size() << (r.atomic ? " (atomic)" : "") << ", coatoms "
     << r.coatoms.size() << (r.coatomic ? " (coatomic)" : "") << "\n";
  int blunt = 0;
  for (const auto& f : r.blunt.flags) blunt += f.blunt ? 1 : 0;
  os << "blunt " << blunt << " of " << r.blunt.flags.size() << "\n";
  if (r.griesmer) {
    os << "griesmer bound " << r.griesmer->bound << ", slack " << r.griesmer->slack << "\n";
    os << "residual chain";
    for (const auto& lvl : r.residual_chain) {
      os << " (" << lvl.n << "," << lvl.k << "," << lvl.d << ")";
    }
    os << "\n";
  }
  os << "\n" << lattice_to_text(r.lattice);
  for (const auto& v : r.verification) {
    os << "verify " << v.name << ": " << (v.skipped ? "skipped" : (v.passed ? "pass" : "FAIL"));
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace cycflat
