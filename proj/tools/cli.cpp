#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cycflat/binary.hpp"
#include "cycflat/error.hpp"
#include "cycflat/flats.hpp"
#include "cycflat/minors.hpp"
#include "cycflat/report.hpp"
#include "cycflat/verify.hpp"

namespace cycflat::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string input;
  std::vector<int> uniform;
  std::string format = "json";
  bool verify = false;
  std::string minor_x;
  std::string minor_y;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream f(path);
  if (!f) throw ParseError(ParseErrorKind::Empty, 0, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

enum class InputKind { Matrix, Presentation, LatticeJson };

InputKind sniff(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == '{') return InputKind::LatticeJson;
    if (line.compare(first, 2, "n=") == 0) return InputKind::Presentation;
    return InputKind::Matrix;
  }
  return InputKind::Matrix;
}

Presentation read_presentation(const std::string& text) {
  return sniff(text) == InputKind::LatticeJson ? presentation_from_lattice_json(text)
                                                : parse_presentation_text(text);
}

Matroid load_matroid(const Options& o) {
  if (!o.uniform.empty()) {
    if (!o.input.empty()) throw PreconditionError("give either --input or --uniform, not both");
    return Matroid::uniform(o.uniform[0], o.uniform[1]);
  }
  if (o.input.empty()) throw PreconditionError("no input: use --input FILE or --uniform N K");
  const std::string text = read_input(o.input);
  switch (sniff(text)) {
    case InputKind::Matrix:
      return Matroid::from_matrix(parse_matrix_text(text));
    case InputKind::Presentation:
    case InputKind::LatticeJson: {
      Presentation p = read_presentation(text);
      return matroid_from_cyclic_flats(p.n, std::move(p.flats));
    }
  }
  throw PreconditionError("unreadable input");
}

SubsetMask parse_set_arg(const std::string& s, int n) {
  if (s.empty() || s == "-") return SubsetMask();
  std::vector<int> idx;
  std::istringstream parts(s);
  std::string part;
  while (std::getline(parts, part, ',')) {
    int i = 0;
    try {
      i = std::stoi(part);
    } catch (const std::exception&) {
      throw ParseError(ParseErrorKind::Malformed, 0, "bad set '" + s + "'");
    }
    if (i < 1 || i > n) throw ParseError(ParseErrorKind::Malformed, 0, "index out of range in '" + s + "'");
    idx.push_back(i);
  }
  return SubsetMask::of(idx);
}

json set_json(SubsetMask s) { return json(s.one_based()); }
json opt_set(const std::optional<SubsetMask>& s) { return s ? set_json(*s) : json(nullptr); }

int report_verification(const std::vector<VerifyItem>& items, std::ostream& err) {
  bool failed = false;
  for (const auto& v : items) {
    if (!v.skipped && !v.passed) failed = true;
    err << "verify " << v.name << ": "
        << (v.skipped ? "skipped" : (v.passed ? "pass" : "FAIL"));
    if (!v.detail.empty()) err << " (" << v.detail << ")";
    err << "\n";
  }
  return failed ? kViolation : kOk;
}

void emit(const json& j, const std::string& text, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_lattice(const Options& o, std::ostream& out, std::ostream& err) {
  const Matroid m = load_matroid(o);
  const ZLattice l = build_zlattice(m);
  if (o.format == "dot") {
    out << lattice_to_dot(l);
  } else if (o.format == "text") {
    out << lattice_to_text(l);
  } else {
    out << lattice_to_json(l);
  }
  return o.verify ? report_verification(verify_analysis(m, l), err) : kOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream&) {
  const Matroid m = load_matroid(o);
  const AnalysisReport r = analyze(m, o.verify);
  if (o.format == "dot") {
    out << lattice_to_dot(r.lattice);
  } else if (o.format == "text") {
    out << analysis_to_text(r);
  } else {
    out << analysis_to_json(r);
  }
  return r.verification_failed() ? kViolation : kOk;
}

int cmd_axioms(const Options& o, std::ostream& out, std::ostream&) {
  if (o.input.empty()) throw PreconditionError("axioms needs --input FILE");
  const Presentation p = read_presentation(read_input(o.input));
  const AxiomReport r = verify_z_axioms(p.n, p.flats);
  json j;
  j["ok"] = r.ok;
  j["axiom"] = r.ok ? json(nullptr) : json(r.axiom);
  j["x"] = opt_set(r.x);
  j["y"] = opt_set(r.y);
  j["detail"] = r.detail;
  std::ostringstream text;
  if (r.ok) {
    text << "axioms hold\n";
  } else {
    text << "axiom " << r.axiom << " fails";
    if (r.x) text << " at " << r.x->to_string();
    if (r.y) text << ", " << r.y->to_string();
    text << ": " << r.detail << "\n";
  }
  if (r.ok) {
    const ZLattice l = ZLattice::from_family(p.n, p.flats);
    if (o.format == "dot") {
      out << lattice_to_dot(l);
      return kOk;
    }
    j["lattice"] = json::parse(lattice_to_json(l));
    text << lattice_to_text(l);
  }
  emit(j, text.str(), o, out);
  return r.ok ? kOk : kViolation;
}

int cmd_binary(const Options& o, std::ostream& out, std::ostream& err) {
  const Matroid m = load_matroid(o);
  const ZLattice l = build_zlattice(m);
  const BinarityVerdict v = is_binary_via_zlattice(m, l);
  const Rank2MinorBound b = max_rank2_uniform_minor(m, l);
  json j;
  j["binary"] = v.binary;
  j["vacuous"] = v.vacuous;
  j["witness_flat"] = opt_set(v.witness_flat);
  j["witness_cyclic"] = opt_set(v.witness_cyclic);
  j["witness_value"] = v.witness_value;
  j["max_rank2_uniform_minor"] = b.n_max;
  j["max_rank2_status"] = b.status == BoundStatus::Computed ? "computed" : "rank_too_small";
  std::ostringstream text;
  text << (v.binary ? "binary" : "not binary");
  if (v.vacuous) text << " (rank of 1_Z below 2)";
  if (v.witness_flat) {
    text << ": flat " << v.witness_flat->to_string() << " lies under " << v.witness_value
         << " flats of the next rank inside 1_Z";
  }
  text << "\nlargest U_n^2 minor: n = " << b.n_max << "\n";
  int code = kOk;
  if (o.verify) {
    const auto u = find_u4_2_minor(m);
    j["u42_minor"] = u ? json{{"x", set_json(u->x)}, {"y", set_json(u->y)}} : json(nullptr);
    if (u) text << "U_4^2 = M|" << u->y.to_string() << "/" << u->x.to_string() << "\n";
    if (u.has_value() == v.binary) {
      err << "verify binarity: FAIL (direct search disagrees)\n";
      code = kViolation;
    } else {
      err << "verify binarity: pass\n";
    }
  }
  emit(j, text.str(), o, out);
  return code;
}

int cmd_minors(const Options& o, std::ostream& out, std::ostream&) {
  const Matroid m = load_matroid(o);
  const ZLattice l = build_zlattice(m);
  json j;
  std::ostringstream text;
  json edges = json::array();
  for (const auto& e : l.edges()) {
    const UniformVerdict v = uniform_minor_from_edge(m, l, e.child, e.parent);
    edges.push_back({{"child", e.child}, {"parent", e.parent}, {"n", v.n}, {"k", v.k}});
    text << l[e.child].set.to_string() << " < " << l[e.parent].set.to_string() << ": U_" << v.n
         << "^" << v.k << "\n";
  }
  j["edge_minors"] = std::move(edges);
  const Rank2MinorBound b2 = max_rank2_uniform_minor(m, l);
  const Rank2MinorBound bd = max_corank2_uniform_minor(m);
  j["max_rank2_uniform_minor"] = b2.n_max;
  j["max_corank2_uniform_minor"] = bd.n_max;
  text << "largest U_n^2: " << b2.n_max << ", largest U_n^(n-2): " << bd.n_max << "\n";
  if (!o.minor_x.empty() || !o.minor_y.empty()) {
    const SubsetMask x = parse_set_arg(o.minor_x, m.size());
    const SubsetMask y = o.minor_y.empty() ? m.ground() : parse_set_arg(o.minor_y, m.size());
    const UniformVerdict v = is_minor_uniform(m, l, x, y);
    j["minor"] = {{"x", set_json(x)},
                  {"y", set_json(y)},
                  {"uniform", v.is_uniform},
                  {"n", v.n},
                  {"k", v.k},
                  {"route", to_string(v.route)},
                  {"reason", v.reason},
                  {"witness", opt_set(v.witness)}};
    text << "M|" << y.to_string() << "/" << x.to_string() << ": "
         << (v.is_uniform ? "uniform" : "not uniform") << " (" << to_string(v.route) << ")";
    if (!v.is_uniform) text << ", " << v.reason;
    text << "\n";
  }
  emit(j, text.str(), o, out);
  return kOk;
}

int cmd_residual(const Options& o, std::ostream& out, std::ostream&) {
  const Matroid m = load_matroid(o);
  const ResidualResult r = residual_set(m);
  json j{{"set", set_json(r.set)},
         {"n", r.n},
         {"k", r.k},
         {"d", r.d},
         {"case", to_string(r.rcase)}};
  std::ostringstream text;
  text << r.set.to_string() << " (" << r.n << "," << r.k << "," << r.d << ") "
       << to_string(r.rcase) << "\n";
  emit(j, text.str(), o, out);
  return kOk;
}

int cmd_griesmer(const Options& o, std::ostream& out, std::ostream&) {
  const Matroid m = load_matroid(o);
  const auto chain = griesmer_chain(m);
  const GriesmerBound g = griesmer_check(chain[0].n, chain[0].k, chain[0].d);
  json levels = json::array();
  std::ostringstream text;
  text << "n=" << chain[0].n << " k=" << chain[0].k << " d=" << chain[0].d << " bound=" << g.bound
       << " slack=" << g.slack << "\n";
  for (const auto& lvl : chain) {
    levels.push_back({{"set", set_json(lvl.set)}, {"n", lvl.n}, {"k", lvl.k}, {"d", lvl.d}});
    text << lvl.set.to_string() << " (" << lvl.n << "," << lvl.k << "," << lvl.d << ")\n";
  }
  json j{{"n", chain[0].n},   {"k", chain[0].k}, {"d", chain[0].d},
         {"bound", g.bound}, {"slack", g.slack}, {"chain", std::move(levels)}};
  emit(j, text.str(), o, out);
  return g.slack < 0 ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattices of cyclic flats of matroids"};
  app.set_help_flag("-h,--help", "Print help and exit");
  Options o;
  app.add_option("command", o.command, "lattice|analyze|axioms|binary|minors|residual|griesmer")
      ->required()
      ->check(CLI::IsMember(
          {"lattice", "analyze", "axioms", "binary", "minors", "residual", "griesmer"}));
  app.add_option("--input", o.input, "Matrix, presentation or lattice JSON file ('-' = stdin)");
  app.add_option("--uniform", o.uniform, "Uniform matroid U_N^K")->expected(2);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_flag("--verify", o.verify, "Cross-check results by brute force");
  app.add_option("--x", o.minor_x, "minors: contracted set, e.g. 1,2");
  app.add_option("--y", o.minor_y, "minors: kept set (default E)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (o.command == "lattice") return cmd_lattice(o, out, err);
    if (o.command == "analyze") return cmd_analyze(o, out, err);
    if (o.command == "axioms") return cmd_axioms(o, out, err);
    if (o.command == "binary") return cmd_binary(o, out, err);
    if (o.command == "minors") return cmd_minors(o, out, err);
    if (o.command == "residual") return cmd_residual(o, out, err);
    return cmd_griesmer(o, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const GuardExceeded& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InvariantViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace cycflat::cli
