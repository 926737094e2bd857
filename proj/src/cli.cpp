// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "noneven/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "noneven/digraph.hpp"
#include "noneven/errors.hpp"
#include "noneven/evenness.hpp"
#include "noneven/farkas.hpp"
#include "noneven/io.hpp"
#include "noneven/r10.hpp"

namespace noneven {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string output;
  std::optional<int> bound;
  int tu_order = kDefaultTuOrder;
  bool bond = false;
  bool serial = false;
  std::string method = "brute-force";
  std::string element;
  int n1 = 0, n2 = 0, n3 = 0;
};

struct Input {
  std::optional<Digraph> digraph;
  OrientedMatroid matroid;
};

void verify(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("certificate re-check failed: " + what);
}

int effective_bound(const Options& opt, int fallback, std::ostream& err) {
  if (!opt.bound) return fallback;
  if (*opt.bound > fallback) {
    err << "warning: --bound " << *opt.bound << " is above the default of "
        << fallback << "; exhaustive enumeration may be slow\n";
  }
  return *opt.bound;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_digraph(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string token;
    if (ls >> token) return token == "digraph";
  }
  return false;
}

Input load(const Options& opt) {
  const std::string text = read_file(opt.input);
  if (looks_like_digraph(text)) {
    Digraph d = parse_digraph_string(text);
    OrientedMatroid m = opt.bond ? bond_matroid(d) : graphic_matroid(d);
    return {std::move(d), std::move(m)};
  }
  TUMatrix rep = parse_tu_matrix_string(text);
  std::vector<std::string> labels;
  for (int j = 0; j < rep.cols(); ++j) labels.push_back("e" + std::to_string(j + 1));
  return {std::nullopt, OrientedMatroid::checked(std::move(rep), std::move(labels),
                                                 opt.tu_order)};
}

Digraph load_digraph(const Options& opt) {
  Input in = load(opt);
  if (!in.digraph) throw ParseError(opt.input + " is not a digraph file");
  return std::move(*in.digraph);
}

json labels(const OrientedMatroid& m, ElementSet s) { return m.labels_of(s); }

json family_labels(const OrientedMatroid& m, const std::vector<ElementSet>& f) {
  json out = json::array();
  for (ElementSet s : f) out.push_back(labels(m, s));
  return out;
}

// Odd number of members of `family` whose sum over GF(2) is empty.
std::optional<std::vector<ElementSet>> odd_zero_sum(
    const std::vector<ElementSet>& family, int n) {
  GF2Matrix a(n);
  for (ElementSet s : family) a.add_row(s);
  for (const GF2Vector& y : gf2_left_kernel(a)) {
    if (y.count() % 2 == 0) continue;
    std::vector<ElementSet> out;
    ElementSet sum;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (y.test(i)) {
        out.push_back(family[i]);
        sum ^= family[i];
      }
    }
    verify(sum.empty(), "odd family does not sum to zero");
    return out;
  }
  return std::nullopt;
}

json cmd_farkas(const Options& opt) {
  const OrientedMatroid m = load(opt).matroid;
  const int e = m.find(opt.element);
  if (e < 0) throw PreconditionError("unknown element " + opt.element);
  const FarkasCertificate cert = farkas_dichotomy(m, e);
  verify(cert.set.contains(e), "certificate misses the element");
  verify(cert.is_circuit() ? is_directed_circuit(m, cert.set)
                           : is_directed_cocircuit(m, cert.set),
         "farkas certificate");
  return {{"element", m.label(e)},
          {"kind", cert.is_circuit() ? "directed-circuit" : "directed-cocircuit"},
          {"set", labels(m, cert.set)},
          {"method", "exact-simplex"}};
}

json cmd_tc(const Options& opt) {
  const OrientedMatroid m = load(opt).matroid;
  const Minor tc = totally_cyclic_part(m);
  verify(is_totally_cyclic(tc.matroid), "totally cyclic part");
  const ElementSet kept = tc.lift(tc.matroid.ground());
  return {{"totally_cyclic_part", labels(m, kept)},
          {"removed", labels(m, m.ground() - kept)},
          {"method", "exact-simplex"}};
}

json cmd_basis(const Options& opt) {
  const OrientedMatroid m = load(opt).matroid;
  const Minor tc = totally_cyclic_part(m);
  const OrientedMatroid& t = tc.matroid;
  const BasisAndCover bc = directed_basis_and_cover(t);
  const auto& basis = bc.basis.circuits;
  verify(int(basis.size()) == t.size() - t.rank(), "basis size");
  GF2Matrix rows(t.size());
  for (ElementSet c : basis) {
    verify(is_directed_circuit(t, c), "basis member is not a directed circuit");
    verify((c & bc.cover.elements).size() % 2 == 1, "cover is even on a member");
    rows.add_row(c);
  }
  verify(gf2_rank(rows) == int(basis.size()), "basis is not independent");
  std::vector<ElementSet> lifted;
  for (ElementSet c : basis) lifted.push_back(tc.lift(c));
  return {{"totally_cyclic_part", labels(m, tc.lift(t.ground()))},
          {"basis", family_labels(m, lifted)},
          {"cover", labels(m, tc.lift(bc.cover.elements))},
          {"method", "recursive-construction"}};
}

json cmd_non_even(const Options& opt, std::ostream& err) {
  const OrientedMatroid m = load(opt).matroid;
  const int bound = effective_bound(opt, kDefaultEnumerationBound, err);
  const auto dirs = directed_circuits(m, bound);
  std::optional<bool> verdict;
  if (opt.method == "reduction") {
    verdict = decide_noneven_via_even_oracle(m, [bound](const OrientedMatroid& x) {
      return even_directed_circuit_bruteforce(x, bound).has_value();
    });
  }
  json out;
  if (const auto cover = non_even_bruteforce(m, bound)) {
    for (ElementSet c : dirs) {
      verify((c & cover->elements).size() % 2 == 1, "cover is even on a circuit");
    }
    out = {{"non_even", true}, {"cover", labels(m, cover->elements)}};
  } else {
    const auto witness = odd_zero_sum(dirs, m.size());
    verify(witness.has_value(), "no odd zero-sum family for an even host");
    out = {{"non_even", false}, {"odd_zero_sum", family_labels(m, *witness)}};
  }
  verify(!verdict || *verdict == out["non_even"].get<bool>(),
         "reduction disagrees with enumeration");
  out["method"] = opt.method;
  return out;
}

json cmd_even_circuit(const Options& opt, std::ostream& err) {
  const OrientedMatroid m = load(opt).matroid;
  const int bound = effective_bound(opt, kDefaultEnumerationBound, err);
  std::optional<bool> verdict;
  if (opt.method == "reduction") {
    verdict = detect_even_circuit_via_noneven_oracle(
        m, [bound](const OrientedMatroid& x) {
          return non_even_bruteforce(x, bound).has_value();
        });
  }
  const auto c = even_directed_circuit_bruteforce(m, bound);
  json out = {{"found", c.has_value()}, {"method", opt.method}};
  if (c) {
    verify(c->size() % 2 == 0 && is_directed_circuit(m, *c), "even directed circuit");
    out["circuit"] = labels(m, *c);
  }
  verify(!verdict || *verdict == c.has_value(), "reduction disagrees with enumeration");
  return out;
}

json cmd_odd_circuit(const Options& opt) {
  const OrientedMatroid m = load(opt).matroid;
  const auto c = find_odd_directed_circuit(m);
  json out = {{"found", c.has_value()}, {"method", "directed-basis"}};
  if (c) {
    verify(c->size() % 2 == 1 && is_directed_circuit(m, *c), "odd directed circuit");
    out["circuit"] = labels(m, *c);
  }
  return out;
}

json cmd_odd_dijoin(const Options& opt, std::ostream& err) {
  const Digraph d = load_digraph(opt);
  const int bound = effective_bound(opt, kDefaultVertexBound, err);
  const auto j = odd_dijoin(d, bound);
  json out = {{"found", j.has_value()}, {"method", "gf2-elimination"}};
  if (j) {
    verify(is_odd_dijoin(d, *j, bound), "odd dijoin");
    out["dijoin"] = d.edge_ids(*j);
  } else {
    const auto witness = odd_zero_sum(directed_bonds(d, bound), d.num_edges());
    verify(witness.has_value(), "no odd zero-sum family of directed bonds");
    json family = json::array();
    for (ElementSet s : *witness) family.push_back(d.edge_ids(s));
    out["odd_zero_sum"] = family;
  }
  return out;
}

const char* clause_name(DFamilyClause c) {
  switch (c) {
    case DFamilyClause::kNoEdges: return "no-edges";
    case DFamilyClause::kTwoLayer: return "two-layer";
    case DFamilyClause::kStar: return "star";
    case DFamilyClause::kDiamond: return "diamond";
    case DFamilyClause::kWide: return "wide";
  }
  return "";
}

json cmd_d_family(const Options& opt, std::ostream& err) {
  if (opt.n1 < 0 || opt.n2 < 0 || opt.n3 < 0) {
    throw PreconditionError("layer sizes must be non-negative");
  }
  const int bound = effective_bound(opt, kDefaultVertexBound, err);
  const DFamilyVerdict v = d_family_has_odd_dijoin(opt.n1, opt.n2, opt.n3);
  json out = {{"layers", {opt.n1, opt.n2, opt.n3}},
              {"has_odd_dijoin", v.has_odd_dijoin},
              {"clause", clause_name(v.clause)},
              {"method", "closed-form"}};
  if (v.has_odd_dijoin) {
    const Digraph d = build_D(opt.n1, opt.n2, opt.n3);
    if (d.num_vertices() <= bound) {
      const auto j = d_family_odd_dijoin_construct(opt.n1, opt.n2, opt.n3, bound);
      verify(j.has_value() && is_odd_dijoin(d, *j, bound), "constructed dijoin");
      out["dijoin"] = d.edge_ids(*j);
    }
  }
  return out;
}

json cmd_minimal_obstruction(const Options& opt, std::ostream& err) {
  const Digraph d = load_digraph(opt);
  const int bound = effective_bound(opt, kDefaultObstructionEdgeBound, err);
  const bool minimal = is_minimal_obstruction(d, bound);
  json out = {{"minimal_obstruction", minimal}, {"method", "one-step-cut-minors"}};
  if (const auto j = odd_dijoin(d)) {
    verify(!minimal && is_odd_dijoin(d, *j), "odd dijoin of a non-obstruction");
    out["dijoin"] = d.edge_ids(*j);
  }
  return out;
}

json cmd_r10(const Options& opt) {
  const R10Report r = verify_conjecture_on_r10(opt.serial ? Execution::kSerial
                                                          : Execution::kParallel);
  const OrientedMatroid ref = r10_reference();
  return {{"orientations_checked", r.orientations_checked},
          {"noneven_count", r.noneven_count},
          {"forbidden_free_count", r.forbidden_free_count},
          {"counterexamples", family_labels(ref, r.counterexamples)},
          {"converse_violations", family_labels(ref, r.converse_violations)},
          {"method", "exhaustive"}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientations of regular matroids and odd dijoins of digraphs",
               "noneven"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("input", opt.input, "TU matrix or digraph file")
          ->required()
          ->check(CLI::ExistingFile);
    }
    sub->add_option("--bound", opt.bound, "enumeration bound")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tu-order", opt.tu_order, "largest minor order checked for TU")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", "JSON output (the only mode)");
    sub->add_option("-o,--output", opt.output, "write JSON here");
    sub->add_flag("--bond", opt.bond, "use the bond matroid of a digraph input");
  };
  auto method = [&](CLI::App* sub) {
    sub->add_option("--method", opt.method, "brute-force or reduction")
        ->check(CLI::IsMember({"brute-force", "reduction"}));
  };

  auto* farkas = app.add_subcommand("farkas", "directed circuit or cocircuit through an element");
  farkas->add_option("element", opt.element, "element label")->required();
  common(farkas, true);
  auto* tc = app.add_subcommand("tc", "totally cyclic part");
  common(tc, true);
  auto* basis = app.add_subcommand("basis", "directed circuit basis and parity cover");
  common(basis, true);
  auto* non_even = app.add_subcommand("non-even", "non-evenness with certificate");
  common(non_even, true);
  method(non_even);
  auto* even = app.add_subcommand("even-circuit", "an even directed circuit");
  common(even, true);
  method(even);
  auto* odd = app.add_subcommand("odd-circuit", "an odd directed circuit");
  common(odd, true);
  auto* dijoin = app.add_subcommand("odd-dijoin", "odd dijoin of a digraph");
  common(dijoin, true);
  auto* dfam = app.add_subcommand("d-family", "closed form for D(n1, n2, n3)");
  dfam->add_option("n1", opt.n1)->required();
  dfam->add_option("n2", opt.n2)->required();
  dfam->add_option("n3", opt.n3)->required();
  common(dfam, false);
  auto* obstruction = app.add_subcommand("minimal-obstruction",
                                         "minimal obstruction test for a digraph");
  common(obstruction, true);
  auto* r10 = app.add_subcommand("r10-verify", "sweep all orientations of R10");
  r10->add_flag("--serial", opt.serial, "use the serial reference sweep");
  common(r10, false);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    json result;
    CLI::App* sub = app.get_subcommands().front();
    if (sub == farkas) result = cmd_farkas(opt);
    else if (sub == tc) result = cmd_tc(opt);
    else if (sub == basis) result = cmd_basis(opt);
    else if (sub == non_even) result = cmd_non_even(opt, err);
    else if (sub == even) result = cmd_even_circuit(opt, err);
    else if (sub == odd) result = cmd_odd_circuit(opt);
    else if (sub == dijoin) result = cmd_odd_dijoin(opt, err);
    else if (sub == dfam) result = cmd_d_family(opt, err);
    else if (sub == obstruction) result = cmd_minimal_obstruction(opt, err);
    else result = cmd_r10(opt);
    result["command"] = sub->get_name();

    const std::string text = result.dump(2) + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.output);
      if (!file) throw ParseError("cannot write " + opt.output);
      file << text;
    }
    return kExitOk;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBoundExceeded;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const NotTotallyUnimodular& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace noneven
