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

#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "lagmap/delta_matroid.hpp"
#include "lagmap/error.hpp"
#include "lagmap/homology.hpp"
#include "lagmap/map_io.hpp"
#include "lagmap/peeler.hpp"
#include "lagmap/topology.hpp"

namespace lagmap::cli {
namespace {

constexpr char kFormatVersion[] = "v1";

std::string Header(const std::string& command) {
  return std::string("# lagmap ") + command + " " + kFormatVersion + "\n";
}

void RequireEnumerable(const CombinatorialMap& map, int max_edges) {
  if (map.num_edges() > max_edges) {
    throw InvalidArgument("map has " + std::to_string(map.num_edges()) +
                          " edges; exhaustive commands are limited to " +
                          std::to_string(max_edges) + " (raise --max-edges)");
  }
}

std::string ColumnLabels(int n) {
  std::string out = "# columns:";
  for (int i = 1; i <= n; ++i) out += " " + std::to_string(i);
  for (int i = 1; i <= n; ++i) out += " " + std::to_string(i) + "*";
  return out + "\n";
}

std::vector<int> ParseOrder(const std::string& text) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      order.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad --order item '" + item + "'");
    }
  }
  return order;
}

struct Options {
  std::string file;
  std::string oracle = "topo";
  std::string field;
  int max_edges = 6;
  std::string order;
  int start = 0;
  std::string prefer = "edge";
  bool trace = false;
  int edge = 0;
};

Field DefaultField(const CombinatorialMap& map, const std::string& requested) {
  if (!requested.empty()) return ParseField(requested);
  return map.mode() == Mode::kSigned ? Field::kGf2 : Field::kRationals;
}

int Info(const Options& o, std::ostream& out) {
  const MapInfo info = GetMapInfo(LoadMap(o.file));
  out << Header("info");
  out << "vertices " << info.num_vertices << "\n"
      << "edges " << info.num_edges << "\n"
      << "faces " << info.num_faces << "\n"
      << "euler_characteristic " << info.euler_characteristic << "\n"
      << "genus " << info.genus << "\n"
      << "orientable " << (info.orientable ? "true" : "false") << "\n";
  return kOk;
}

int Dual(const Options& o, std::ostream& out) {
  out << Header("map") << WriteMap(DualMap(LoadMap(o.file)));
  return kOk;
}

int Bases(const Options& o, std::ostream& out, std::ostream& err) {
  const CombinatorialMap map = LoadMap(o.file);
  RequireEnumerable(map, o.max_edges);
  if (o.oracle != "topo" && o.oracle != "minor" && o.oracle != "both") {
    throw InvalidArgument("--oracle must be topo, minor or both");
  }
  out << Header("bases");
  if (o.oracle == "topo") {
    out << WriteBases(EnumerateBases(map));
    return kOk;
  }
  Field field = DefaultField(map, o.field);
  if (map.mode() == Mode::kSigned && field == Field::kRationals) {
    out << "# notice: signed map, minor oracle uses f2\n";
    field = Field::kGf2;
  }
  const BasisFamily minor =
      MatroidFromRepresentation(BuildRepresentation(map, field));
  if (o.oracle == "both") {
    const BasisFamily topo = EnumerateBases(map);
    if (!(topo == minor)) {
      err << "oracle mismatch\ntopological:\n"
          << WriteBases(topo) << "minor (" << FieldName(field) << "):\n"
          << WriteBases(minor);
      return kCheckFailed;
    }
  }
  out << WriteBases(minor);
  return kOk;
}

int Represent(const Options& o, std::ostream& out) {
  const CombinatorialMap map = LoadMap(o.file);
  const Representation rep = BuildRepresentation(map, DefaultField(map, o.field));
  out << Header("represent") << ColumnLabels(rep.n()) << WriteMatrix(rep.matrix());
  return kOk;
}

int Check(const Options& o, std::ostream& out) {
  const CombinatorialMap map = LoadMap(o.file);
  RequireEnumerable(map, o.max_edges);
  const int n = map.num_edges();
  const Field field = map.mode() == Mode::kSigned ? Field::kGf2
                                                   : Field::kRationals;
  bool all_ok = true;
  auto line = [&](bool ok, const std::string& name, const std::string& detail) {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  };
  out << Header("check");

  const GroundSet ground(n);
  const std::vector<CutSet> maximal =
      MaximalIndependentSets(ground, TopologicalOracle(map));
  bool sizes_ok = !maximal.empty();
  for (const CutSet& s : maximal) sizes_ok = sizes_ok && s.size() == n;
  line(sizes_ok, "cardinality-n",
       std::to_string(maximal.size()) + " maximal independent sets");
  if (!sizes_ok) return kCheckFailed;

  const BasisFamily topo(n, maximal);
  const auto violation = FindExchangeViolation(topo);
  line(!violation, "exchange",
       violation ? "A={" + violation->a.to_string() + "} B={" +
                       violation->b.to_string() +
                       "} k=" + violation->k.to_string()
                 : std::to_string(topo.size()) + " bases");

  const bool even = IsEven(topo);
  if (map.orientable()) {
    line(even, "evenness", even ? "starred counts agree mod 2"
                                : "starred counts differ mod 2");
  } else {
    out << "SKIP evenness: " << (even ? "even" : "not even")
        << "; only required on orientable surfaces\n";
  }

  const SpineGraph spine = BuildSpine(map);
  std::vector<IncidenceVector> vectors;
  for (const Cycle& c : CycleBasis(spine)) vectors.push_back(Incidence(spine, c));
  int nonzero = 0;
  for (const auto& u : vectors) {
    for (const auto& v : vectors) {
      if (PairProduct(u, v, field) != 0) ++nonzero;
    }
  }
  line(nonzero == 0, "isotropy",
       std::to_string(vectors.size()) + " cycles over " + FieldName(field) +
           (nonzero ? ", " + std::to_string(nonzero) + " nonzero products"
                    : ""));

  const BasisFamily minor =
      MatroidFromRepresentation(BuildRepresentation(map, field));
  line(minor == topo, "oracle-agreement",
       "minor bases over " + FieldName(field) +
           (minor == topo ? " equal topological bases"
                          : " differ from topological bases"));
  return all_ok ? kOk : kCheckFailed;
}

int GreedyCommand(const Options& o, std::ostream& out) {
  const CombinatorialMap map = LoadMap(o.file);
  const CutSet basis = Greedy(GroundSet(map.num_edges()), TopologicalOracle(map),
                              Ordering(ParseOrder(o.order)));
  out << Header("greedy") << basis.to_string() << "\n";
  return kOk;
}

int PeelCommand(const Options& o, std::ostream& out, std::ostream& err) {
  const CombinatorialMap map = LoadMap(o.file);
  RequireEnumerable(map, o.max_edges);
  if (o.prefer != "edge" && o.prefer != "coedge") {
    throw InvalidArgument("--prefer must be edge or coedge");
  }
  const PeelTrace trace =
      Peel(map, Flag{o.start},
           o.prefer == "edge" ? Preference::kEdge : Preference::kCoedge);
  out << Header("peel") << WriteTrace(trace, o.trace);
  const TraceReport report = VerifyTrace(map, trace);
  for (const auto& p : report.problems) err << "trace: " << p << "\n";
  return report.ok() ? kOk : kCheckFailed;
}

int Contract(const Options& o, std::ostream& out) {
  out << Header("map") << WriteMap(ContractEdge(LoadMap(o.file), o.edge));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lagrangian matroids of maps on closed surfaces", "lagmap"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("map", o.file, "map file")->required()->check(
        CLI::ExistingFile);
  };
  auto* info = app.add_subcommand("info", "vertex, face and genus counts");
  add_file(info);
  auto* dual = app.add_subcommand("dual", "print the dual map");
  add_file(dual);
  auto* bases = app.add_subcommand("bases", "list the bases");
  add_file(bases);
  bases->add_option("--oracle", o.oracle, "topo, minor or both");
  bases->add_option("--field", o.field, "q or f2 for the minor oracle");
  bases->add_option("--max-edges", o.max_edges, "enumeration limit");
  auto* represent = app.add_subcommand("represent",
                                       "canonical orthogonal representation");
  add_file(represent);
  represent->add_option("--field", o.field, "q or f2");
  auto* check = app.add_subcommand("check", "verify the structural properties");
  add_file(check);
  check->add_option("--max-edges", o.max_edges, "enumeration limit");
  auto* greedy = app.add_subcommand("greedy", "greedy basis for an ordering");
  add_file(greedy);
  greedy->add_option("--order", o.order, "comma separated permutation of 1..n")
      ->required();
  auto* peel = app.add_subcommand("peel", "peel the surface into a ribbon");
  add_file(peel);
  peel->add_option("--start", o.start, "start flag id");
  peel->add_option("--prefer", o.prefer, "edge or coedge");
  peel->add_flag("--trace", o.trace, "print every step");
  peel->add_option("--max-edges", o.max_edges, "enumeration limit");
  auto* contract = app.add_subcommand("contract", "contract a non-loop edge");
  add_file(contract);
  contract->add_option("--edge", o.edge, "edge index")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "lagmap: " << e.what() << "\n";
    return kUsageError;
  }

  std::ostringstream buffer;
  try {
    int code = kOk;
    if (info->parsed()) code = Info(o, buffer);
    else if (dual->parsed()) code = Dual(o, buffer);
    else if (bases->parsed()) code = Bases(o, buffer, err);
    else if (represent->parsed()) code = Represent(o, buffer);
    else if (check->parsed()) code = Check(o, buffer);
    else if (greedy->parsed()) code = GreedyCommand(o, buffer);
    else if (peel->parsed()) code = PeelCommand(o, buffer, err);
    else if (contract->parsed()) code = Contract(o, buffer);
    out << buffer.str();
    return code;
  } catch (const PropertyViolation& e) {
    out << buffer.str();
    err << "lagmap: property violated: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "lagmap: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace lagmap::cli
