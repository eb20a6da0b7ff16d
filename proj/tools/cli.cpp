// Copyright 2026 The gzeta Authors
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gzeta/charpoly.hpp"
#include "gzeta/cycle_oracle.hpp"
#include "gzeta/error.hpp"
#include "gzeta/graph_io.hpp"
#include "gzeta/spectral.hpp"
#include "gzeta/walk_operators.hpp"
#include "gzeta/zeta.hpp"

namespace gzeta::cli {

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return buffer;
}

namespace {

using nlohmann::json;

// A double rounded to 15 significant digits; nlohmann prints the shortest
// round-trip form, which is then at most 15 digits.
double json_number(double x) { return std::stod(format_double(x)); }

const std::map<std::string, ZetaKind> kZetaKinds{{"grover", ZetaKind::grover},
                                                  {"ihara", ZetaKind::ihara}};

struct Options {
  unsigned workers = 1;
  bool json = false;

  // gen
  std::string family;
  int size = 0;
  int dimension = 0;
  std::string out_path;

  std::string graph_path;
  std::string which;
  std::string route = "P";
  std::string torus_which = "grover";

  std::size_t order = 0;
  double u = 0.0;
  int grid = 0;
  std::vector<int> sizes;
  std::optional<int> reference_grid;
  bool allow_large_dimension = false;
};

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int run_gen(const Options& o, std::ostream& out) {
  Family f;
  if (o.family == "cycle")
    f = Family::cycle(o.size);
  else if (o.family == "torus")
    f = Family::torus(o.dimension, o.size);
  else if (o.family == "complete")
    f = Family::complete(o.size);
  else if (o.family == "petersen")
    f = Family::petersen();
  else
    f = Family::hypercube(o.dimension);
  const Graph g = build_family(f);
  if (o.out_path.empty()) {
    emit_json(out, graph_to_json(g));
  } else {
    save_graph(g, o.out_path);
    if (o.json)
      emit_json(out, {{"written", o.out_path}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}});
    else
      out << "wrote " << to_string(g.family()) << " (" << g.num_vertices() << " vertices, "
          << g.num_edges() << " edges) to " << o.out_path << '\n';
  }
  return kExitOk;
}

int run_matrix_dump(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const ArcSpace arcs(g);
  RatMatrix m;
  if (o.which == "A")
    m = adjacency(g);
  else if (o.which == "D")
    m = degree_matrix(g);
  else if (o.which == "P")
    m = transition(g);
  else if (o.which == "L")
    m = laplacian(g);
  else if (o.which == "S")
    m = shift(arcs);
  else if (o.which == "C")
    m = coin(g, arcs);
  else if (o.which == "U")
    m = grover(g, arcs);
  else
    m = positive_support(grover(g, arcs));
  emit_json(out, matrix_to_json(m));
  return kExitOk;
}

int run_charpoly(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  Poly p;
  if (o.which == "grover")
    p = grover_zeta_reciprocal(g, o.workers);
  else if (o.which == "grover-plus")
    p = ihara_reciprocal_edge(g, o.workers);
  else if (o.which == "bass")
    p = ihara_reciprocal_bass(g, o.workers);
  else
    p = det_i_minus_u(shift(ArcSpace(g)), o.workers);
  if (o.json)
    emit_json(out, poly_to_json(p));
  else
    out << to_string(p) << '\n';
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const KonnoSatoReport report = konno_sato_check(g, o.workers);
  if (o.json) {
    emit_json(out, report_to_json(report));
  } else {
    out << "graph " << report.family << ": " << report.num_vertices << " vertices, "
        << report.num_edges << " edges, degree " << report.degree
        << (report.claimed_vertex_transitive ? ", vertex-transitive" : "") << '\n';
    for (std::size_t i = 0; i < report.identities.size(); ++i) {
      const auto& id = report.identities[i];
      out << "identity (" << i + 1 << "): " << (id.holds ? "holds" : "FAILS") << '\n';
      if (!id.holds) {
        out << "  lhs = " << to_string(*id.lhs) << '\n';
        out << "  rhs = " << to_string(*id.rhs) << '\n';
      }
    }
  }
  return report.all_hold() ? kExitOk : kExitIdentityFailure;
}

int run_series(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  SeriesCoefficients s;
  if (o.which == "grover")
    s = weighted_cycle_counts(g, o.order, o.workers);
  else if (o.which == "ihara")
    s = reduced_cycle_counts(g, o.order, o.workers);
  else if (o.which == "oracle-weighted")
    s = cycle_oracle(g, o.order, OracleMode::weighted, o.workers);
  else
    s = cycle_oracle(g, o.order, OracleMode::reduced, o.workers);
  emit_json(out, series_to_json(s));
  return kExitOk;
}

int run_zeta_eval(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph_path);
  const ZetaKind kind = kZetaKinds.at(o.which);
  double value;
  if (o.route == "det")
    value = determinant_route_zeta(g, o.u, kind, o.workers);
  else
    value = spectral_zeta_eval(
        g, o.u, kind, o.route == "P" ? SpectralRoute::transition : SpectralRoute::laplacian);
  if (o.json)
    emit_json(out, {{"value", json_number(value)}, {"u", json_number(o.u)}, {"which", o.which},
                    {"route", o.route}});
  else
    out << format_double(value) << '\n';
  return kExitOk;
}

int run_torus_limit(const Options& o, std::ostream& out) {
  const TorusOptions topts{o.workers, o.allow_large_dimension};
  const TorusZeta z = limit_integral(o.dimension, o.u, o.grid, kZetaKinds.at(o.torus_which), topts);
  if (o.json)
    emit_json(out, {{"value", json_number(z.value)}, {"grid", o.grid},
                    {"prefactor", json_number(z.prefactor)}});
  else
    out << format_double(z.value) << '\n';
  return kExitOk;
}

int run_converge(const Options& o, std::ostream& out) {
  const TorusOptions topts{o.workers, o.allow_large_dimension};
  const ConvergenceStudy study = convergence_study(o.dimension, o.u, o.sizes,
                                                   kZetaKinds.at(o.torus_which), o.reference_grid, topts);
  if (o.json) {
    json rows = json::array();
    for (const auto& r : study.rows)
      rows.push_back({{"N", r.n}, {"value", json_number(r.value)},
                      {"abs_error", json_number(r.abs_error)}});
    emit_json(out, {{"reference", json_number(study.reference)},
                    {"reference_grid", study.reference_grid},
                    {"rows", std::move(rows)}});
  } else {
    out << "N,value,abs_error\n";
    for (const auto& r : study.rows)
      out << r.n << ',' << format_double(r.value) << ',' << format_double(r.abs_error) << '\n';
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Grover-walk operators, exact Ihara-type zeta functions and torus limits", "gzeta"};
  app.require_subcommand(1);
  app.add_option("--workers", o.workers, "Worker threads for data-parallel steps")
      ->check(CLI::Range(1u, 1024u));

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_which = [&](CLI::App* sub, std::vector<std::string> choices, const char* help) {
    sub->add_option("--which", o.which, help)->required()->check(CLI::IsMember(choices));
  };

  auto* gen = app.add_subcommand("gen", "Write a built-in graph family as graph JSON");
  gen->add_option("--family", o.family, "Family name")
      ->required()
      ->check(CLI::IsMember({"cycle", "torus", "complete", "petersen", "hypercube"}));
  gen->add_option("--N,--n", o.size, "Cycle length, torus side, or complete-graph order");
  gen->add_option("--d", o.dimension, "Torus or hypercube dimension");
  gen->add_option("--out", o.out_path, "Output file (default: standard output)");
  add_json(gen);

  auto* matrix = app.add_subcommand("matrix", "Matrix operations");
  matrix->require_subcommand(1);
  auto* dump = matrix->add_subcommand("dump", "Dump an exact operator as JSON");
  add_graph(dump);
  add_which(dump, {"A", "D", "P", "L", "S", "C", "U", "U+"},
            "A, D, P, L (Laplacian), S, C, U or U+");
  add_json(dump);

  auto* charpoly = app.add_subcommand("charpoly", "Exact reciprocal zeta polynomial");
  add_graph(charpoly);
  charpoly->add_option("--matrix", o.which, "grover: det(I-uU); grover-plus: det(I-uU+); "
                                            "bass: Ihara-Bass; shift: det(I-uS)")
      ->required()
      ->check(CLI::IsMember({"grover", "grover-plus", "bass", "shift"}));
  add_json(charpoly);

  auto* verify = app.add_subcommand("verify", "Verify identities");
  verify->require_subcommand(1);
  auto* ks = verify->add_subcommand("konno-sato", "Check the four determinant factorizations");
  add_graph(ks);
  add_json(ks);

  auto* series = app.add_subcommand("series", "Cycle-count series N_1..N_K");
  add_graph(series);
  series->add_option("--order", o.order, "K")->required()->check(CLI::PositiveNumber);
  add_which(series, {"grover", "ihara", "oracle-weighted", "oracle-reduced"},
            "grover: Tr U^r; ihara: Tr (U+)^r; oracle-*: brute-force enumeration");
  add_json(series);

  auto* zeta_eval = app.add_subcommand("zeta-eval", "Evaluate a generalized zeta reciprocal at real u");
  add_graph(zeta_eval);
  zeta_eval->add_option("--u", o.u, "Real argument")->required();
  add_which(zeta_eval, {"grover", "ihara"}, "grover or ihara");
  zeta_eval->add_option("--route", o.route, "P or Delta (eigenvalues) or det (exact polynomial)")
      ->check(CLI::IsMember({"P", "Delta", "det"}));
  add_json(zeta_eval);

  auto add_torus = [&](CLI::App* sub) {
    sub->add_option("--d", o.dimension, "Torus dimension")->required();
    sub->add_option("--u", o.u, "Real argument")->required();
    sub->add_option("--which", o.torus_which, "grover (default) or ihara")
        ->check(CLI::IsMember({"grover", "ihara"}));
    sub->add_flag("--allow-large-d", o.allow_large_dimension,
                  "Permit d above " + std::to_string(kMaxTorusDimension));
    add_json(sub);
  };
  auto* torus_limit = app.add_subcommand("torus-limit", "N -> infinity torus limit by quadrature");
  add_torus(torus_limit);
  torus_limit->add_option("--grid", o.grid, "Trapezoid points per axis (>= 8)")->required();

  auto* converge = app.add_subcommand("converge", "Finite-torus values against the limit (CSV)");
  add_torus(converge);
  converge->add_option("--N", o.sizes, "Comma-separated ascending torus sides")
      ->required()
      ->delimiter(',');
  converge->add_option("--reference-grid", o.reference_grid,
                       "Reference quadrature grid (default max(4096, 4 max N) for d <= 2)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(o, out);
    if (*dump) return run_matrix_dump(o, out);
    if (*charpoly) return run_charpoly(o, out);
    if (*ks) return run_verify(o, out);
    if (*series) return run_series(o, out);
    if (*zeta_eval) return run_zeta_eval(o, out);
    if (*torus_limit) return run_torus_limit(o, out);
    if (*converge) return run_converge(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gzeta::cli
