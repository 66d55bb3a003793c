#ifndef COSPEC_CLI_HPP
#define COSPEC_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cospec/acceptance.hpp"
#include "cospec/canonical.hpp"
#include "cospec/cp_classify.hpp"
#include "cospec/ds_search.hpp"
#include "cospec/errors.hpp"
#include "cospec/exact_spectrum.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"
#include "cospec/numeric_spectrum.hpp"
#include "cospec/serialize.hpp"

namespace cospec::cli {

using json::Json;

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      // verify found a failing criterion
  kUsage = 2,       // malformed arguments or graph input
  kCapExceeded = 3  // a size cap was hit
};

/// Family selection flags shared by the subcommands that take a graph.
struct FamilyFlags {
  std::vector<int> pyramid, bipartite;
  std::optional<int> star, complete, empty, path, cycle;

  void attach(CLI::App& app) {
    app.add_option("--pyramid", pyramid, "pyramid graph T_{n,k}: N K")->expected(2);
    app.add_option("--bipartite", bipartite, "complete bipartite graph K_{m,n}: M N")->expected(2);
    app.add_option("--star", star, "star K_{1,n}");
    app.add_option("--complete", complete, "complete graph K_n");
    app.add_option("--empty", empty, "edgeless graph on n vertices");
    app.add_option("--path", path, "path on n vertices");
    app.add_option("--cycle", cycle, "cycle on n vertices");
  }

  [[nodiscard]] std::optional<FamilySpec> spec() const {
    std::vector<FamilySpec> chosen;
    if (!pyramid.empty()) chosen.push_back(FamilySpec::pyramid(pyramid[0], pyramid[1]));
    if (!bipartite.empty()) chosen.push_back(FamilySpec::complete_bipartite(bipartite[0], bipartite[1]));
    if (star) chosen.push_back(FamilySpec::star(*star));
    if (complete) chosen.push_back(FamilySpec::complete(*complete));
    if (empty) chosen.push_back(FamilySpec::empty(*empty));
    if (path) chosen.push_back(FamilySpec::path(*path));
    if (cycle) chosen.push_back(FamilySpec::cycle(*cycle));
    if (chosen.size() > 1) throw ParameterError("choose at most one family");
    if (chosen.empty()) return std::nullopt;
    validate(chosen.front());
    return chosen.front();
  }
};

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Reads a graph from a graph6 argument ("-" means one line of stdin).
inline Graph read_graph(const std::string& arg, std::istream& in) {
  std::string text = arg;
  if (arg == "-") std::getline(in, text);
  return graph6_decode(trim(text));
}

/// A graph given either positionally (graph6) or by family flags.
struct GraphInput {
  std::string graph6;
  FamilyFlags family;

  void attach(CLI::App& app) {
    app.add_option("graph", graph6, "graph6 string, or - for stdin");
    family.attach(app);
  }

  /// The graph and, when given as a family, its spec.
  std::pair<Graph, std::optional<FamilySpec>> resolve(std::istream& in) const {
    const auto spec = family.spec();
    if (spec && !graph6.empty()) throw ParameterError("give either a graph6 string or a family, not both");
    if (spec) return {make_family(*spec), spec};
    if (graph6.empty()) throw ParameterError("no graph given");
    return {read_graph(graph6, in), std::nullopt};
  }
};

/// Aligned "key  value" lines for the top-level fields of an object.
inline std::string as_table(const Json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  std::ostringstream os;
  for (const auto& [key, value] : j.items())
    os << std::left << std::setw(static_cast<int>(width + 2)) << key
       << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

inline Json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

/// Parses argv and executes one subcommand, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Spectral graph toolkit: pyramid spectra, cospectral search, CP classification"};
  app.require_subcommand(1);
  std::string format = "json";
  unsigned workers = 1;

  auto add_format = [&format](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table", "dot", "graph6"}))
        ->default_str(default_format);
  };
  auto add_workers = [&workers](CLI::App* sub) {
    sub->add_option("--workers", workers, "worker threads")->check(CLI::Range(1U, 256U));
  };

  // family
  auto* family_cmd = app.add_subcommand("family", "emit a family member (graph6 by default)");
  FamilyFlags family_flags;
  family_flags.attach(*family_cmd);
  std::optional<std::string> family_format;
  family_cmd->add_option("--format", family_format, "graph6 (default), json, table or dot")
      ->check(CLI::IsMember({"json", "table", "dot", "graph6"}));

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact and numeric spectrum");
  GraphInput spectrum_input;
  spectrum_input.attach(*spectrum_cmd);
  add_format(spectrum_cmd, "json");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
  GraphInput charpoly_input;
  charpoly_input.attach(*charpoly_cmd);
  add_format(charpoly_cmd, "json");

  auto* cospectral_cmd = app.add_subcommand("cospectral", "compare two graphs");
  std::string first_graph, second_graph;
  cospectral_cmd->add_option("first", first_graph, "graph6")->required();
  cospectral_cmd->add_option("second", second_graph, "graph6")->required();
  add_format(cospectral_cmd, "json");

  auto* ds_cmd = app.add_subcommand("ds", "determined-by-spectrum verdict by exhaustive search");
  GraphInput ds_input;
  ds_input.attach(*ds_cmd);
  bool ds_allow_8 = false;
  ds_cmd->add_flag("--allow-order-8", ds_allow_8, "permit searching order 8");
  add_format(ds_cmd, "json");
  add_workers(ds_cmd);

  auto* cp_cmd = app.add_subcommand("cp", "complete-positivity verdict");
  GraphInput cp_input;
  cp_input.attach(*cp_cmd);
  add_format(cp_cmd, "json");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "cospectral classes of all graphs of one order");
  std::size_t enumerate_order = 0;
  std::string csv_path;
  bool enumerate_allow_8 = false;
  enumerate_cmd->add_option("--order", enumerate_order, "graph order")->required();
  enumerate_cmd->add_option("--csv", csv_path, "also write graph6,charpoly,is_ds,is_cp rows here");
  enumerate_cmd->add_flag("--allow-order-8", enumerate_allow_8, "permit order 8");
  add_format(enumerate_cmd, "json");
  add_workers(enumerate_cmd);

  auto* nu_cmd = app.add_subcommand("nu", "smallest order of a graph neither CP nor DS");
  std::size_t nu_cap = 7;
  nu_cmd->add_option("--cap", nu_cap, "largest order searched")->default_val(7);
  add_format(nu_cmd, "json");
  add_workers(nu_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run every reproduction check");
  add_format(verify_cmd, "table");
  add_workers(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    out << error_object("usage", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (verify_cmd->parsed() && verify_cmd->get_option("--format")->count() == 0) format = "table";

  auto emit = [&](const Json& j, const std::optional<Graph>& graph = std::nullopt) {
    if (format == "table") out << as_table(j);
    else if (format == "dot" && graph) out << to_dot(*graph);
    else if (format == "graph6" && graph) out << graph6_encode(*graph) << "\n";
    else out << j.dump() << "\n";
  };

  try {
    if (family_cmd->parsed()) {
      const auto spec = family_flags.spec();
      if (!spec) throw ParameterError("choose a family, e.g. --pyramid 6 3");
      const auto g = make_family(*spec);
      Json j = json::graph_summary(g);
      j["family"] = family_name(spec->kind);
      j["params"] = spec->params;
      format = family_format.value_or("graph6");
      emit(j, g);
    } else if (spectrum_cmd->parsed()) {
      const auto [g, spec] = spectrum_input.resolve(in);
      Json j = json::graph_summary(g);
      const auto poly = charpoly(g);
      j["charpoly"] = json::polynomial(poly);
      j["numeric"] = json::numeric(eigenvalues(g));
      if (spec) {
        const auto cf = closed_form_spectrum(*spec);
        j["closed_form"] = cf ? json::closed_form(*cf) : Json("no quadratic closed form");
      }
      emit(j, g);
    } else if (charpoly_cmd->parsed()) {
      const auto [g, spec] = charpoly_input.resolve(in);
      const auto poly = charpoly(g);
      const auto counts = edges_and_triangles(poly);
      Json j = json::graph_summary(g);
      j["charpoly"] = json::polynomial(poly);
      j["charpoly_text"] = poly.to_string();
      j["spectral_edges"] = json::integer(counts.edges);
      j["spectral_triangles"] = json::integer(counts.triangles);
      if (spec && spec->kind == FamilyKind::Pyramid)
        j["factored"] = json::factored(charpoly_pyramid_factored(spec->params[0], spec->params[1]));
      emit(j, g);
    } else if (cospectral_cmd->parsed()) {
      const auto g1 = read_graph(first_graph, in);
      const auto g2 = read_graph(second_graph, in);
      Json j{{"cospectral", are_cospectral(g1, g2)},
             {"first", json::graph_summary(g1)},
             {"second", json::graph_summary(g2)}};
      j["first"]["charpoly"] = json::polynomial(charpoly(g1));
      j["second"]["charpoly"] = json::polynomial(charpoly(g2));
      if (g1.order() <= kCanonicalMaxOrder && g2.order() <= kCanonicalMaxOrder)
        j["isomorphic"] = is_isomorphic(g1, g2);
      emit(j);
    } else if (ds_cmd->parsed()) {
      const auto [g, spec] = ds_input.resolve(in);
      Json j = json::ds_verdict(is_ds(g, SearchOptions{workers, ds_allow_8, std::nullopt}));
      j["graph6"] = graph6_encode(g);
      emit(j, g);
    } else if (cp_cmd->parsed()) {
      const auto [g, spec] = cp_input.resolve(in);
      Json j = json::cp_verdict(is_cp_graph(g));
      j["graph6"] = graph6_encode(g);
      emit(j, g);
    } else if (enumerate_cmd->parsed()) {
      const SearchOptions options{workers, enumerate_allow_8, std::nullopt};
      const auto report = cospectral_classes(enumerate_order, options);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw ParameterError("cannot open " + csv_path);
        csv << "graph6,charpoly,is_ds,is_cp\n";
        for (const auto& g : enumerate_graphs(enumerate_order, options)) {
          const auto verdict = is_ds(g, report);
          std::string poly;
          for (const auto& c : charpoly(g).coefficients()) poly += (poly.empty() ? "" : " ") + c.str();
          csv << graph6_encode(g) << "," << poly << "," << (verdict.is_ds ? "true" : "false") << ","
              << (is_cp_graph(g).is_cp ? "true" : "false") << "\n";
        }
      }
      emit(json::enumeration(report));
    } else if (nu_cmd->parsed()) {
      emit(json::nu(smallest_non_cp_non_ds_order(nu_cap, SearchOptions{workers, false, std::nullopt})));
    } else if (verify_cmd->parsed()) {
      const auto results = acceptance::run_all({workers});
      bool all = true;
      Json rows = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                        {"seconds", json::round12(r.seconds)}});
      }
      if (format == "json") {
        out << Json{{"passed", all}, {"criteria", rows}}.dump() << "\n";
      } else {
        for (const auto& r : results)
          out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  ["
              << r.detail << "]\n";
        out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      }
      return all ? kOk : kFailed;
    }
  } catch (const CapExceeded& e) {
    out << error_object("cap_exceeded", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const FormatError& e) {
    out << error_object("format", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    out << error_object("parameter", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    out << error_object("internal", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace cospec::cli

#endif  // COSPEC_CLI_HPP
