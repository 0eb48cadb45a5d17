#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maxspread/families.hpp"
#include "maxspread/graph_io.hpp"
#include "maxspread/report.hpp"
#include "maxspread/series.hpp"
#include "maxspread/spectra.hpp"
#include "maxspread/verify.hpp"
#include "maxspread/walks.hpp"

namespace {

using namespace maxspread;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    write_file_atomic(out, text);
  }
}

FamilyKind kind_arg(const std::string& name) {
  auto k = parse_family_kind(name);
  if (!k) throw UsageError("unknown family kind: " + name);
  return *k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral spread of outerplanar and planar extremal families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out;
  app.add_option("--out", out, "Output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Eigen report of a graph file");
  std::string graph_path;
  spectrum->add_option("graphfile", graph_path, "Edge-list or JSON graph")->required();

  auto* family = app.add_subcommand("family", "Build a family graph");
  std::string family_kind;
  int family_n = 0;
  std::optional<int> family_ell;
  bool family_json = false;
  family->add_option("--kind", family_kind, "Family kind")->required();
  family->add_option("--n", family_n, "Vertex count")->required();
  family->add_option("--ell", family_ell, "Path length");
  family->add_flag("--json", family_json, "JSON instead of edge list");

  auto* scan = app.add_subcommand("scan", "Spread over every path length");
  std::string scan_kind;
  int scan_n = 0;
  std::string scan_csv;
  std::string scan_method = "secular";
  scan->add_option("--kind", scan_kind, "Family kind")->required();
  scan->add_option("--n", scan_n, "Vertex count")->required();
  scan->add_option("--csv", scan_csv, "CSV sidecar path");
  scan->add_option("--method", scan_method, "secular, quotient or dense")
      ->check(CLI::IsMember({"secular", "quotient", "dense"}));

  auto* coeffs = app.add_subcommand("coeffs", "Derived vs printed series coefficients");
  std::string coeffs_family;
  int coeffs_order = 6;
  coeffs->add_option("--family", coeffs_family, "Family kind")->required();
  coeffs->add_option("--order", coeffs_order, "Highest coefficient")
      ->check(CLI::Range(1, 12));

  auto* walks = app.add_subcommand("walks", "Linear walk-count coefficients");
  int walks_kmax = 8;
  walks->add_option("--kmax", walks_kmax, "Largest walk length")->check(CLI::Range(0, 12));

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive maximum spread for small n");
  int enum_n = 0;
  std::string enum_class;
  enumerate->add_option("--n", enum_n, "Vertex count")->required();
  enumerate->add_option("--class", enum_class, "outerplanar or planar")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  bool verify_fast = false;
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  verify->add_flag("--fast", verify_fast, "Reduced grids");
  verify->add_option("--seed", verify_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*spectrum) {
      Graph g = read_graph_file(graph_path);
      emit(out, to_json(eigenvalues_sym(g)));
    } else if (*family) {
      Graph g = build_family(kind_arg(family_kind), family_n, family_ell);
      emit(out, family_json ? to_graph_json(g) + "\n" : to_edge_list(g));
    } else if (*scan) {
      ScanOptions opts;
      if (scan_method == "quotient") opts.method = ExtremeMethod::DenseQuotient;
      if (scan_method == "dense") opts.method = ExtremeMethod::DenseFull;
      SpreadScanReport r = scan_argmax(kind_arg(scan_kind), scan_n, opts);
      if (!scan_csv.empty()) write_file_atomic(scan_csv, to_csv(r));
      emit(out, to_json(r));
    } else if (*coeffs) {
      CoeffReport r = compare_coefficients(kind_arg(coeffs_family), coeffs_order);
      emit(out, to_json(r));
      bool ok = r.exact_match_through(std::min(coeffs_order, 5)) &&
                (!r.lb_checked || r.lb_agrees);
      return ok ? kExitOk : kExitCheckFailed;
    } else if (*walks) {
      emit(out, walk_table_csv(walks_kmax));
    } else if (*enumerate) {
      auto cls = parse_graph_class(enum_class);
      if (!cls) throw UsageError("unknown graph class: " + enum_class);
      emit(out, to_json(exhaustive_max_spread(enum_n, *cls)));
    } else if (*verify) {
      VerifyOptions opts;
      opts.fast = verify_fast;
      opts.seed = verify_seed;
      VerificationReport r = verify_suite(opts);
      emit(out, to_json(r));
      for (const auto& c : r.checks)
        std::cerr << c.id << " " << c.name << ": " << to_string(c.status) << "\n";
      return r.failed() > 0 ? kExitCheckFailed : kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
