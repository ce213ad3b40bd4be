// detgeo: Schmidt spectra, determinantal distances and region classifiers for
// two-qubit gates, from the command line.
//
// Exit codes: 0 success, 2 input error, 3 numeric-tolerance failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "detgeo/detgeo.hpp"
#include "detgeo/json_report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTolerance = 3;

struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF")
    return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse p value: " + s);
  }
  if (pos != s.size() || !(p >= 1.0))
    throw std::invalid_argument("p must be a real >= 1 or 'inf': " + s);
  return p;
}

std::vector<double> parse_p_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_p(tok));
  if (out.empty()) throw std::invalid_argument("empty p list");
  return out;
}

detgeo::WeylPoint parse_weyl_triple(const std::string& s, bool degrees) {
  std::stringstream ss(s);
  std::string tok;
  std::vector<double> vals;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  if (vals.size() != 3)
    throw std::invalid_argument("--weyl expects three comma-separated angles");
  const double scale = degrees ? detgeo::kPi / 180.0 : 1.0;
  return {vals[0] * scale, vals[1] * scale, vals[2] * scale};
}

// Writes to --out when given, stdout otherwise.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file) throw std::invalid_argument("cannot open output file: " + path);
      os = file.get();
    }
  }
};

detgeo::AnalysisReport analyze_input(const detgeo::GateInput& in, double tol) {
  using Kind = detgeo::GateInput::Kind;
  switch (in.kind) {
    case Kind::name: {
      const auto& entry = detgeo::catalog(in.name);
      return detgeo::analyze_weyl(entry.weyl, tol);
    }
    case Kind::weyl:
      if (!detgeo::in_chamber(in.weyl, tol))
        throw std::invalid_argument(
            "weyl triple outside the reduced chamber (0 <= c3 <= c2 <= c1 <= "
            "pi/2)");
      return detgeo::analyze_weyl(in.weyl, tol);
    case Kind::matrix: {
      const double defect = detgeo::unitarity_defect(in.matrix);
      if (defect > 1e-3)
        throw ToleranceError("matrix is not unitary (||U^dag U - I||_F = " +
                             detgeo::fmt_g17(defect) + " > 1e-3)");
      detgeo::Mat4 u = in.matrix;
      if (defect > 1e-8) {
        if (defect > 1e-6)
          std::cerr << "warning: matrix deviates from unitarity by " << defect
                    << "; analyzing its polar projection\n";
        u = detgeo::nearest_unitary(u);
      }
      return detgeo::analyze_matrix(u, tol);
    }
  }
  throw std::invalid_argument("invalid gate input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator-Schmidt and determinantal geometry of two-qubit gates"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int resolution = 64;
  std::string p_str = "2";
  std::string out_path;
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", tol, "Tolerance for membership predicates");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--resolution", resolution, "Grid resolution");
  app.add_option("--p", p_str, "Schatten order: real >= 1 or 'inf'");
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Full report for one gate");
  std::string gate_name, weyl_str, input_path;
  bool degrees = false;
  analyze->add_option("--name", gate_name, "Catalog gate name");
  analyze->add_option("--weyl", weyl_str, "Weyl triple c1,c2,c3 (radians)");
  analyze->add_option("--input", input_path,
                      "JSON gate document with name, weyl, or matrix");
  analyze->add_flag("--degrees", degrees, "Interpret --weyl angles as degrees");

  auto* scan = app.add_subcommand("scan", "CSV over a uniform chamber grid");
  auto* curves =
      app.add_subcommand("curves", "d_{1,p} along one-parameter families (CSV)");
  std::string family = "diagonal";
  curves->add_option("--family", family, "diagonal, pe-edge, or c12-line");
  auto* regions =
      app.add_subcommand("regions", "Boundary curves in the (x,y) plane (CSV)");
  auto* optimize = app.add_subcommand(
      "optimize", "Minimize the rank-1 distance over the perfect entanglers");
  auto* catalog_cmd = app.add_subcommand("catalog", "List the named gates");

  // Global flags may also appear after the subcommand name.
  for (auto* sub : {analyze, scan, curves, regions, optimize, catalog_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    Sink sink(out_path);
    std::ostream& os = *sink.os;

    if (analyze->parsed()) {
      detgeo::GateInput in{};
      const int given = static_cast<int>(!gate_name.empty()) +
                        static_cast<int>(!weyl_str.empty()) +
                        static_cast<int>(!input_path.empty());
      if (given != 1)
        throw std::invalid_argument(
            "analyze needs exactly one of --name, --weyl, --input");
      if (!gate_name.empty()) {
        in.kind = detgeo::GateInput::Kind::name;
        in.name = gate_name;
      } else if (!weyl_str.empty()) {
        in.kind = detgeo::GateInput::Kind::weyl;
        in.weyl = parse_weyl_triple(weyl_str, degrees);
      } else {
        in = detgeo::load_gate_input(input_path);
      }
      const auto report = analyze_input(in, tol);
      if (format == "json")
        detgeo::write_report_json(os, report);
      else
        detgeo::write_report_text(os, report);
    } else if (scan->parsed()) {
      detgeo::write_scan_csv(os, resolution);
    } else if (curves->parsed()) {
      detgeo::write_curves_csv(os, family, parse_p_list(p_str), resolution);
    } else if (regions->parsed()) {
      detgeo::write_regions_csv(os, resolution);
    } else if (optimize->parsed()) {
      const double p = parse_p(p_str);
      const auto r = detgeo::minimize_pe_rank1(p, resolution, seed);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = std::isinf(p) ? nlohmann::json("inf") : nlohmann::json(p);
        j["argmin"] = {r.argmin.c1, r.argmin.c2, r.argmin.c3};
        j["value"] = r.value;
        j["value_sq"] = r.value * r.value;
        j["degenerate_minimizers"] = r.degenerate_minimizers;
        os << j.dump(2) << "\n";
      } else {
        os << "p:       " << p_str << "\n";
        os << "argmin:  (" << detgeo::fmt_g17(r.argmin.c1) << ", "
           << detgeo::fmt_g17(r.argmin.c2) << ", " << detgeo::fmt_g17(r.argmin.c3)
           << ")\n";
        os << "value:   " << detgeo::fmt_g17(r.value)
           << "  (value^2 = " << detgeo::fmt_g17(r.value * r.value) << ")\n";
        if (p == 2.0)
          os << "compare: 5/2 - sqrt(2) = "
             << detgeo::fmt_g17(2.5 - std::sqrt(2.0)) << " (value^2)\n";
        if (p == 1.0)
          os << "compare: sqrt(2) = " << detgeo::fmt_g17(std::sqrt(2.0)) << "\n";
        os << "degenerate minimizers: "
           << (r.degenerate_minimizers ? "yes" : "no") << "\n";
      }
    } else if (catalog_cmd->parsed()) {
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& e : detgeo::catalog_entries()) {
          const auto d = detgeo::det_coords(e.weyl);
          j.push_back({{"name", e.name},
                       {"weyl", {e.weyl.c1, e.weyl.c2, e.weyl.c3}},
                       {"d1sq", d.x},
                       {"d2sq", d.y},
                       {"d3sq", d.z},
                       {"perfect_entangler", detgeo::is_perfect_entangler(e.weyl)}});
        }
        os << j.dump(2) << "\n";
      } else {
        for (const auto& e : detgeo::catalog_entries()) {
          const auto d = detgeo::det_coords(e.weyl);
          os << e.name << "  weyl=(" << detgeo::fmt_g17(e.weyl.c1) << ", "
             << detgeo::fmt_g17(e.weyl.c2) << ", " << detgeo::fmt_g17(e.weyl.c3)
             << ")  (x,y,z)=(" << detgeo::fmt_g17(d.x) << ", "
             << detgeo::fmt_g17(d.y) << ", " << detgeo::fmt_g17(d.z) << ")  pe="
             << (detgeo::is_perfect_entangler(e.weyl) ? "yes" : "no") << "\n";
        }
      }
    }
  } catch (const ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTolerance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
