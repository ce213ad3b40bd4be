// Analysis reports and the CSV/text emitters behind the CLI subcommands.
// CSV output is meant to be byte-identical across runs: '.' decimal point,
// 17 significant digits, LF line endings, header row.
#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "detgeo/coords.hpp"
#include "detgeo/fidelity.hpp"
#include "detgeo/matrix.hpp"
#include "detgeo/optimize.hpp"
#include "detgeo/weyl.hpp"

namespace detgeo {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct AnalysisReport {
  bool face_ambiguous = false;
  WeylPoint weyl;            // representative with c3 = 0 when ambiguous
  double c_product = 0.0;    // meaningful on the singular face
  SchmidtSpectrum spectrum;
  DetCoords coords;
  double d1_trace = 0.0;     // d_{1,1}
  double d1_frobenius = 0.0; // d_{1,2}
  double d1_spectral = 0.0;  // d_{1,inf}
  bool perfect_entangler = false;
  CnotVerdict witness = CnotVerdict::local;
  std::optional<int> exact_cnot_count;  // unset when face-ambiguous
  double rank1_fidelity_ceiling = 1.0;
  double rank2_fidelity_ceiling = 1.0;
};

namespace detail {

inline std::optional<int> cnot_count_from_weyl(const WeylPoint& w, double tol) {
  if (w.c1 <= tol) return 0;
  if (w.c2 <= tol) return 1;  // the (x,0) line of one-CNOT complexity
  if (w.c3 <= tol) return 2;
  return 3;
}

}  // namespace detail

inline AnalysisReport analyze_weyl(const WeylPoint& w, double tol = kDefaultTol) {
  AnalysisReport r;
  r.weyl = w;
  r.spectrum = schmidt_closed_form(w, tol);
  r.coords = det_coords(w, tol);
  r.c_product = abc_products(w).c;
  r.d1_trace = rank1_schatten_distance(r.spectrum, 1.0);
  r.d1_frobenius = rank1_schatten_distance(r.spectrum, 2.0);
  r.d1_spectral =
      rank1_schatten_distance(r.spectrum, std::numeric_limits<double>::infinity());
  r.perfect_entangler = is_perfect_entangler(w, tol);
  r.witness = cnot_witness(r.coords.x, r.coords.y, std::max(tol, 1e-9));
  r.exact_cnot_count = detail::cnot_count_from_weyl(w, std::max(tol, 1e-9));
  r.rank1_fidelity_ceiling = avg_fidelity_bound(r.coords.x, 4).bound;
  r.rank2_fidelity_ceiling = avg_fidelity_bound(r.coords.y, 4).bound;
  return r;
}

inline AnalysisReport analyze_matrix(const Mat4& u, double tol = kDefaultTol) {
  const WeylExtraction ex = weyl_coordinates(u, tol);
  AnalysisReport r = analyze_weyl(
      ex.face_ambiguous ? ex.face_representative() : ex.point, tol);
  r.face_ambiguous = ex.face_ambiguous;
  r.c_product = ex.c_product;
  if (ex.face_ambiguous) r.exact_cnot_count.reset();
  // Report the spectrum of the actual input, not of the representative.
  r.spectrum = schmidt_numeric(u);
  return r;
}

inline void write_report_text(std::ostream& os, const AnalysisReport& r) {
  os << "weyl point:        (" << fmt_g17(r.weyl.c1) << ", " << fmt_g17(r.weyl.c2)
     << ", " << fmt_g17(r.weyl.c3) << ")";
  if (r.face_ambiguous)
    os << "  [singular face c1=pi/2: representative with c3=0; preimage "
          "ambiguous, cos(c2)cos(c3)="
       << fmt_g17(r.c_product) << "]";
  os << "\n";
  os << "schmidt spectrum:  (" << fmt_g17(r.spectrum[0]) << ", "
     << fmt_g17(r.spectrum[1]) << ", " << fmt_g17(r.spectrum[2]) << ", "
     << fmt_g17(r.spectrum[3]) << ")\n";
  os << "d1^2, d2^2, d3^2:  " << fmt_g17(r.coords.x) << ", " << fmt_g17(r.coords.y)
     << ", " << fmt_g17(r.coords.z) << "\n";
  os << "d_{1,p} p=1,2,inf: " << fmt_g17(r.d1_trace) << ", "
     << fmt_g17(r.d1_frobenius) << ", " << fmt_g17(r.d1_spectral) << "\n";
  os << "perfect entangler: " << (r.perfect_entangler ? "yes" : "no") << "\n";
  os << "cnot witness:      " << to_string(r.witness) << "\n";
  os << "exact cnot count:  ";
  if (r.exact_cnot_count)
    os << *r.exact_cnot_count;
  else
    os << "ambiguous (singular face)";
  os << "\n";
  os << "fidelity ceiling (rank-1 synthesis): " << fmt_g17(r.rank1_fidelity_ceiling)
     << "\n";
  os << "fidelity ceiling (rank-2 synthesis): " << fmt_g17(r.rank2_fidelity_ceiling)
     << "\n";
}

// Uniform chamber grid: c1 = t_i, c2 = t_j, c3 = t_k with k <= j <= i over
// resolution points per axis; rows in lexicographic (i, j, k) order.
inline void write_scan_csv(std::ostream& os, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("scan: resolution must be >= 2");
  os << "c1,c2,c3,s0,s1,s2,s3,d1sq,d2sq,d3sq,x,y,z,is_pe,cnot_witness\n";
  const double h = kHalfPi / (resolution - 1);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= j; ++k) {
        const WeylPoint w{i * h, j * h, k * h};
        const SchmidtSpectrum s = schmidt_closed_form(w);
        const DetCoords d = det_coords(w);
        os << fmt_g17(w.c1) << ',' << fmt_g17(w.c2) << ',' << fmt_g17(w.c3);
        for (int m = 0; m < 4; ++m) os << ',' << fmt_g17(s[m]);
        os << ',' << fmt_g17(dk_distance_sq(s, 1)) << ','
           << fmt_g17(dk_distance_sq(s, 2)) << ',' << fmt_g17(dk_distance_sq(s, 3));
        os << ',' << fmt_g17(d.x) << ',' << fmt_g17(d.y) << ',' << fmt_g17(d.z);
        os << ',' << (is_perfect_entangler(w) ? 1 : 0) << ','
           << to_string(cnot_witness(d.x, d.y)) << '\n';
      }
}

// One-parameter families for the d_{1,p} curves.
//   diagonal: (a, a, a), a in [0, pi/2]
//   pe-edge:  (c, pi/2 - c, 0), c in [pi/4, pi/2]
//   c12-line: (pi/4, pi/4, c), c in [0, pi/4]
inline void write_curves_csv(std::ostream& os, const std::string& family,
                             const std::vector<double>& p_list, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("curves: resolution must be >= 2");
  WeylPoint (*param)(double) = nullptr;
  double lo = 0.0, hi = 0.0;
  if (family == "diagonal") {
    param = [](double t) { return WeylPoint{t, t, t}; };
    lo = 0.0;
    hi = kHalfPi;
  } else if (family == "pe-edge") {
    param = [](double t) { return WeylPoint{t, kHalfPi - t, 0.0}; };
    lo = kHalfPi / 2.0;
    hi = kHalfPi;
  } else if (family == "c12-line") {
    param = [](double t) { return WeylPoint{kHalfPi / 2.0, kHalfPi / 2.0, t}; };
    lo = 0.0;
    hi = kHalfPi / 2.0;
  } else {
    throw std::invalid_argument("curves: unknown family: " + family);
  }
  os << "param,p,d1p\n";
  for (int i = 0; i < resolution; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / (resolution - 1);
    const SchmidtSpectrum s = schmidt_closed_form(param(t));
    for (double p : p_list) {
      os << fmt_g17(t) << ',';
      if (std::isinf(p))
        os << "inf";
      else
        os << fmt_g17(p);
      os << ',' << fmt_g17(rank1_schatten_distance(s, p)) << '\n';
    }
  }
}

// Boundary curves in the determinantal plane, sampled on a uniform y grid.
inline void write_regions_csv(std::ostream& os, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("regions: resolution must be >= 2");
  os << "y,curve_name,x\n";
  for (int i = 0; i < resolution; ++i) {
    const double y = 2.0 * static_cast<double>(i) / (resolution - 1);
    const auto [lo, hi] = strip_bounds(y);
    os << fmt_g17(y) << ",lower_strip," << fmt_g17(lo) << '\n';
    os << fmt_g17(y) << ",upper_strip," << fmt_g17(hi) << '\n';
    os << fmt_g17(y) << ",l_pe," << fmt_g17(pe_lower_boundary(y)) << '\n';
    os << fmt_g17(y) << ",parabola," << fmt_g17(2.0 * y - y * y / 4.0) << '\n';
  }
}

}  // namespace detgeo
