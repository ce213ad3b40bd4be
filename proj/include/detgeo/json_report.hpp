// JSON emission for analysis and optimization reports, plus parsing of the
// JSON gate-input document. Kept out of report.hpp so the core headers do not
// depend on the JSON library.
#pragma once

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>

#include "detgeo/report.hpp"

namespace detgeo {

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["weyl"] = {r.weyl.c1, r.weyl.c2, r.weyl.c3};
  if (r.face_ambiguous) {
    j["face_ambiguous"] = true;
    j["c_product"] = r.c_product;
    j["note"] =
        "singular face c1=pi/2: weyl is the c3=0 representative, not a unique "
        "preimage";
  } else {
    j["face_ambiguous"] = false;
  }
  j["schmidt_spectrum"] = {r.spectrum[0], r.spectrum[1], r.spectrum[2],
                           r.spectrum[3]};
  j["d1sq"] = r.coords.x;
  j["d2sq"] = r.coords.y;
  j["d3sq"] = r.coords.z;
  j["d1p"] = {{"p1", r.d1_trace}, {"p2", r.d1_frobenius}, {"pinf", r.d1_spectral}};
  j["perfect_entangler"] = r.perfect_entangler;
  j["cnot_witness"] = std::string(to_string(r.witness));
  if (r.exact_cnot_count)
    j["exact_cnot_count"] = *r.exact_cnot_count;
  else
    j["exact_cnot_count"] = nullptr;
  j["fidelity_ceiling_rank1"] = r.rank1_fidelity_ceiling;
  j["fidelity_ceiling_rank2"] = r.rank2_fidelity_ceiling;
  return j;
}

inline void write_report_json(std::ostream& os, const AnalysisReport& r) {
  os << report_to_json(r).dump(2) << "\n";
}

struct GateInput {
  enum class Kind { name, weyl, matrix } kind;
  std::string name;
  WeylPoint weyl;
  Mat4 matrix;
};

// Gate-input document: exactly one of
//   {"name": "<catalog key>"}
//   {"weyl": [c1, c2, c3]}               (radians)
//   {"matrix": [[[re,im] x4] x4]}
inline GateInput parse_gate_input(const nlohmann::json& j) {
  const int present = static_cast<int>(j.contains("name")) +
                      static_cast<int>(j.contains("weyl")) +
                      static_cast<int>(j.contains("matrix"));
  if (present != 1)
    throw std::invalid_argument(
        "gate input must contain exactly one of name/weyl/matrix");
  GateInput in{};
  if (j.contains("name")) {
    in.kind = GateInput::Kind::name;
    in.name = j.at("name").get<std::string>();
  } else if (j.contains("weyl")) {
    in.kind = GateInput::Kind::weyl;
    const auto& w = j.at("weyl");
    if (!w.is_array() || w.size() != 3)
      throw std::invalid_argument("weyl must be an array of 3 radians");
    in.weyl = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>()};
  } else {
    in.kind = GateInput::Kind::matrix;
    const auto& m = j.at("matrix");
    if (!m.is_array() || m.size() != 4)
      throw std::invalid_argument("matrix must have 4 rows");
    for (int r = 0; r < 4; ++r) {
      const auto& row = m[r];
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument("matrix rows must have 4 [re,im] entries");
      for (int c = 0; c < 4; ++c) {
        const auto& e = row[c];
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("matrix entries must be [re,im] pairs");
        in.matrix(r, c) = cplx{e[0].get<double>(), e[1].get<double>()};
      }
    }
  }
  return in;
}

inline GateInput load_gate_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  nlohmann::json j;
  f >> j;
  return parse_gate_input(j);
}

}  // namespace detgeo
