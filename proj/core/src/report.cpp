#include "entgate/report.hpp"

#include <sstream>

#include "entgate/ketparse.hpp"
#include "json.hpp"

namespace entgate {
namespace {

using Json = nlohmann::ordered_json;

Json structure_json(const PairStructure& s) {
  const int n = s.num_qubits;
  Json pairs = Json::array();
  for (const auto& [low, high] : s.pairs) {
    pairs.push_back({BasisString(n, low).to_string(), BasisString(n, high).to_string()});
  }
  Json q_values = Json::array();
  const int q_width = static_cast<int>(s.q_positions.size());
  for (std::uint64_t q : s.q_values) {
    q_values.push_back(bit_string(gather_bits(q, n, s.q_positions), q_width));
  }
  Json j;
  j["d"] = BasisString(n, s.mask).to_string();
  j["P"] = s.p_positions;
  j["Q"] = s.q_positions;
  j["proper"] = s.proper;
  j["gamma"] = bit_string(gather_bits(s.gamma, n, s.p_positions), static_cast<int>(s.p_positions.size()));
  j["pairs"] = std::move(pairs);
  j["q_values"] = std::move(q_values);
  return j;
}

Json matrix_json(const CoeffMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json witness_json(const FactorPair& w) {
  Json j;
  j["p_positions"] = w.p_positions;
  j["p_factor"] = render_state(w.p_factor);
  j["q_positions"] = w.q_positions;
  j["q_factor"] = render_state(w.q_factor);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["method"] = to_string(v.method);
  j["m"] = v.m;
  j["qubits"] = v.num_qubits;
  Json constants = Json::array();
  for (const auto& c : v.constant_qubits) constants.push_back({{"position", c.position}, {"bit", c.bit}});
  j["constant_qubits"] = std::move(constants);
  Json structures = Json::array();
  for (const auto& s : v.structures) structures.push_back(structure_json(s));
  j["structures"] = std::move(structures);
  j["witness"] = v.witness ? witness_json(*v.witness) : Json(nullptr);
  j["reason"] = v.reason ? Json(to_string(*v.reason)) : Json(nullptr);
  if (v.refinement) {
    j["refinement"] = verdict_json(*v.refinement);
    j["refinement_positions"] = v.refinement_positions;
  }
  if (v.factor_verdicts[0] || v.factor_verdicts[1]) {
    Json fv = Json::array();
    for (const auto& f : v.factor_verdicts) fv.push_back(f ? verdict_json(*f) : Json(nullptr));
    j["factor_verdicts"] = std::move(fv);
  }
  return j;
}

std::string positions_text(const std::vector<int>& positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + "}";
}

std::string matrix_text(const CoeffMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < 2; ++r) {
    out += r == 0 ? "[[" : " [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += to_string(m.at(r, c));
    }
    out += r == 0 ? "],\n" : "]]";
  }
  return out;
}

void verdict_text(std::ostringstream& os, const Verdict& v, const std::string& indent) {
  os << indent << "kind: " << to_string(v.kind) << "\n";
  os << indent << "method: " << to_string(v.method) << ", m = " << v.m << ", n = " << v.num_qubits
     << "\n";
  if (!v.constant_qubits.empty()) {
    os << indent << "constant qubits:";
    for (const auto& c : v.constant_qubits) os << " " << c.position << "=" << c.bit;
    os << "\n";
  }
  if (v.reason) os << indent << "reason: " << to_string(*v.reason) << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    os << indent << "witness: (" << render_state(w.p_factor) << ")" << positions_text(w.p_positions)
       << " (x) (" << render_state(w.q_factor) << ")" << positions_text(w.q_positions) << "\n";
  }
  if (v.refinement) {
    os << indent << "without constant qubits, on " << positions_text(v.refinement_positions) << ":\n";
    verdict_text(os, *v.refinement, indent + "  ");
  }
  static const char* kFactorNames[2] = {"first", "second"};
  for (std::size_t i = 0; i < 2; ++i) {
    if (v.factor_verdicts[i]) {
      os << indent << kFactorNames[i] << " factor:\n";
      verdict_text(os, *v.factor_verdicts[i], indent + "  ");
    }
  }
}

}  // namespace

std::string bit_string(std::uint64_t packed, int width) {
  if (width == 0) return "";
  return BasisString(width, packed).to_string();
}

std::string verdict_to_json(const Verdict& v, int indent) { return verdict_json(v).dump(indent); }

std::string verdict_to_text(const Verdict& v) {
  std::ostringstream os;
  verdict_text(os, v, "");
  return os.str();
}

std::string explanation_to_json(const Explanation& e, int indent) {
  Json j;
  j["state"] = render_state(e.state);
  j["m"] = e.state.size();
  j["qubits"] = e.state.num_qubits();
  Json constants = Json::array();
  for (const auto& c : e.constant_qubits) constants.push_back({{"position", c.position}, {"bit", c.bit}});
  j["constant_qubits"] = std::move(constants);

  Json structures = Json::array();
  for (const auto& r : e.structures) {
    Json s = structure_json(r.structure);
    s["matrix"] = matrix_json(r.matrix);
    Json minors = Json::array();
    for (const auto& mn : r.minors) {
      minors.push_back({{"columns", {mn.i, mn.j}}, {"value", to_string(mn.value)}});
    }
    s["minors"] = std::move(minors);
    s["rank1"] = r.rank1;
    s["index_pattern"] = {r.index_pattern.first, r.index_pattern.second};
    s["form"] = r.form ? Json(std::string(*r.form)) : Json(nullptr);
    structures.push_back(std::move(s));
  }
  j["structures"] = std::move(structures);

  Json forms = Json::array();
  for (const auto& f : e.forms) {
    forms.push_back({{"name", std::string(f.form->name)},
                     {"rows", {f.form->row0, f.form->row1}},
                     {"matrix", matrix_json(f.matrix)},
                     {"proportional", f.proportional}});
  }
  j["canonical_forms"] = std::move(forms);
  j["corollary3"] = e.corollary3 ? Json(*e.corollary3) : Json(nullptr);
  j["verdict"] = verdict_json(e.verdict);
  return j.dump(indent);
}

std::string explanation_to_text(const Explanation& e) {
  std::ostringstream os;
  os << "state: " << render_state(e.state) << "\n";
  os << "m = " << e.state.size() << ", n = " << e.state.num_qubits() << "\n";
  if (e.constant_qubits.empty()) {
    os << "constant qubits: none\n";
  } else {
    os << "constant qubits:";
    for (const auto& c : e.constant_qubits) os << " " << c.position << "=" << c.bit;
    os << "\n";
  }
  os << "pair structures: " << e.structures.size() << "\n";
  for (const auto& r : e.structures) {
    const auto& s = r.structure;
    os << "  d = " << BasisString(s.num_qubits, s.mask).to_string() << ", P = "
       << positions_text(s.p_positions) << ", Q = " << positions_text(s.q_positions)
       << (s.proper ? "" : " (complete complementary pairs)") << "\n";
    os << "  pairs:";
    for (const auto& [low, high] : s.pairs) {
      os << " (" << BasisString(s.num_qubits, low).to_string() << ", "
         << BasisString(s.num_qubits, high).to_string() << ")";
    }
    os << "\n  matrix:\n";
    std::istringstream lines(matrix_text(r.matrix));
    for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
    for (const auto& mn : r.minors) {
      os << "  minor(" << mn.i << "," << mn.j << ") = " << to_string(mn.value) << "\n";
    }
    os << "  proportional rows: " << (r.rank1 ? "yes" : "no");
    if (r.form) os << ", form " << *r.form;
    os << "\n";
  }
  if (!e.forms.empty()) {
    os << "canonical forms:\n";
    for (const auto& f : e.forms) {
      os << "  " << f.form->name << ": " << (f.proportional ? "proportional" : "not proportional")
         << "\n";
      std::istringstream lines(matrix_text(f.matrix));
      for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
    }
  }
  if (e.corollary3) os << "three complete complementary pairs: " << (*e.corollary3 ? "yes" : "no") << "\n";
  os << "verdict:\n";
  verdict_text(os, e.verdict, "  ");
  return os.str();
}

}  // namespace entgate
