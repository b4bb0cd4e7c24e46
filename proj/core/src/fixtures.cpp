#include "entgate/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "entgate/ketparse.hpp"
#include "entgate/oracle.hpp"
#include "json.hpp"

namespace entgate {
namespace {

constexpr const char* kTwoTerm = "sqrt(3)/2|000> + 1/2|111>";

SparseState product(const char* p_text, std::vector<int> p_positions, const char* q_text,
                    std::vector<int> q_positions) {
  return FactorPair{std::move(p_positions), parse_state(p_text), std::move(q_positions),
                    parse_state(q_text)}
      .expand();
}

std::string uniform_q(const char* a, const char* b, const char* c) {
  return std::string("1/sqrt(3)|") + a + "> + 1/sqrt(3)|" + b + "> + 1/sqrt(3)|" + c + ">";
}

Fixture separable_fixture(std::string name, std::string description, SparseState state,
                          std::vector<int> cut, std::string form, std::vector<std::string> excluded = {}) {
  Fixture f{std::move(name), std::move(description), std::move(state), VerdictKind::kSeparable};
  f.expected_cut = std::move(cut);
  f.required_forms = {std::move(form)};
  f.excluded_forms = std::move(excluded);
  return f;
}

Fixture g_abcd(const char* zero, const char* description) {
  // alpha(|0000>+|1111>) + beta(|0011>+|1100>) + gamma(|0101>+|1010>) + delta(|0110>+|1001>)
  static const char* kPairs[4][2] = {{"0000", "1111"}, {"0011", "1100"}, {"0101", "1010"}, {"0110", "1001"}};
  static const char* kNames[4] = {"alpha", "beta", "gamma", "delta"};
  std::string text;
  for (int i = 0; i < 4; ++i) {
    if (std::string(kNames[i]) == zero) continue;
    for (const char* ket : kPairs[i]) {
      if (!text.empty()) text += " + ";
      text += std::string("1/sqrt(6)|") + ket + ">";
    }
  }
  Fixture f{std::string("G_abcd(") + zero + "=0)", description, parse_state(text),
            VerdictKind::kGenuinelyEntangled, Reason::kCorollary3};
  f.expected_corollary3 = true;
  return f;
}

bool same_cut(const std::vector<int>& side, const FactorPair& w) {
  return side == w.p_positions || side == w.q_positions;
}

}  // namespace

std::vector<Fixture> reference_fixtures() {
  std::vector<Fixture> out;

  out.push_back(separable_fixture(
      "eta", "(|00>+|11>)_13 (x) (|00>+|01>+|11>)_24",
      parse_state("|0000> + |0001> + |0101> + |1010> + |1011> + |1111>"), {1, 3}, "mt-3"));

  out.push_back(separable_fixture("Pi1", "two-term factor on 346, three-term on 125",
                                  product(kTwoTerm, {3, 4, 6}, uniform_q("000", "100", "111").c_str(), {1, 2, 5}),
                                  {3, 4, 6}, "mt-2", {"mt-1"}));
  out.push_back(separable_fixture("Pi2", "two-term factor on 123, three-term on 456",
                                  product(kTwoTerm, {1, 2, 3}, uniform_q("000", "110", "111").c_str(), {4, 5, 6}),
                                  {1, 2, 3}, "mt-3"));
  out.push_back(separable_fixture("Pi3", "two-term factor on 234, three-term on 156",
                                  product(kTwoTerm, {2, 3, 4}, uniform_q("000", "110", "111").c_str(), {1, 5, 6}),
                                  {2, 3, 4}, "mt-5"));
  out.push_back(separable_fixture("Gamma1", "two-term factor on 234, three-term on 156",
                                  product(kTwoTerm, {2, 3, 4}, uniform_q("000", "010", "111").c_str(), {1, 5, 6}),
                                  {2, 3, 4}, "mt-1"));
  out.push_back(separable_fixture("Gamma2", "two-term factor on 456, three-term on 123",
                                  product(kTwoTerm, {4, 5, 6}, uniform_q("000", "010", "111").c_str(), {1, 2, 3}),
                                  {4, 5, 6}, "mt-2"));
  out.push_back(separable_fixture("Gamma3", "two-term factor on 123, three-term on 456",
                                  product(kTwoTerm, {1, 2, 3}, uniform_q("000", "010", "111").c_str(), {4, 5, 6}),
                                  {1, 2, 3}, "mt-3"));

  {
    Fixture f{"Psi6", "five-qubit maximally entangled state, six terms",
              parse_state("sqrt(3)/(2*sqrt(2))|11111> + 1/(2*sqrt(2))|10000> + 1/(2*sqrt(2))|01000>"
                          " + 1/(2*sqrt(2))|00100> + 1/(2*sqrt(2))|00010> + 1/(2*sqrt(2))|00001>"),
              VerdictKind::kGenuinelyEntangled, Reason::kNoPairStructure};
    f.excluded_forms = {"mt-1", "mt-2", "mt-3", "mt-5"};
    f.expected_corollary3 = false;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"Xi6", "six-qubit maximally entangled state, six terms",
              parse_state("sqrt(3)/(2*sqrt(2))|111111> + 1/(2*sqrt(2))|110000> + 1/(2*sqrt(2))|001000>"
                          " + 1/(2*sqrt(2))|000100> + 1/(2*sqrt(2))|000010> + 1/(2*sqrt(2))|000001>"),
              VerdictKind::kGenuinelyEntangled, Reason::kNoPairStructure};
    f.excluded_forms = {"mt-1", "mt-2", "mt-3", "mt-5"};
    f.expected_corollary3 = false;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"Theta", "pairs on qubits 24 with a sign flip",
              parse_state("1/sqrt(6)*|0000> + 1/sqrt(6)*|0010> + 1/sqrt(6)*|0101> + 1/sqrt(6)*|0111>"
                          " + 1/sqrt(6)*|1010> - 1/sqrt(6)*|1111>"),
              VerdictKind::kGenuinelyEntangled, Reason::kNoRank1Structure};
    const ExactScalar r = ExactScalar::sqrt(6) * ExactScalar::rational(1, 6);
    CoeffMatrix m;
    m.rows[0] = {r, r, r};
    m.rows[1] = {r, r, -r};
    f.expected_matrix = m;
    f.expected_corollary3 = false;
    out.push_back(std::move(f));
  }
  out.push_back(g_abcd("alpha", "G_abcd with alpha = 0, others 1/sqrt(6)"));
  out.push_back(g_abcd("beta", "G_abcd with beta = 0, others 1/sqrt(6)"));
  out.push_back(g_abcd("gamma", "G_abcd with gamma = 0, others 1/sqrt(6)"));
  out.push_back(g_abcd("delta", "G_abcd with delta = 0, others 1/sqrt(6)"));
  {
    Fixture f{"uniform3", "three-qubit uniform superposition, four complete pairs",
              parse_state("sqrt(2)/4|000> + sqrt(2)/4|001> + sqrt(2)/4|010> + sqrt(2)/4|011>"
                          " + sqrt(2)/4|100> + sqrt(2)/4|101> + sqrt(2)/4|110> + sqrt(2)/4|111>"),
              VerdictKind::kSeparable};
    f.oracle_only = true;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureResult> results;
  for (const auto& f : fixtures) {
    FixtureResult r;
    r.name = f.name;
    auto fail = [&r](std::string msg) { r.failures.push_back(std::move(msg)); };
    try {
      const Verdict v = f.oracle_only ? oracle_classify(f.state) : classify(f.state);
      r.kind = std::string(to_string(v.kind));
      if (v.kind != f.expected_kind) {
        fail("kind " + r.kind + ", expected " + std::string(to_string(f.expected_kind)));
      }
      if (f.expected_reason && v.reason != f.expected_reason) {
        fail("reason " + std::string(v.reason ? to_string(*v.reason) : "none") + ", expected " +
             std::string(to_string(*f.expected_reason)));
      }
      if (v.kind == VerdictKind::kSeparable) {
        if (!v.witness) {
          fail("separable verdict without witness");
        } else {
          if (!(v.witness->expand() == f.state)) fail("witness does not expand to the state");
          if (f.expected_cut && !same_cut(*f.expected_cut, *v.witness)) fail("witness cut differs");
        }
      }
      if (!f.required_forms.empty() || !f.excluded_forms.empty()) {
        const auto forms = proportional_forms(f.state);
        auto has = [&forms](const std::string& name) {
          return std::find(forms.begin(), forms.end(), name) != forms.end();
        };
        for (const auto& name : f.required_forms) {
          if (!has(name)) fail(name + " should have proportional rows");
        }
        for (const auto& name : f.excluded_forms) {
          if (has(name)) fail(name + " should not have proportional rows");
        }
      }
      if (f.expected_matrix) {
        const auto structures = xor_matchings(f.state);
        auto it = std::find_if(structures.begin(), structures.end(),
                               [](const PairStructure& s) { return s.proper; });
        if (it == structures.end()) {
          fail("no proper pair structure");
        } else {
          const CoeffMatrix m = build_coefficient_matrix(f.state, *it);
          if (m.rows != f.expected_matrix->rows) fail("coefficient matrix differs");
        }
      }
      if (f.expected_corollary3 && corollary3_check(f.state) != *f.expected_corollary3) {
        fail("complete-pair check differs");
      }
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    r.passed = r.failures.empty();
    results.push_back(std::move(r));
  }
  return results;
}

std::string fixture_results_to_json(const std::vector<FixtureResult>& results, int indent) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    j.push_back({{"name", r.name}, {"passed", r.passed}, {"kind", r.kind}, {"failures", r.failures}});
  }
  nlohmann::ordered_json doc;
  doc["passed"] = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  doc["fixtures"] = std::move(j);
  return doc.dump(indent);
}

std::string fixture_results_to_text(const std::vector<FixtureResult>& results) {
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
       << r.kind << "\n";
    for (const auto& msg : r.failures) os << "      - " << msg << "\n";
    passed += r.passed ? 1 : 0;
  }
  os << passed << "/" << results.size() << " fixtures passed\n";
  return os.str();
}

}  // namespace entgate
