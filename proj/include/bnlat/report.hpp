#pragma once

// Run reports: JSON and table rendering of certificates, solver results and
// structural checks, plus the full verification suite.
//
// Exit-code policy: 0 when every mandatory item passes, 1 when one fails.
// Usage, parse and precondition errors map to 2 in the CLI.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bnlat/bn_engine.hpp"
#include "bnlat/class_expr.hpp"
#include "bnlat/kummer_model.hpp"
#include "json.hpp"

namespace bnlat {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

inline std::string enriques_text(const HalfIntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    s += v.coord(i).str();
    if (i + 1 < v.rank()) s += (i == 1 ? "; " : ", ");
  }
  return s + ")";
}

inline std::string vector_text(const HalfIntVector& v) {
  return v.basis() == kKummerBasis ? format_class(v) : enriques_text(v);
}

inline Json vector_json(const HalfIntVector& v) {
  return Json{{"doubled", v.doubled()}, {"expr", vector_text(v)}};
}

inline Json certificate_json(const WitnessCertificate& c) {
  Json checks = Json::object();
  for (const auto& ch : c.checks) checks[ch.name] = ch.passed;
  Json informational = Json::array();
  for (const auto& ch : c.checks)
    if (!ch.mandatory) informational.push_back(ch.name);
  return Json{{"side", side_name(c.side)},
              {"H", vector_json(c.H)},
              {"M", vector_json(c.M)},
              {"squares", {{"H2", rational_json(c.h2)}, {"M2", rational_json(c.m2)}, {"HM", rational_json(c.hm)}}},
              {"g", rational_json(c.genus)},
              {"checks", checks},
              {"informational", informational},
              {"valid", c.valid()}};
}

inline Json beta_json(const BetaQuadruple& b) {
  Json a = Json::array();
  for (std::size_t k = 0; k < 4; ++k) a.push_back(rational_json(b.beta(k)));
  return a;
}

inline Json stuv_json(const StuvSolution& s) {
  Json a = Json::array();
  for (std::size_t k = 0; k < 4; ++k) a.push_back(rational_json(s.component(k)));
  return a;
}

struct ReportItem {
  std::string id;
  std::string kind;  // certificate | check | solver | search | lattice
  bool passed = true;
  bool mandatory = true;
  std::string detail;
  Json data = Json::object();
};

/// The outcome of one CLI invocation.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void add(ReportItem item) { items_.push_back(std::move(item)); }

  void add_check(std::string id, bool passed, std::string detail = {}, bool mandatory = true) {
    add({std::move(id), "check", passed, mandatory, std::move(detail), Json::object()});
  }

  void add_certificate(std::string id, const WitnessCertificate& c, bool extra_ok = true, std::string detail = {}) {
    ReportItem item{std::move(id), "certificate", c.valid() && extra_ok, true, std::move(detail), Json::object()};
    item.data["certificate"] = certificate_json(c);
    add(std::move(item));
  }

  const std::vector<ReportItem>& items() const noexcept { return items_; }
  const std::string& command() const noexcept { return command_; }

  std::vector<std::string> failed_ids() const {
    std::vector<std::string> ids;
    for (const auto& i : items_)
      if (i.mandatory && !i.passed) ids.push_back(i.id);
    return ids;
  }

  int exit_code() const { return failed_ids().empty() ? 0 : 1; }

  Json to_json() const {
    Json items = Json::array();
    std::size_t passed = 0;
    for (const auto& i : items_) {
      Json j{{"id", i.id}, {"kind", i.kind}, {"passed", i.passed}, {"mandatory", i.mandatory}};
      if (!i.detail.empty()) j["detail"] = i.detail;
      for (auto it = i.data.begin(); it != i.data.end(); ++it) j[it.key()] = it.value();
      items.push_back(std::move(j));
      if (i.passed) ++passed;
    }
    return Json{{"tool_version", kToolVersion},
                {"schema_version", kSchemaVersion},
                {"command", command_},
                {"items", items},
                {"summary",
                 {{"total", items_.size()},
                  {"passed", passed},
                  {"failed", items_.size() - passed},
                  {"failed_items", failed_ids()}}},
                {"exit_code", exit_code()}};
  }

  std::string to_table() const {
    std::ostringstream os;
    os << "bnlat " << kToolVersion << "  " << command_ << "\n";
    for (const auto& i : items_) {
      os << (i.passed ? "PASS" : (i.mandatory ? "FAIL" : "info")) << "  " << i.id;
      if (!i.detail.empty()) os << "  " << i.detail;
      os << "\n";
      if (i.kind == "certificate" && i.data.contains("certificate")) {
        const Json& c = i.data["certificate"];
        os << "      H = " << c["H"]["expr"].get<std::string>() << "\n";
        os << "      M = " << c["M"]["expr"].get<std::string>() << "\n";
        os << "      H2 = " << c["squares"]["H2"].dump() << ", M2 = " << c["squares"]["M2"].dump()
           << ", HM = " << c["squares"]["HM"].dump() << ", g = " << c["g"].dump() << "\n";
        os << "      checks:";
        for (auto it = c["checks"].begin(); it != c["checks"].end(); ++it)
          os << " " << it.key() << "=" << (it.value().get<bool>() ? "ok" : "no");
        os << "\n";
      }
    }
    const auto failed = failed_ids();
    os << "summary: " << items_.size() - failed.size() << "/" << items_.size() << " ok";
    if (!failed.empty()) {
      os << "; failed:";
      for (const auto& f : failed) os << " " << f;
    }
    os << "\n";
    return os.str();
  }

 private:
  std::string command_;
  std::vector<ReportItem> items_;
};

// ---------------------------------------------------------------------------
// Suite

struct SuiteOptions {
  Int k_max = 25;
  /// Test hook: corrupt one entry of theta* before the structural checks.
  bool inject_theta_fault = false;
  Int parity_radius = 10;
};

inline std::string squares_text(const WitnessCertificate& c) {
  return "(H2, M2, HM) = (" + c.h2.str() + ", " + c.m2.str() + ", " + c.hm.str() + "), g = " + c.genus.str();
}

/// theta* structure: involution, isometry, the sixteen table rows, theta*L.
inline void add_theta_checks(RunReport& report, const IsometryMap& theta) {
  const GramLattice lattice = kummer_lattice();
  report.add_check("theta.involution", theta.is_involution(), "theta* o theta* = id on all 17 basis vectors");
  report.add_check("theta.isometry", theta.preserves_form(lattice), "form preserved on all 17x17 basis pairs");
  std::size_t rows_ok = 0;
  for (const auto& [n, t] : theta_table()) {
    if (theta.apply(node(n)) == trope(t) && theta.apply(trope(t)) == node(n)) ++rows_ok;
  }
  report.add_check("theta.table", rows_ok == theta_table().size(), std::to_string(rows_ok) + "/16 node<->trope rows");
  report.add_check("theta.L", theta.apply(kummer_L()) == theta_of_L(), "theta*L = 3L - sum of nodes");
}

inline RunReport paper_suite(const SuiteOptions& opt = {}, const PicardModel& model = PicardModel::standard()) {
  RunReport report("paper-suite");

  if (opt.inject_theta_fault) {
    IntMatrix m = theta_matrix();
    m(0, 0) = checked::add(m(0, 0), 2);
    add_theta_checks(report, IsometryMap::unchecked(std::move(m), kKummerBasis, true));
  } else {
    add_theta_checks(report, model.theta());
  }

  // Even eights.
  const NodeSet listed_eight = make_node_set({{0, 0}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  const NodeSet complement = ~listed_eight;
  report.add_check("even_eight.listed", model.is_even_eight(listed_eight), "E0+E16+E23+E24+E25+E34+E35+E45 divisible by 2");
  report.add_check("even_eight.complement", model.is_even_eight(complement),
                   "E12+E13+E14+E15+E26+E36+E46+E56 divisible by 2");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const bool expected = (i == 1 && j == 2) || (i == 3 && j == 4);
      const bool divisible = model.divisible_by_two(f_vector(i) + f_vector(j));
      const std::string pair = "F" + std::to_string(i) + "+F" + std::to_string(j);
      report.add_check("even_eight." + pair, divisible == expected,
                       pair + (divisible ? " divisible by 2" : " not divisible by 2"));
    }

  // Genus-5 example.
  {
    const HalfIntVector H = parse_class("2L - 1/2 F1 - 1/2 F2 - 1/2 F3 - 1/2 F4");
    const HalfIntVector M = parse_class("3L - F1 - F2 - F4");
    const auto cert = verify_k3_witness(H, M, model);
    const bool squares = cert.h2 == Rational(8) && cert.m2 == Rational(12) && cert.hm == Rational(12);
    report.add_certificate("example.genus5", cert, squares, squares_text(cert));
  }

  // Genus 4k+1 family.
  for (Int k = 1; k <= opt.k_max; ++k) {
    const FamilyMember f = theorem_family(k, model);
    const auto& c = f.certificate;
    const bool squares = c.h2 == Rational(8 * k) && c.m2 == Rational(16 * k - 4) && c.hm == Rational(12 * k) &&
                         c.genus == Rational(4 * k + 1);
    const bool positive = necessary_positivity(f.H, model).ok();
    report.add_certificate("family.k" + std::to_string(k), c, squares && positive, squares_text(c));
  }

  // Half-integer examples of degree 20, 36, 52.
  const Int degrees[] = {20, 36, 52};
  std::size_t idx = 0;
  for (const auto& ex : remark_examples(model)) {
    const bool degree = ex.certificate.h2 == Rational(degrees[idx++]);
    report.add_certificate("example." + ex.label, ex.certificate, degree, squares_text(ex.certificate));
  }

  // Parity obstruction.
  {
    const BetaQuadruple beta{{2, 0, 0, 0}};
    const bool obstructed = parity_obstruction(beta);
    const auto sols = search_stuv(beta, SearchConfig{opt.parity_radius});
    ReportItem item{"parity.beta_1000", "solver", obstructed && sols.empty(), true,
                    "d = " + std::to_string(beta.degree()) + ", d/4 odd; " + std::to_string(sols.size()) +
                        " solutions at radius " + std::to_string(opt.parity_radius),
                    Json::object()};
    item.data["beta"] = beta_json(beta);
    item.data["parity_obstruction"] = obstructed;
    item.data["search_radius"] = opt.parity_radius;
    item.data["solutions"] = Json::array();
    report.add(std::move(item));
  }
  return report;
}

}  // namespace bnlat
