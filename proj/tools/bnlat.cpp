// bnlat: command-line front end for witness verification, construction and
// search on the Kummer / Enriques lattices.
//
// Exit codes: 0 all mandatory checks pass, 1 a mandatory check failed,
// 2 usage, parse or precondition error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bnlat/bn_engine.hpp"
#include "bnlat/class_expr.hpp"
#include "bnlat/kummer_model.hpp"
#include "bnlat/report.hpp"

namespace {

using namespace bnlat;

constexpr int kExitUsage = 2;

/// Ten integers separated by spaces, commas or one semicolon, optionally
/// wrapped in parentheses: "1 2 0 0 0 0 0 0 0 0" or "(1,2;0,0,0,0,0,0,0,0)".
EnriquesVector parse_enriques(const std::string& text) {
  EnriquesVector v;
  std::size_t count = 0;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& what) { throw ParseError(text, at, what); };
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';' || ch == '(' || ch == ')') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    bool negative = false;
    if (ch == '-' || ch == '+') {
      negative = ch == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail(pos, "expected an integer");
    Int value = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (++digits > 15) fail(start, "integer too large");
      value = value * 10 + (text[pos++] - '0');
    }
    if (count == v.coords.size()) fail(start, "more than 10 coordinates");
    v.coords[count++] = negative ? -value : value;
  }
  if (count != v.coords.size()) fail(text.size(), "expected 10 coordinates, got " + std::to_string(count));
  return v;
}

// Arguments with spaces are echoed in double quotes.
std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p.find(' ') == std::string::npos ? p : '"' + p + '"';
  }
  return s;
}

struct Global {
  bool json = false;
  bool parallel = false;
};

int emit(const RunReport& report, const Global& g) {
  if (g.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_table();
  return report.exit_code();
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const std::string invocation = join(args);

  Global g;
  if (const char* fmt = std::getenv("BNLAT_FORMAT")) g.json = std::string(fmt) == "json";

  CLI::App app{"witness toolkit for Enriques polarizations on the Kummer and U+E8(-1) lattices", "bnlat"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  bool table_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default from BNLAT_FORMAT)");
  app.add_flag("--table", table_flag, "table output");
  app.add_flag("--parallel", g.parallel, "parallel search; output identical to serial");
  app.set_version_flag("--version", kToolVersion);

  // full suite
  auto* suite = app.add_subcommand("paper-suite", "run the full verification suite");
  SuiteOptions suite_opt;
  suite->add_option("--k-max", suite_opt.k_max, "largest k of the genus 4k+1 family")->capture_default_str();
  suite->add_flag("--inject-theta-fault", suite_opt.inject_theta_fault, "corrupt one entry of theta* (negative control)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a witness pair");
  std::string side = "k3", h_text, m_text;
  verify->add_option("--side", side, "k3 or enriques")->check(CLI::IsMember({"k3", "enriques"}));
  verify->add_option("--H", h_text, "polarization class")->required();
  verify->add_option("--M", m_text, "witness class")->required();

  // family
  auto* family = app.add_subcommand("family", "genus 4k+1 family certificates");
  std::optional<Int> family_k;
  std::string k_range;
  auto* k_opt = family->add_option("--k", family_k, "single k >= 1");
  auto* range_opt = family->add_option("--k-range", k_range, "range a..b");
  k_opt->excludes(range_opt);

  // dioph
  auto* dioph = app.add_subcommand("dioph", "Diophantine system for a beta quadruple");
  std::vector<std::string> beta_tokens;
  std::optional<Int> dioph_radius;
  dioph->add_option("--beta", beta_tokens, "beta_1..beta_4 (integers, p/2 or decimals)")->expected(4)->required()->allow_extra_args(false);
  dioph->add_option("--search-radius", dioph_radius, "exhaustive search radius on doubled (S,T,U,V)");

  // search
  auto* search = app.add_subcommand("search", "box search for witnesses");
  std::string search_side = "k3", target_text;
  SearchConfig cfg;
  Int max_results = -1;
  search->add_option("--side", search_side, "k3 or enriques")->check(CLI::IsMember({"k3", "enriques"}));
  search->add_option("--target", target_text, "polarization class")->required();
  search->add_option("--radius", cfg.radius, "coefficient bound over the search basis")->required();
  search->add_option("--max", max_results, "cap on reported witnesses");

  // phi
  auto* phi = app.add_subcommand("phi", "box-bounded phi invariant");
  phi->set_help_flag("--help", "Print this help message and exit");
  std::vector<std::string> phi_tokens;
  Int phi_bound = 2;
  phi->add_option("--h", phi_tokens, "10 integers")->expected(1, 10)->required()->allow_extra_args(false);
  phi->add_option("--bound", phi_bound, "coordinate bound for isotropic vectors")->capture_default_str();

  // inv-lattice
  auto* inv = app.add_subcommand("inv-lattice", "the theta*-invariant sublattice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (json_flag) g.json = true;
  if (table_flag) g.json = false;
  cfg.parallel = g.parallel;

  try {
    if (suite->parsed()) {
      RunReport r = paper_suite(suite_opt);
      return emit(r.command() == invocation ? r : [&] {
        RunReport echoed(invocation);
        for (const auto& item : r.items()) echoed.add(item);
        return echoed;
      }(), g);
    }

    RunReport report(invocation);
    const PicardModel& model = PicardModel::standard();

    if (verify->parsed()) {
      if (side == "k3") {
        const auto cert = verify_k3_witness(parse_class(h_text), parse_class(m_text), model);
        report.add_certificate("verify", cert, true, squares_text(cert));
      } else {
        const auto cert = verify_enriques_witness(parse_enriques(h_text), parse_enriques(m_text));
        report.add_certificate("verify", cert, true, squares_text(cert));
      }
    } else if (family->parsed()) {
      Int lo = 0, hi = 0;
      if (family_k) {
        lo = hi = *family_k;
      } else if (!k_range.empty()) {
        const auto dots = k_range.find("..");
        if (dots == std::string::npos) return usage_error("--k-range expects a..b");
        try {
          lo = std::stoll(k_range.substr(0, dots));
          hi = std::stoll(k_range.substr(dots + 2));
        } catch (const std::exception&) {
          return usage_error("--k-range expects integers a..b");
        }
        if (hi < lo) return usage_error("--k-range is empty");
      } else {
        return usage_error("family needs --k or --k-range");
      }
      for (Int k = lo; k <= hi; ++k) {
        const FamilyMember f = theorem_family(k, model);
        const auto& c = f.certificate;
        const bool squares = c.h2 == Rational(8 * k) && c.m2 == Rational(16 * k - 4) && c.hm == Rational(12 * k);
        report.add_certificate("family.k" + std::to_string(k), c, squares, squares_text(c));
      }
    } else if (dioph->parsed()) {
      std::array<Rational, 4> b;
      for (std::size_t i = 0; i < 4; ++i) b[i] = parse_half_integer(beta_tokens[i]);
      const BetaQuadruple beta = BetaQuadruple::from_rationals(b);
      if (!lemma33_check(beta))
        return usage_error("beta " + beta.str() + " fails the invariance conditions (beta1+beta2, beta3+beta4 integral)");
      const bool obstructed = parity_obstruction(beta);
      ReportItem item{"dioph", "solver", true, true, "beta = " + beta.str() + ", d = " + std::to_string(beta.degree()),
                      Json::object()};
      item.data["beta"] = beta_json(beta);
      item.data["alpha"] = rational_json(beta.alpha());
      item.data["d"] = beta.degree();
      item.data["parity_obstruction"] = obstructed;
      std::optional<StuvSolution> sol;
      try {
        const Rational two_s = sufficient_two_s(beta);
        item.data["two_s"] = rational_json(two_s);
        item.detail += ", 2s = " + two_s.str();
        sol = solve_sufficient(beta);
      } catch (const FormulaUndefined&) {
        item.data["two_s"] = "undefined";
        item.detail += ", 2s undefined";
      }
      item.data["sufficient_solution"] = sol ? stuv_json(*sol) : Json(nullptr);
      item.detail += sol ? ", (S, T, U, V) = " + sol->str() : ", no sufficient solution";
      report.add(std::move(item));
      if (sol) {
        const auto cert = verify_k3_witness(family_vector(beta), build_M_from_solution(beta, *sol), model);
        report.add_certificate("dioph.witness", cert, diophantine_residual(beta, *sol).zero(), squares_text(cert));
      }
      if (dioph_radius) {
        const auto sols = search_stuv(beta, SearchConfig{*dioph_radius, cfg.max_results, g.parallel});
        ReportItem s{"dioph.search", "search", !obstructed || sols.empty(), true,
                     std::to_string(sols.size()) + " admissible solutions at radius " + std::to_string(*dioph_radius) +
                         (obstructed ? " (parity obstruction)" : ""),
                     Json::object()};
        s.data["search_radius"] = *dioph_radius;
        s.data["solutions"] = Json::array();
        for (const auto& x : sols) s.data["solutions"].push_back(stuv_json(x));
        report.add(std::move(s));
      }
    } else if (search->parsed()) {
      if (max_results >= 0) cfg.max_results = static_cast<std::size_t>(max_results);
      ReportItem summary{"search", "search", true, true, "", Json::object()};
      summary.data["side"] = search_side;
      summary.data["radius"] = cfg.radius;
      std::size_t found = 0;
      std::vector<std::pair<std::string, WitnessCertificate>> certs;
      if (search_side == "k3") {
        const HalfIntVector H = parse_class(target_text);
        for (const auto& w : search_k3_witness(H, cfg, model)) certs.emplace_back("witness." + std::to_string(found++), w.certificate);
      } else {
        const EnriquesVector h = parse_enriques(target_text);
        for (const auto& w : search_enriques_witness(h, cfg)) certs.emplace_back("witness." + std::to_string(found++), w.certificate);
      }
      summary.detail = std::to_string(found) + " witnesses at radius " + std::to_string(cfg.radius);
      summary.data["count"] = found;
      report.add(std::move(summary));
      for (const auto& [id, c] : certs) report.add_certificate(id, c, true, squares_text(c));
    } else if (phi->parsed()) {
      const EnriquesVector h = parse_enriques(join(phi_tokens));
      const auto value = phi_invariant(h, phi_bound);
      ReportItem item{"phi", "solver", true, true,
                      value ? "phi <= " + std::to_string(*value) + " (box bound " + std::to_string(phi_bound) + ")"
                            : "no isotropic vector with nonzero pairing within bound " + std::to_string(phi_bound),
                      Json::object()};
      item.data["h"] = vector_json(h.vector());
      item.data["h2"] = h.norm();
      item.data["bound"] = phi_bound;
      item.data["phi_upper_bound"] = value ? Json(*value) : Json(nullptr);
      item.data["convention"] = "min |h.f| over nonzero isotropic f in the box";
      report.add(std::move(item));
    } else if (inv->parsed()) {
      const auto basis = model.invariant_basis();
      const IntMatrix gram = model.invariant_gram();
      ReportItem item{"inv_lattice", "lattice", basis.size() == 10, true,
                      "rank " + std::to_string(basis.size()) + ", det " + std::to_string(determinant(gram)), Json::object()};
      item.data["rank"] = basis.size();
      item.data["generators"] = Json::array();
      for (const auto& b : basis) item.data["generators"].push_back(vector_json(b));
      Json rows = Json::array();
      for (std::size_t i = 0; i < gram.rows(); ++i) {
        auto row = gram.row(i);
        rows.push_back(std::vector<Int>(row.begin(), row.end()));
      }
      item.data["gram"] = rows;
      item.data["determinant"] = determinant(gram);
      item.data["search_basis"] = Json::array();
      for (const auto& b : model.search_basis()) item.data["search_basis"].push_back(vector_json(b));
      report.add(std::move(item));
      bool mod4 = true;
      for (const auto& b : basis) mod4 = mod4 && (model.norm(b).is_integer() && model.norm(b).num() % 4 == 0);
      report.add_check("inv_lattice.norms_mod4", mod4, "every generator has norm divisible by 4");
    }
    return emit(report, g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n" << e.annotated() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    return usage_error(e.what());
  } catch (const DomainError& e) {
    return usage_error(e.what());
  } catch (const BasisMismatch& e) {
    return usage_error(e.what());
  }
}
