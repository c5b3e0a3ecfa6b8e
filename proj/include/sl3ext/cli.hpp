#pragma once

// Report builders behind the command-line tool. Each command returns a
// Report that renders to JSON (default) or CSV.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "admissible.hpp"
#include "charring.hpp"
#include "extring.hpp"
#include "weyl.hpp"

namespace sl3ext::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  double max_defect = 0.0;
};

struct Report {
  std::string command;
  std::optional<int> p;
  Json payload = Json::object();
  std::vector<Check> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline Json to_json(const Report& r) {
  Json out;
  out["command"] = r.command;
  out["p"] = r.p ? Json(*r.p) : Json(nullptr);
  out["payload"] = r.payload;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"max_defect", c.max_defect}});
  out["checks"] = checks;
  return out;
}

/// Exact check: the defect is the number of mismatches.
inline Check exact_check(std::string name, long long mismatches) {
  return {std::move(name), mismatches == 0, static_cast<double>(mismatches)};
}

inline Check numeric_check(std::string name, double defect, double tol) {
  return {std::move(name), defect < tol, defect};
}

inline std::string epsilon_text(int e) { return e > 0 ? "+1" : "-1"; }

inline Json hyperplane_list(unsigned flags) {
  Json out = Json::array();
  if (flags & kOnAlpha1) out.push_back("alpha1");
  if (flags & kOnAlpha2) out.push_back("alpha2");
  if (flags & kOnTheta) out.push_back("theta");
  return out;
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_alcove(int p) {
  Report r{"alcove", p, Json::object(), {}};
  Json rows = Json::array();
  for (const auto& y : enumerate_alcove(p))
    rows.push_back({{"element", to_string(y)},
                    {"iota", to_string(iota(y))},
                    {"length", length(y)},
                    {"dim", dimension(y)}});
  r.payload["count"] = rows.size();
  r.payload["rows"] = rows;
  return r;
}

inline Report cmd_dual(int p) {
  Report r{"dual", p, Json::object(), {}};
  Json rows = Json::array();
  for (const auto& d : dual_set(p))
    rows.push_back({{"mu", to_string(d.mu)},
                    {"epsilon", epsilon_text(d.epsilon)},
                    {"hyperplanes", hyperplane_list(d.hyperplanes)},
                    {"F", f_eval(d, p)}});
  r.payload["count"] = rows.size();
  r.payload["rows"] = rows;
  return r;
}

inline Report cmd_character(const AffineElement& y) {
  Report r{"character", std::nullopt, Json::object(), {}};
  const ChamberDecomposition d = reduce_to_fundamental(y);
  const GroupRingElement chi = ext_character_any(y);
  r.payload["y"] = to_string(y);
  r.payload["dominant"] = is_dominant(y);
  r.payload["chamber"] = to_string(d.chamber);
  r.payload["sign"] = det(d.wbar);
  r.payload["iota"] = to_string(iota(d.chamber));
  r.payload["dimension"] = dimension(d.chamber);
  Json terms = Json::object();
  for (const auto& [z, c] : chi.terms()) terms[to_string(z)] = c;
  r.payload["terms"] = terms;
  const bool same = ext_character_from_classical(d.chamber) == ext_character(d.chamber);
  r.checks.push_back(exact_check("constructions_agree", same ? 0 : 1));
  r.checks.push_back(exact_check(
      "dimension_closed_form", dimension(d.chamber) == dimension_closed_form(d.chamber) ? 0 : 1));
  return r;
}

inline void require_in_alcove(const AffineElement& y, int p) {
  check_p(p);
  if (!in_alcove(y, p))
    throw std::invalid_argument("element " + to_string(y) + " is not in the alcove for p = " +
                                std::to_string(p));
}

inline Report cmd_fusion(int p, const AffineElement& x, const AffineElement& y) {
  require_in_alcove(x, p);
  require_in_alcove(y, p);
  Report r{"fusion", p, Json::object(), {}};
  r.payload["x"] = to_string(x);
  r.payload["y"] = to_string(y);
  Json product = Json::object();
  long long mismatches = 0;
  for (const auto& z : enumerate_alcove(p)) {
    const long long n = fusion_constant(x, y, z, p);
    if (n != fusion_constant_direct(x, y, z, p)) ++mismatches;
    if (n != 0) product[to_string(z)] = n;
  }
  r.payload["product"] = product;
  r.checks.push_back(exact_check("routes_agree", mismatches));
  return r;
}

inline Report cmd_fusion_all(int p) {
  Report r{"fusion", p, Json::object(), {}};
  const FusionTable t = fusion_table(p);
  const FusionTable td = fusion_table_direct(p);
  Json labels = Json::array();
  for (const auto& y : t.labels) labels.push_back(to_string(y));
  Json tensor = Json::array();
  long long mismatches = 0;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y)
      for (std::size_t z = 0; z < t.size(); ++z) {
        if (t.at(x, y, z) != td.at(x, y, z)) ++mismatches;
        if (t.at(x, y, z) != 0)
          tensor.push_back({{"x", to_string(t.labels[x])},
                            {"y", to_string(t.labels[y])},
                            {"z", to_string(t.labels[z])},
                            {"N", t.at(x, y, z)}});
      }
  r.payload["labels"] = labels;
  r.payload["tensor"] = tensor;
  r.checks.push_back(exact_check("routes_agree", mismatches));
  return r;
}

inline Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Report cmd_spectrum(int p) {
  Report r{"spectrum", p, Json::object(), {}};
  const EigenData ed = eigen_data(p);
  Json labels = Json::array(), points = Json::array(), psi = Json::array(), eig = Json::array();
  for (const auto& y : ed.labels) labels.push_back(to_string(y));
  for (std::size_t a = 0; a < ed.cols(); ++a)
    points.push_back({{"mu", to_string(ed.points[a].mu)},
                      {"epsilon", epsilon_text(ed.points[a].epsilon)},
                      {"psi1", ed.psi1[a]}});
  for (std::size_t y = 0; y < ed.rows(); ++y) {
    Json prow = Json::array(), erow = Json::array();
    for (std::size_t a = 0; a < ed.cols(); ++a) {
      prow.push_back(complex_pair(ed.psi_at(y, a)));
      erow.push_back(complex_pair(ed.chi_at(y, a)));
    }
    psi.push_back(prow);
    eig.push_back({{"y", to_string(ed.labels[y])}, {"values", erow}});
  }
  r.payload["labels"] = labels;
  r.payload["points"] = points;
  r.payload["psi"] = psi;
  r.payload["eigenvalues"] = eig;
  r.checks.push_back(numeric_check("unitarity", unitarity_defect(ed), kUnitarityTolerance));
  return r;
}

// ---------------------------------------------------------------------------
// Verification suites

namespace detail {

inline AffineElement random_element(std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> w(0, 5), c(-radius, radius);
  return {kAllWbar[static_cast<std::size_t>(w(rng))], {c(rng), c(rng)}};
}

inline std::vector<Check> group_suite(int p) {
  std::mt19937_64 rng(20240611);
  long long assoc = 0, inv = 0, tlog = 0, intertwine = 0, roundtrip = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_element(rng, 6), y = random_element(rng, 6), z = random_element(rng, 6);
    if ((x * y) * z != x * (y * z)) ++assoc;
    if (x * inverse(x) != identity_element() || inverse(x) * x != identity_element()) ++inv;
    if (iota(x * y) != apply(inverse(y.wbar), iota(x)) + iota(y)) ++tlog;
    const Wbar w = kAllWbar[static_cast<std::size_t>(i % 6)];
    if (iota(x * finite_element(w)) != shifted(inverse(w), iota(x))) ++intertwine;
    const ChamberDecomposition d = reduce_to_fundamental(x);
    if (!is_dominant(d.chamber) || d.chamber * finite_element(d.wbar) != x) ++roundtrip;
  }
  const auto alcove = enumerate_alcove(p);
  long long sigma = 0;
  for (const auto& y : alcove) {
    const auto s1 = sigma_p(p, y);
    if (!in_alcove(s1, p) || sigma_p(p, sigma_p(p, s1)) != y) ++sigma;
  }
  const long long count = static_cast<long long>(alcove.size()) - static_cast<long long>(p) * p;
  return {exact_check("associativity", assoc),
          exact_check("inverses", inv),
          exact_check("twisted_log", tlog),
          exact_check("intertwining", intertwine),
          exact_check("reduce_round_trip", roundtrip),
          exact_check("alcove_size", count == 0 ? 0 : 1),
          exact_check("sigma_order_three", sigma)};
}

inline std::vector<Check> ring_suite(int p) {
  const GroupRingElement f0 = ext_character(w0_element());
  const GroupRingElement rel =
      f0 * f0 - (1 + 2 * f0 + ext_character(w10_element()) + ext_character(w20_element()));
  const GroupRingElement F = class_element();
  const GroupRingElement basr = F * F - (GroupRingElement(3) +
                                         GroupRingElement(gamma()) * embed_classical(kOmega1) +
                                         GroupRingElement(inverse(gamma())) * embed_classical(kOmega2));
  const auto chamber = chamber_elements(4);
  long long constructions = 0, dims = 0, routes = 0, pieri_bad = 0, negative = 0;
  for (const auto& y : chamber) {
    if (ext_character(y) != ext_character_from_classical(y)) ++constructions;
    if (dimension(y) != dimension_closed_form(y)) ++dims;
    for (int j = 0; j < 3; ++j)
      if (pieri(j, y) != decompose_character(ext_character(generator_label(j)) * ext_character(y)))
        ++pieri_bad;
  }
  for (const auto& x : chamber)
    for (const auto& y : chamber)
      for (const auto& [z, c] : product_decomposition(x, y)) {
        if (c < 0) ++negative;
        if (structure_constant(x, y, z) != c || structure_constant_classical(x, y, z) != c) ++routes;
      }
  (void)p;
  return {exact_check("f0_squared_relation", static_cast<long long>(rel.size())),
          exact_check("class_element_square", static_cast<long long>(basr.size())),
          exact_check("constructions_agree", constructions),
          exact_check("dimension_routes", dims),
          exact_check("pieri_rules", pieri_bad),
          exact_check("structure_constant_routes", routes),
          exact_check("structure_constants_nonnegative", negative)};
}

inline std::vector<Check> fusion_suite(int p) {
  const FusionTable t = fusion_table(p);
  const FusionTable td = fusion_table_direct(p);
  const std::size_t n = t.size(), one = t.index_of(identity_element());
  long long routes = 0, unit = 0, dual = 0, comm = 0, assoc = 0, neg = 0, current = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (t.at(x, y, one) != (t.labels[y] == conjugate(t.labels[x]) ? 1 : 0)) ++dual;
      for (std::size_t z = 0; z < n; ++z) {
        if (t.at(x, y, z) != td.at(x, y, z)) ++routes;
        if (t.at(x, y, z) < 0) ++neg;
        if (t.at(x, y, z) != t.at(y, x, z)) ++comm;
        if (t.at(one, y, z) != (y == z ? 1 : 0)) ++unit;
        const std::size_t sy = t.index_of(sigma_p(p, t.labels[y]));
        const std::size_t sz = t.index_of(sigma_p(p, t.labels[z]));
        if (t.at(x, sy, sz) != t.at(x, y, z)) ++current;
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t u = 0; u < n; ++u) {
          long long lhs = 0, rhs = 0;
          for (std::size_t z = 0; z < n; ++z) {
            lhs += t.at(x, y, z) * t.at(z, w, u);
            rhs += t.at(y, w, z) * t.at(x, z, u);
          }
          if (lhs != rhs) ++assoc;
        }
  return {exact_check("routes_agree", routes),
          exact_check("identity_slice", unit),
          exact_check("conjugation_duality", dual),
          exact_check("commutativity", comm),
          exact_check("associativity", assoc),
          exact_check("nonnegative", neg),
          exact_check("simple_current_symmetry", current)};
}

inline std::vector<Check> spectral_suite(int p) {
  const FusionTable t = fusion_table(p);
  const EigenData ed = eigen_data(p);
  const std::size_t n = t.size();
  double residual = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < ed.cols(); ++a) {
        Complex s = 0.0;
        for (std::size_t z = 0; z < n; ++z) s += static_cast<double>(t.at(x, y, z)) * ed.chi_at(z, a);
        residual = std::max(residual, std::abs(ed.chi_at(x, a) * ed.chi_at(y, a) - s));
      }
  const PasquierVerlinde pv = pasquier_verlinde_with_defect(ed);
  long long pv_mismatch = 0;
  for (std::size_t i = 0; i < t.n.size(); ++i)
    if (t.n[i] != pv.table.n[i]) ++pv_mismatch;

  double hyper = 0.0, lemma73 = 0.0, alt = 0.0;
  for (std::size_t a = 0; a < ed.cols(); ++a) {
    const DualPoint& mu = ed.points[a];
    for (std::size_t y = 0; y < n; ++y)
      alt = std::max(alt, std::abs(ed.chi_at(y, a) - q_char_via_level_3p(ed.labels[y], mu, p)));
    if (!mu.on_hyperplane()) continue;
    hyper = std::max(hyper, std::abs(r_epsilon(mu, p)));
    const double scale = mu.mu == Weight{p - 1, p - 1} ? 1.0 : std::sqrt(3.0);
    for (std::size_t y = 0; y < n; ++y) {
      const Weight i = iota(ed.labels[y]);
      hyper = std::max(hyper, std::abs(ed.chi_at(y, a) - q_character_eval(i, mu.mu, 3 * p)));
      lemma73 = std::max(lemma73, std::abs(ed.psi_at(y, a) - scale * modular_s(i, mu.mu, 3 * p)));
    }
  }
  return {numeric_check("eigen_residual", residual, 1e-8),
          numeric_check("unitarity", unitarity_defect(ed), kUnitarityTolerance),
          numeric_check("pasquier_verlinde_rounding", pv.max_defect, kRoundingTolerance),
          exact_check("pasquier_verlinde_table", pv_mismatch),
          numeric_check("level_3p_route", alt, 1e-9),
          numeric_check("hyperplane_reduction", hyper, 1e-9),
          numeric_check("psi_equals_s_matrix", lemma73, 1e-9)};
}

}  // namespace detail

inline Report cmd_verify(int p, const std::string& suite) {
  check_p(p);
  Report r{"verify", p, Json::object(), {}};
  r.payload["suite"] = suite;
  if (suite == "group") r.checks = detail::group_suite(p);
  else if (suite == "ring") r.checks = detail::ring_suite(p);
  else if (suite == "fusion") r.checks = detail::fusion_suite(p);
  else if (suite == "spectral") r.checks = detail::spectral_suite(p);
  else throw std::invalid_argument("unknown suite '" + suite + "' (group, ring, fusion, spectral)");
  return r;
}

// ---------------------------------------------------------------------------
// CSV rendering

namespace detail {

inline std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

inline void csv_rows(std::ostringstream& os, const Json& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [k, v] : rows.front().items()) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [k, v] : row.items()) {
      os << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    os << '\n';
  }
}

}  // namespace detail

inline std::string to_csv(const Report& r) {
  std::ostringstream os;
  const Json& pl = r.payload;
  if (r.command == "fusion" && pl.contains("tensor")) {
    detail::csv_rows(os, pl["tensor"]);
  } else if (r.command == "fusion") {
    os << "x,y,z,N\n";
    for (const auto& [z, n] : pl["product"].items())
      os << detail::csv_cell(pl["x"]) << ',' << detail::csv_cell(pl["y"]) << ','
         << detail::csv_cell(z) << ',' << n.dump() << '\n';
  } else if (r.command == "character") {
    os << "element,multiplicity\n";
    for (const auto& [z, m] : pl["terms"].items()) os << detail::csv_cell(z) << ',' << m.dump() << '\n';
  } else if (r.command == "spectrum") {
    os << "y,mu,psi_re,psi_im,chi_re,chi_im\n";
    for (std::size_t y = 0; y < pl["labels"].size(); ++y)
      for (std::size_t a = 0; a < pl["points"].size(); ++a) {
        const auto& psi = pl["psi"][y][a];
        const auto& chi = pl["eigenvalues"][y]["values"][a];
        os << detail::csv_cell(pl["labels"][y]) << ',' << detail::csv_cell(pl["points"][a]["mu"])
           << ',' << psi[0].dump() << ',' << psi[1].dump() << ',' << chi[0].dump() << ','
           << chi[1].dump() << '\n';
      }
  } else if (r.command == "verify") {
    os << "name,status,max_defect\n";
    for (const auto& c : r.checks)
      os << c.name << ',' << (c.pass ? "pass" : "fail") << ',' << Json(c.max_defect).dump() << '\n';
  } else if (pl.contains("rows")) {
    detail::csv_rows(os, pl["rows"]);
  }
  return os.str();
}

}  // namespace sl3ext::cli
