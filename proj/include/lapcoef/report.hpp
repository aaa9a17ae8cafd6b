#pragma once

#include <charconv>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lapcoef/charpoly.hpp"
#include "lapcoef/diagnostics.hpp"
#include "lapcoef/limit_stats.hpp"
#include "lapcoef/spectrum.hpp"

namespace lapcoef::report {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// --- coefficients: exact decimal strings, k = 0..n -------------------------

inline Json coefficients_json(const CoefficientVector& c) {
  Json arr = Json::array();
  for (const auto& v : c.coeffs) arr.push_back(to_decimal(v));
  return arr;
}

inline void write_coefficients_csv(std::ostream& out, const CoefficientVector& c) {
  out << "k,c_k\n";
  for (std::size_t k = 0; k < c.size(); ++k) out << k << ',' << to_decimal(c[k]) << '\n';
}

// --- spectrum ---------------------------------------------------------------

inline Json spectrum_json(const Spectrum& s, double trace_residual) {
  Json values = Json::array();
  for (double v : s.values) values.push_back(v);
  return Json{{"values", values}, {"exact", s.exact}, {"trace_residual", trace_residual}};
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s, double trace_residual) {
  out << "i,lambda,exact,trace_residual\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << i << ',' << format_double(s.values[i]) << ',' << (s.exact ? "true" : "false") << ','
        << format_double(trace_residual) << '\n';
  }
}

// --- diagnostics rows -------------------------------------------------------

inline const std::vector<std::string>& diagnostics_columns() {
  static const std::vector<std::string> cols{
      "family",         "n",           "vertices",         "edges",         "max_degree",
      "mu",             "sigma2",      "sigma2_lower_bound", "sigma2_family_bound", "clt_distance",
      "llt_distance",   "poisson_distance", "verdict",     "verdict_detail", "mu_per_vertex",
      "sigma2_per_vertex", "mu_limit_error", "sigma2_limit_error"};
  return cols;
}

inline Json to_json(const DiagnosticsReport& r) {
  Json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["max_degree"] = r.max_degree;
  j["mu"] = r.mu;
  j["sigma2"] = r.sigma2;
  j["sigma2_lower_bound"] = r.sigma2_lower_bound;
  if (r.sigma2_family_bound) j["sigma2_family_bound"] = *r.sigma2_family_bound;
  j["clt_distance"] = r.clt_distance;
  j["llt_distance"] = r.llt_distance;
  if (r.poisson_distance) j["poisson_distance"] = *r.poisson_distance;
  j["verdict"] = r.verdict;
  j["verdict_detail"] = r.verdict_detail;
  if (r.mu_per_vertex) j["mu_per_vertex"] = *r.mu_per_vertex;
  if (r.sigma2_per_vertex) j["sigma2_per_vertex"] = *r.sigma2_per_vertex;
  if (r.mu_limit_error) j["mu_limit_error"] = *r.mu_limit_error;
  if (r.sigma2_limit_error) j["sigma2_limit_error"] = *r.sigma2_limit_error;
  return j;
}

inline Json to_json(std::span<const DiagnosticsReport> rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr;
}

inline void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticsReport> rows) {
  const auto& cols = diagnostics_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& r : rows) {
    out << csv_field(r.family) << ',' << r.n << ',' << r.vertices << ',' << r.edges << ',' << r.max_degree << ','
        << format_double(r.mu) << ',' << format_double(r.sigma2) << ',' << format_double(r.sigma2_lower_bound) << ','
        << opt(r.sigma2_family_bound) << ',' << format_double(r.clt_distance) << ','
        << format_double(r.llt_distance) << ',' << opt(r.poisson_distance) << ',' << csv_field(r.verdict) << ','
        << csv_field(r.verdict_detail) << ',' << opt(r.mu_per_vertex) << ',' << opt(r.sigma2_per_vertex) << ','
        << opt(r.mu_limit_error) << ',' << opt(r.sigma2_limit_error) << '\n';
  }
}

// --- stats ------------------------------------------------------------------

inline Json stats_json(const LimitStats& s, std::size_t vertices, double lower_bound) {
  return Json{{"n", s.n}, {"vertices", vertices}, {"mu", s.mu}, {"sigma2", s.sigma2},
              {"sigma2_lower_bound", lower_bound}};
}

inline void write_stats_csv(std::ostream& out, const LimitStats& s, std::size_t vertices, double lower_bound) {
  out << "n,vertices,mu,sigma2,sigma2_lower_bound\n"
      << s.n << ',' << vertices << ',' << format_double(s.mu) << ',' << format_double(s.sigma2) << ','
      << format_double(lower_bound) << '\n';
}

}  // namespace lapcoef::report
