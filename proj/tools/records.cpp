#include "records.hpp"

#include <cmath>
#include <sstream>

#include "schubfire/format.hpp"

namespace schubfire::cli {

namespace {

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

std::string bool_text(bool v) { return v ? "true" : "false"; }

}  // namespace

Json schubert_json(const ChowClass& a) {
  Json out = Json::array();
  for (const auto& [lambda, coeff] : a.terms()) {
    Json parts = Json::array();
    for (int p : lambda.parts()) parts.push_back(p);
    out.push_back(Json{{"partition", parts}, {"coeff", to_decimal(coeff)}});
  }
  return out;
}

Json chern_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [exponent, coeff] : chern_terms(p)) {
    out.push_back(Json{{"monomial", exponent}, {"coeff", to_decimal(coeff)}});
  }
  return out;
}

Json to_json(const OutputRecord& record, bool latex) {
  const auto& p = record.params;
  Json params{{"r", p.r}, {"n", p.n}, {"d", p.d}};
  if (p.k) {
    params["k"] = *p.k;
    params["l"] = p.l();
  }
  Json out{{"params", params},
           {"m", record.m},
           {"generically_empty", record.generically_empty},
           {"total_class", schubert_json(record.total)},
           {"status", record.status}};
  if (latex) out["total_class_latex"] = format_schubert(record.total, true);
  if (record.sigma_k) {
    out["sigma_k_class"] = schubert_json(*record.sigma_k);
    if (latex) out["sigma_k_class_latex"] = format_schubert(*record.sigma_k, true);
  }
  if (record.sigma_l) {
    out["sigma_l_class"] = schubert_json(*record.sigma_l);
    if (latex) out["sigma_l_class_latex"] = format_schubert(*record.sigma_l, true);
  }
  if (record.total_count) out["total_count"] = to_decimal(*record.total_count);
  if (record.count_k) out["count_k"] = to_decimal(*record.count_k);
  if (record.count_l) out["count_l"] = to_decimal(*record.count_l);
  if (record.identity_ok) out["identity_ok"] = *record.identity_ok;
  if (record.route) out["route"] = to_string(*record.route);
  if (record.routes_agree) out["routes_agree"] = *record.routes_agree;
  Json timings = Json::object();
  for (const auto& [phase, ms] : record.timings_ms) timings[phase] = round_ms(ms);
  out["timings_ms"] = timings;
  return out;
}

std::string to_text(const OutputRecord& record, bool latex) {
  std::ostringstream os;
  const auto& p = record.params;
  os << "r: " << p.r << '\n' << "n: " << p.n << '\n' << "d: " << p.d << '\n';
  if (p.k) os << "k: " << *p.k << '\n' << "l: " << p.l() << '\n';
  os << "m: " << record.m << '\n';
  os << "generically_empty: " << bool_text(record.generically_empty) << '\n';
  os << "total_class: " << format_schubert(record.total, latex) << '\n';
  if (record.sigma_k) os << "sigma_k_class: " << format_schubert(*record.sigma_k, latex) << '\n';
  if (record.sigma_l) os << "sigma_l_class: " << format_schubert(*record.sigma_l, latex) << '\n';
  if (record.total_count) os << "total_count: " << to_decimal(*record.total_count) << '\n';
  if (record.count_k) os << "count_k: " << to_decimal(*record.count_k) << '\n';
  if (record.count_l) os << "count_l: " << to_decimal(*record.count_l) << '\n';
  if (record.identity_ok) os << "identity_ok: " << bool_text(*record.identity_ok) << '\n';
  if (record.route) os << "route: " << to_string(*record.route) << '\n';
  if (record.routes_agree) os << "routes_agree: " << bool_text(*record.routes_agree) << '\n';
  os << "status: " << record.status << '\n';
  for (const auto& [phase, ms] : record.timings_ms) os << "time_" << phase << "_ms: " << round_ms(ms) << '\n';
  return os.str();
}

}  // namespace schubfire::cli
