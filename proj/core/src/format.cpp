#include "schubfire/format.hpp"

#include <algorithm>

namespace schubfire {

namespace {

void append_sign(std::string& out, const BigInt& c, bool first, bool latex) {
  if (first) {
    if (c < 0) out += "-";
  } else if (latex) {
    out += c < 0 ? "-" : "+";
  } else {
    out += c < 0 ? " - " : " + ";
  }
}

}  // namespace

std::string format_schubert(const ChowClass& a, bool latex) {
  const auto terms = a.terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms) {
    append_sign(out, c, first, latex);
    first = false;
    const BigInt magnitude = abs(c);
    std::string parts;
    for (int i = 0; i < lambda.length(); ++i) {
      if (i) parts += ",";
      parts += std::to_string(lambda[static_cast<std::size_t>(i)]);
    }
    if (latex) {
      if (magnitude != 1) out += to_decimal(magnitude) + "\\,";
      out += lambda.empty() ? std::string("1") : "\\sigma_{" + parts + "}";
    } else {
      if (magnitude != 1) out += to_decimal(magnitude) + "*";
      out += "s[" + parts + "]";
    }
  }
  return out;
}

std::vector<std::pair<Polynomial::Exponent, BigInt>> chern_terms(const Polynomial& p) {
  std::vector<std::pair<Polynomial::Exponent, BigInt>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [&p](const auto& a, const auto& b) {
    const int da = p.degree_of(a.first);
    const int db = p.degree_of(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return out;
}

std::string format_chern(const Polynomial& p, bool latex) {
  const auto terms = chern_terms(p);
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    append_sign(out, c, first, latex);
    first = false;
    const BigInt magnitude = abs(c);
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const std::string index = std::to_string(i + 1);
      if (latex) {
        factors.push_back("{c_" + index + "}" + (e[i] > 1 ? "^{" + std::to_string(e[i]) + "}" : ""));
      } else {
        factors.push_back("c" + index + (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
      }
    }
    const std::string sep = latex ? "\\," : "*";
    std::string mono;
    for (std::size_t i = 0; i < factors.size(); ++i) mono += (i ? sep : "") + factors[i];
    if (mono.empty()) {
      out += to_decimal(magnitude);
    } else {
      if (magnitude != 1) out += to_decimal(magnitude) + sep;
      out += mono;
    }
  }
  return out;
}

}  // namespace schubfire
