#include "schubfire/polynomial.hpp"

#include <stdexcept>

#include "schubfire/errors.hpp"

namespace schubfire {

Polynomial::Polynomial(std::vector<int> weights, int degree_cap)
    : weights_(std::move(weights)), cap_(degree_cap) {
  for (int w : weights_) {
    if (w <= 0) throw std::invalid_argument("polynomial variable weights must be positive");
  }
}

Polynomial Polynomial::chern(int k, int degree_cap) {
  std::vector<int> weights(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) weights[static_cast<std::size_t>(i)] = i + 1;
  return Polynomial(std::move(weights), degree_cap);
}

Polynomial Polynomial::constant(const BigInt& value) const {
  Polynomial out(weights_, cap_);
  out.add_term(Exponent(weights_.size(), 0), value);
  return out;
}

Polynomial Polynomial::variable(int var) const {
  if (var < 0 || var >= nvars()) throw std::out_of_range("polynomial variable index");
  Polynomial out(weights_, cap_);
  Exponent e(weights_.size(), 0);
  e[static_cast<std::size_t>(var)] = 1;
  out.add_term(e, 1);
  return out;
}

int Polynomial::degree_of(const Exponent& exponent) const {
  int d = 0;
  for (std::size_t i = 0; i < exponent.size(); ++i) d += exponent[i] * weights_[i];
  return d;
}

BigInt Polynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Exponent& exponent, const BigInt& coeff) {
  if (exponent.size() != weights_.size()) throw std::invalid_argument("exponent arity mismatch");
  if (coeff == 0 || degree_of(exponent) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(weights_, cap_);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

bool Polynomial::same_ring(const Polynomial& other) const { return weights_ == other.weights_; }

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(other)) throw ContextMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  const int cap = std::min(a.cap_, b.cap_);
  Polynomial out(a.weights_, cap);
  Polynomial::Exponent e(a.weights_.size());
  BigInt product;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.degree_of(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + a.degree_of(eb) > cap) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product = ca * cb;
      out.add_term(e, product);
    }
  }
  return out;
}

std::string Polynomial::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_decimal(magnitude);
    } else {
      if (magnitude != 1) out += to_decimal(magnitude) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace schubfire
