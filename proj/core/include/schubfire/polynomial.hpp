#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubfire/bigint.hpp"

namespace schubfire {

/// Sparse polynomial with arbitrary-precision integer coefficients in a fixed
/// set of weighted variables, truncated above a weighted degree cap.
///
/// Two instantiations matter here: Chern roots x_1..x_k (all weights 1) and
/// Chern classes c_1..c_k (weight of c_i is i). Terms of weighted degree above
/// the cap are discarded when created, so truncation is structural.
class Polynomial {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, BigInt>;

  Polynomial() = default;
  Polynomial(std::vector<int> weights, int degree_cap);

  /// Variables x_1..x_k of weight 1.
  static Polynomial roots(int k, int degree_cap) {
    return Polynomial(std::vector<int>(static_cast<std::size_t>(k), 1), degree_cap);
  }
  /// Variables c_1..c_k with c_i of weight i.
  static Polynomial chern(int k, int degree_cap);

  Polynomial constant(const BigInt& value) const;
  /// The variable with 0-based index `var`, or zero if it exceeds the cap.
  Polynomial variable(int var) const;

  int nvars() const { return static_cast<int>(weights_.size()); }
  int degree_cap() const { return cap_; }
  const std::vector<int>& weights() const { return weights_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree_of(const Exponent& exponent) const;
  BigInt coefficient(const Exponent& exponent) const;
  /// Adds coeff * x^exponent; silently dropped above the cap.
  void add_term(const Exponent& exponent, const BigInt& coeff);

  Polynomial homogeneous_part(int degree) const;
  bool same_ring(const Polynomial& other) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const BigInt& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= BigInt(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& s) { return a *= s; }
  friend Polynomial operator*(const BigInt& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.weights_ == b.weights_ && a.terms_ == b.terms_;
  }

  /// Human-readable form with the given variable prefix, e.g. "2*x1^2 - x2".
  std::string to_string(const std::string& prefix) const;

 private:
  void check_ring(const Polynomial& other) const;

  std::vector<int> weights_;
  int cap_ = 0;
  TermMap terms_;
};

}  // namespace schubfire
