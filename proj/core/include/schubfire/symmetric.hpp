#pragma once

#include <map>

#include "schubfire/bigint.hpp"
#include "schubfire/partition.hpp"
#include "schubfire/polynomial.hpp"

namespace schubfire {

/// e_j(x_1..x_k) as a root polynomial.
Polynomial elementary_in_roots(int k, int j, int degree_cap);

/// h_j(x_1..x_k) as a root polynomial.
Polynomial complete_in_roots(int k, int j, int degree_cap);

/// Invariance under every adjacent transposition of the variables.
bool is_symmetric(const Polynomial& roots);

/// Rewrites a symmetric root polynomial in the elementary symmetric functions,
/// returning a polynomial in c_1..c_k (c_i standing for e_i). Works by
/// repeatedly cancelling the lexicographically leading monomial x^mu with the
/// product e_1^(mu1-mu2) ... e_k^(mu_k). Throws std::invalid_argument if the
/// input is not symmetric.
Polynomial to_elementary(const Polynomial& roots);

/// Substitutes c_i -> e_i(x) back into root variables.
Polynomial from_elementary(const Polynomial& chern);

/// Kostka numbers K_{lambda,nu} for all partitions nu with at most k parts:
/// the coefficient of x^nu in s_lambda(x_1..x_k).
std::map<Partition, BigInt> kostka_row(const Partition& lambda, int k);

/// s_lambda(x_1..x_k) expanded into monomials using kostka_row.
Polynomial schur_in_roots(const Partition& lambda, int k, int degree_cap);

/// Schur expansion of a symmetric root polynomial, by leading-monomial
/// subtraction against kostka_row. Keys are partitions with at most k parts.
std::map<Partition, BigInt> schur_coefficients(const Polynomial& roots);

}  // namespace schubfire
