#include "schubfire/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schubfire {

namespace {

void subsets(int k, int j, int start, Polynomial::Exponent& e, Polynomial& out) {
  if (j == 0) {
    out.add_term(e, 1);
    return;
  }
  for (int i = start; i <= k - j; ++i) {
    e[static_cast<std::size_t>(i)] = 1;
    subsets(k, j - 1, i + 1, e, out);
    e[static_cast<std::size_t>(i)] = 0;
  }
}

void multisets(int k, int j, int start, Polynomial::Exponent& e, Polynomial& out) {
  if (j == 0) {
    out.add_term(e, 1);
    return;
  }
  for (int i = start; i < k; ++i) {
    ++e[static_cast<std::size_t>(i)];
    multisets(k, j - 1, i, e, out);
    --e[static_cast<std::size_t>(i)];
  }
}

bool is_dominant(const Polynomial::Exponent& e) {
  return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

}  // namespace

Polynomial elementary_in_roots(int k, int j, int degree_cap) {
  Polynomial out = Polynomial::roots(k, degree_cap);
  if (j < 0 || j > k) return out;
  Polynomial::Exponent e(static_cast<std::size_t>(k), 0);
  subsets(k, j, 0, e, out);
  return out;
}

Polynomial complete_in_roots(int k, int j, int degree_cap) {
  Polynomial out = Polynomial::roots(k, degree_cap);
  if (j < 0) return out;
  Polynomial::Exponent e(static_cast<std::size_t>(k), 0);
  multisets(k, j, 0, e, out);
  return out;
}

bool is_symmetric(const Polynomial& roots) {
  for (const auto& [e, c] : roots.terms()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      Polynomial::Exponent swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (roots.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

Polynomial to_elementary(const Polynomial& roots) {
  if (!is_symmetric(roots)) throw std::invalid_argument("to_elementary: polynomial is not symmetric");
  const int k = roots.nvars();
  const int cap = roots.degree_cap();
  Polynomial result = Polynomial::chern(k, cap);

  std::vector<Polynomial> elementary;
  for (int j = 0; j <= k; ++j) elementary.push_back(elementary_in_roots(k, j, cap));

  // Memo of e-monomials expanded in roots, built by peeling one factor.
  std::map<Polynomial::Exponent, Polynomial> expanded;
  const std::function<const Polynomial&(const Polynomial::Exponent&)> expand =
      [&](const Polynomial::Exponent& a) -> const Polynomial& {
    if (auto it = expanded.find(a); it != expanded.end()) return it->second;
    auto j = std::find_if(a.begin(), a.end(), [](int v) { return v > 0; });
    Polynomial value = roots.constant(1);
    if (j != a.end()) {
      Polynomial::Exponent smaller = a;
      const auto idx = static_cast<std::size_t>(j - a.begin());
      --smaller[idx];
      value = expand(smaller) * elementary[idx + 1];
    }
    return expanded.emplace(a, std::move(value)).first->second;
  };

  Polynomial rest = roots;
  while (!rest.is_zero()) {
    const auto& [mu, coeff] = *rest.terms().rbegin();
    Polynomial::Exponent a(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const int next = i + 1 < k ? mu[static_cast<std::size_t>(i + 1)] : 0;
      a[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] - next;
    }
    const BigInt c = coeff;
    result.add_term(a, c);
    rest -= expand(a) * c;
  }
  return result;
}

Polynomial from_elementary(const Polynomial& chern) {
  const int k = chern.nvars();
  const int cap = chern.degree_cap();
  Polynomial out = Polynomial::roots(k, cap);
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(k));
  for (const auto& [a, c] : chern.terms()) {
    Polynomial term = out.constant(c);
    for (int i = 0; i < k; ++i) {
      auto& table = powers[static_cast<std::size_t>(i)];
      const int exp = a[static_cast<std::size_t>(i)];
      if (table.empty()) table.push_back(out.constant(1));
      while (static_cast<int>(table.size()) <= exp) {
        table.push_back(table.back() * elementary_in_roots(k, i + 1, cap));
      }
      if (exp > 0) term = term * table[static_cast<std::size_t>(exp)];
    }
    out += term;
  }
  return out;
}

namespace {

// Number of ways to grow `shape` into `target` by successive horizontal strips
// whose sizes are content[idx..].
BigInt count_chains(std::vector<int>& shape, const std::vector<int>& target,
                    const std::vector<int>& content, std::size_t idx,
                    std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo);

void grow_strip(std::vector<int>& shape, const std::vector<int>& before,
                const std::vector<int>& target, const std::vector<int>& content, std::size_t idx,
                std::size_t row, int remaining, BigInt& total,
                std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (remaining == 0) {
    total += count_chains(shape, target, content, idx + 1, memo);
    return;
  }
  if (row >= shape.size()) return;
  int limit = std::min(remaining, target[row] - shape[row]);
  if (row > 0) limit = std::min(limit, before[row - 1] - shape[row]);
  for (int a = limit; a >= 0; --a) {
    shape[row] += a;
    grow_strip(shape, before, target, content, idx, row + 1, remaining - a, total, memo);
    shape[row] -= a;
  }
}

BigInt count_chains(std::vector<int>& shape, const std::vector<int>& target,
                    const std::vector<int>& content, std::size_t idx,
                    std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (idx == content.size()) return shape == target ? BigInt(1) : BigInt(0);
  const auto key = std::make_pair(shape, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  const std::vector<int> before = shape;
  grow_strip(shape, before, target, content, idx, 0, content[idx], total, memo);
  memo.emplace(key, total);
  return total;
}

void partitions_of(int n, int max_part, int max_len, std::vector<int>& parts,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(parts);
    return;
  }
  if (static_cast<int>(parts.size()) == max_len) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_of(n - p, p, max_len, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::map<Partition, BigInt> kostka_row(const Partition& lambda, int k) {
  std::map<Partition, BigInt> row;
  if (lambda.length() > k) return row;
  std::vector<Partition> contents;
  std::vector<int> parts;
  partitions_of(lambda.weight(), lambda.weight(), k, parts, contents);
  std::vector<int> target(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
  for (const Partition& nu : contents) {
    std::vector<int> content(nu.parts().begin(), nu.parts().end());
    std::vector<int> shape(static_cast<std::size_t>(k), 0);
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
    BigInt count = count_chains(shape, target, content, 0, memo);
    if (count != 0) row.emplace(nu, std::move(count));
  }
  return row;
}

Polynomial schur_in_roots(const Partition& lambda, int k, int degree_cap) {
  Polynomial out = Polynomial::roots(k, degree_cap);
  if (lambda.weight() > degree_cap) return out;
  for (const auto& [nu, count] : kostka_row(lambda, k)) {
    // Every permutation of the dominant exponent nu carries the same coefficient.
    Polynomial::Exponent e(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    do {
      out.add_term(e, count);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

std::map<Partition, BigInt> schur_coefficients(const Polynomial& roots) {
  if (!is_symmetric(roots)) throw std::invalid_argument("schur_coefficients: polynomial is not symmetric");
  const int k = roots.nvars();
  // A symmetric polynomial is determined by its dominant monomials.
  std::map<Partition, BigInt> dominant;
  for (const auto& [e, c] : roots.terms()) {
    if (is_dominant(e)) dominant.emplace(Partition(e), c);
  }
  std::map<Partition, BigInt> result;
  // Lex order on partitions refines dominance, so the lex-largest remaining key
  // is the leading term of the next Schur function to subtract.
  while (!dominant.empty()) {
    const auto it = std::prev(dominant.end());
    const Partition lambda = it->first;
    const BigInt coeff = it->second;
    result.emplace(lambda, coeff);
    for (const auto& [nu, kostka] : kostka_row(lambda, k)) {
      auto [pos, inserted] = dominant.try_emplace(nu, 0);
      pos->second -= coeff * kostka;
      if (pos->second == 0) dominant.erase(pos);
    }
  }
  return result;
}

}  // namespace schubfire
