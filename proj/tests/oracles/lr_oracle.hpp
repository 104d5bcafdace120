#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "schubfire/partition.hpp"

namespace oracle {

// sigma_lambda * sigma_mu through the dual Jacobi-Trudi determinant
// sigma_lambda = det(e_{lambda'_i - i + j}), each e_p applied to sigma_mu by Pieri.
inline schubfire::LrExpansion lr_by_pieri(const schubfire::Partition& lambda,
                                          const schubfire::Partition& mu,
                                          const schubfire::Box& box) {
  using schubfire::LrExpansion;
  using schubfire::Partition;
  LrExpansion out;
  if (!schubfire::fits_box(lambda, box) || !schubfire::fits_box(mu, box)) return out;
  const Partition conj = schubfire::conjugate(lambda);
  const int size = conj.length();
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
      }
    }
    LrExpansion current{{mu, 1}};
    for (int i = 0; i < size && !current.empty(); ++i) {
      const int p = conj[static_cast<std::size_t>(i)] - i + perm[static_cast<std::size_t>(i)];
      LrExpansion next;
      if (p >= 0) {
        for (const auto& [nu, c] : current) {
          for (const Partition& rho : schubfire::pieri_e(nu, p, box)) next[rho] += c;
        }
      }
      current = std::move(next);
    }
    for (const auto& [nu, c] : current) out[nu] += sign * c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace oracle
