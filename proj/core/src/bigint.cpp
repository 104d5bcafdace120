#include "schubfire/bigint.hpp"

#include <limits>
#include <stdexcept>

#include "schubfire/errors.hpp"

namespace schubfire {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

long binomial_small(long n, long k) {
  const BigInt value = binomial(n, k);
  if (!value.fits_slong_p()) throw std::overflow_error("binomial coefficient overflows long");
  return value.get_si();
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(const std::string& text) {
  const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw ParseError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("bad integer literal '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace schubfire
