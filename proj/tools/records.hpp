#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "schubfire/chow.hpp"
#include "schubfire/limiting.hpp"
#include "schubfire/polynomial.hpp"

namespace schubfire::cli {

using Json = nlohmann::json;

/// [{"partition": [3,2,1], "coeff": "8"}, ...] in (degree, lex) order.
Json schubert_json(const ChowClass& a);
/// [{"monomial": [e1,...,ek], "coeff": "8"}, ...] in print order.
Json chern_json(const Polynomial& p);

/// Fields shared by count and split output.
struct OutputRecord {
  ProblemParams params;
  long m = 0;
  bool generically_empty = false;
  ChowClass total;
  std::optional<ChowClass> sigma_k;
  std::optional<ChowClass> sigma_l;
  std::optional<BigInt> total_count;
  std::optional<BigInt> count_k;
  std::optional<BigInt> count_l;
  std::optional<bool> identity_ok;
  std::optional<Route> route;
  std::optional<bool> routes_agree;
  std::string status = "ok";
  std::map<std::string, double> timings_ms;
};

Json to_json(const OutputRecord& record, bool latex);
/// One "key: value" line per field, same keys and values as the JSON form.
std::string to_text(const OutputRecord& record, bool latex);

}  // namespace schubfire::cli
