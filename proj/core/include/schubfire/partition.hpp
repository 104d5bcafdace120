#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace schubfire {

/// Weakly decreasing sequence of positive integers indexing a Schubert class.
///
/// Trailing zeros are stripped on construction, so (2,1,0) and (2,1) are the
/// same value. Ordering is lexicographic on the stored parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument on negative or increasing entries.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  /// i-th part, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// The rows x cols rectangle bounding Schubert classes on G(rows, rows + cols).
struct Box {
  int rows = 0;
  int cols = 0;

  int area() const { return rows * cols; }
  friend bool operator==(const Box&, const Box&) = default;
};

bool fits_box(const Partition& lambda, const Box& box);

Partition conjugate(const Partition& lambda);

/// The partition whose diagram, rotated by 180 degrees, fills the rest of the box.
Partition complement(const Partition& lambda, const Box& box);

/// (1^p), i.e. a single column of height p.
Partition column(int p);

/// Every partition fitting the box, sorted by (weight, lex).
std::vector<Partition> box_partitions(const Box& box);

/// Pieri rule for e_p = sigma_(1^p): all vertical strips of size p added to
/// lambda that stay inside the box, in lex order.
std::vector<Partition> pieri_e(const Partition& lambda, int p, const Box& box);

using LrExpansion = std::map<Partition, std::int64_t>;

/// Littlewood-Richardson product sigma_lambda * sigma_mu truncated to the box,
/// computed by enumerating LR skew tableaux of shape nu/lambda and content mu.
LrExpansion lr_multiply(const Partition& lambda, const Partition& mu, const Box& box);

}  // namespace schubfire
