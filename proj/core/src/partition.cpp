#include "schubfire/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubfire {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool fits_box(const Partition& lambda, const Box& box) {
  return lambda.length() <= box.rows && lambda[0] <= box.cols;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

Partition complement(const Partition& lambda, const Box& box) {
  if (!fits_box(lambda, box)) throw std::invalid_argument("partition does not fit the box");
  std::vector<int> out(static_cast<std::size_t>(box.rows));
  for (int i = 0; i < box.rows; ++i) {
    out[static_cast<std::size_t>(i)] = box.cols - lambda[static_cast<std::size_t>(box.rows - 1 - i)];
  }
  return Partition(std::move(out));
}

Partition column(int p) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(p, 0)), 1)); }

namespace {

void enumerate_box(const Box& box, std::vector<int>& parts, int max_part,
                   std::vector<Partition>& out) {
  out.emplace_back(parts);
  if (static_cast<int>(parts.size()) == box.rows) return;
  for (int p = 1; p <= max_part; ++p) {
    parts.push_back(p);
    enumerate_box(box, parts, p, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> box_partitions(const Box& box) {
  std::vector<Partition> out;
  std::vector<int> parts;
  enumerate_box(box, parts, box.cols, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });
  return out;
}

namespace {

void vertical_strips(const std::vector<int>& base, const Box& box, std::size_t row, int remaining,
                     std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (row >= base.size()) return;
  const auto rows_left = static_cast<int>(base.size() - row);
  if (rows_left < remaining) return;
  // Adding a box to this row needs room in the box and must not overtake the row above.
  const bool room = base[row] + 1 <= box.cols && (row == 0 || base[row] + 1 <= current[row - 1]);
  if (room) {
    current[row] = base[row] + 1;
    vertical_strips(base, box, row + 1, remaining - 1, current, out);
    current[row] = base[row];
  }
  vertical_strips(base, box, row + 1, remaining, current, out);
}

}  // namespace

std::vector<Partition> pieri_e(const Partition& lambda, int p, const Box& box) {
  if (!fits_box(lambda, box)) throw std::invalid_argument("pieri_e: partition does not fit the box");
  if (p < 0) throw std::invalid_argument("pieri_e: negative strip size");
  std::vector<Partition> out;
  if (p > box.rows) return out;
  std::vector<int> base(static_cast<std::size_t>(box.rows), 0);
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = lambda[i];
  std::vector<int> current = base;
  vertical_strips(base, box, 0, p, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Fills the skew shape nu/lambda label by label. Label i occupies a horizontal
// strip; placing it row by row from the top lets the lattice-word condition be
// checked on cumulative counts: #i in rows <= r must not exceed #(i-1) in rows < r.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& lambda, const Partition& mu, const Box& box)
      : box_(box), content_(mu.parts().begin(), mu.parts().end()) {
    shape_.assign(static_cast<std::size_t>(box.rows), 0);
    for (std::size_t i = 0; i < shape_.size(); ++i) shape_[i] = lambda[i];
    counts_.assign(content_.size(), std::vector<int>(shape_.size(), 0));
  }

  LrExpansion run() {
    if (content_.empty()) {
      result_[Partition(shape_)] = 1;
      return result_;
    }
    start_label(0);
    return std::move(result_);
  }

 private:
  void start_label(std::size_t label) {
    if (label == content_.size()) {
      ++result_[Partition(shape_)];
      return;
    }
    const std::vector<int> before = shape_;
    place(label, 0, content_[label], before, 0, 0);
  }

  // cum_this: boxes labelled `label` in rows above `row`; cum_prev: boxes
  // labelled label-1 in rows strictly above `row`.
  void place(std::size_t label, std::size_t row, int remaining, const std::vector<int>& before,
             int cum_this, int cum_prev) {
    if (remaining == 0) {
      start_label(label + 1);
      return;
    }
    if (row >= shape_.size()) return;
    int limit = std::min(remaining, box_.cols - shape_[row]);
    if (row > 0) limit = std::min(limit, before[row - 1] - shape_[row]);
    if (label > 0) limit = std::min(limit, cum_prev - cum_this);
    const int prev_here = label > 0 ? counts_[label - 1][row] : 0;
    for (int a = std::max(limit, 0); a >= 0; --a) {
      shape_[row] += a;
      counts_[label][row] = a;
      place(label, row + 1, remaining - a, before, cum_this + a, cum_prev + prev_here);
      counts_[label][row] = 0;
      shape_[row] -= a;
    }
  }

  Box box_;
  std::vector<int> content_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> counts_;
  LrExpansion result_;
};

}  // namespace

LrExpansion lr_multiply(const Partition& lambda, const Partition& mu, const Box& box) {
  if (!fits_box(lambda, box) || !fits_box(mu, box)) {
    throw std::invalid_argument("lr_multiply: factor does not fit the box");
  }
  if (lambda.weight() + mu.weight() > box.area()) return {};
  // Fewer labels means a shallower search.
  if (mu.weight() > lambda.weight()) return LrEnumerator(mu, lambda, box).run();
  return LrEnumerator(lambda, mu, box).run();
}

}  // namespace schubfire
