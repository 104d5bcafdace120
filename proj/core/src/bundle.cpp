#include "schubfire/bundle.hpp"

#include <map>
#include <mutex>

#include "schubfire/errors.hpp"
#include "schubfire/symmetric.hpp"

namespace schubfire {

BundleExpr BundleExpr::universal_dual() {
  return BundleExpr(std::make_shared<const Node>(Node{Kind::UniversalDual, 0, {}, {}}));
}

BundleExpr BundleExpr::trivial(int rank) {
  if (rank < 0) throw std::invalid_argument("trivial bundle of negative rank");
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Trivial, rank, {}, {}}));
}

BundleExpr BundleExpr::sym(int degree, BundleExpr child) {
  if (degree < 1) throw std::invalid_argument("Sym degree must be positive");
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Sym, degree, {}, {std::move(child)}}));
}

BundleExpr BundleExpr::dual(BundleExpr child) {
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Dual, 0, {}, {std::move(child)}}));
}

BundleExpr BundleExpr::twist(BundleExpr child, LineClass t) {
  if (!child.is_honest()) throw std::invalid_argument("cannot twist a virtual bundle");
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Twist, 0, t, {std::move(child)}}));
}

BundleExpr BundleExpr::sum(std::vector<BundleExpr> summands) {
  if (summands.empty()) return trivial(0);
  if (summands.size() == 1) return std::move(summands.front());
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Sum, 0, {}, std::move(summands)}));
}

BundleExpr BundleExpr::virtual_diff(BundleExpr plus, BundleExpr minus) {
  return BundleExpr(
      std::make_shared<const Node>(Node{Kind::VirtualDiff, 0, {}, {std::move(plus), std::move(minus)}}));
}

BundleExpr BundleExpr::pullback(BundleExpr child) {
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Pullback, 0, {}, {std::move(child)}}));
}

bool BundleExpr::is_honest() const {
  if (kind() == Kind::VirtualDiff) return false;
  for (const BundleExpr& child : children()) {
    if (!child.is_honest()) return false;
  }
  return true;
}

long BundleExpr::rank(int k) const {
  switch (kind()) {
    case Kind::UniversalDual:
      return k;
    case Kind::Trivial:
      return parameter();
    case Kind::Sym:
      return sym_rank(children()[0].rank(k), parameter());
    case Kind::Dual:
    case Kind::Twist:
    case Kind::Pullback:
      return children()[0].rank(k);
    case Kind::Sum: {
      long total = 0;
      for (const BundleExpr& child : children()) total += child.rank(k);
      return total;
    }
    case Kind::VirtualDiff:
      return children()[0].rank(k) - children()[1].rank(k);
  }
  return 0;
}

namespace {

std::string line_to_string(const LineClass& t) {
  std::string out;
  auto append = [&](long coeff, const char* name) {
    if (coeff == 0) return;
    if (!out.empty()) out += coeff < 0 ? "-" : "+";
    else if (coeff < 0) out += "-";
    const long magnitude = coeff < 0 ? -coeff : coeff;
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += name;
  };
  append(t.zeta, "zeta");
  append(t.hyperplane, "s1");
  return out.empty() ? "0" : out;
}

}  // namespace

std::string BundleExpr::to_string() const {
  switch (kind()) {
    case Kind::UniversalDual:
      return "Ustar";
    case Kind::Trivial:
      return "trivial(" + std::to_string(parameter()) + ")";
    case Kind::Sym:
      return "sym(" + std::to_string(parameter()) + "," + children()[0].to_string() + ")";
    case Kind::Dual:
      return "dual(" + children()[0].to_string() + ")";
    case Kind::Twist:
      return "twist(" + children()[0].to_string() + "," + line_to_string(twist_class()) + ")";
    case Kind::Pullback:
      return "pullback(" + children()[0].to_string() + ")";
    case Kind::Sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out += " + ";
        out += children()[i].to_string();
      }
      return out + ")";
    }
    case Kind::VirtualDiff:
      return "(" + children()[0].to_string() + " - " + children()[1].to_string() + ")";
  }
  return {};
}

long sym_rank(long e, int d) { return binomial_small(e + d - 1, d); }

RankTriple RankTriple::of(int r, int d, int k) {
  return RankTriple{binomial_small(r + d, r), binomial_small(r + k, r), binomial_small(r + d - k, r)};
}

namespace {

struct SymTableEntry {
  int degree_cap = -1;
  std::vector<Polynomial> table;
};

std::mutex sym_mutex;
std::map<std::pair<int, int>, SymTableEntry> sym_memo;

void multisets(int e, int d, int start, std::vector<int>& mult, std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(mult);
    return;
  }
  for (int i = start; i < e; ++i) {
    ++mult[static_cast<std::size_t>(i)];
    multisets(e, d - 1, i, mult, out);
    --mult[static_cast<std::size_t>(i)];
  }
}

std::vector<Polynomial> compute_sym_table(int d, int e, int cap) {
  if (binomial(cap + e, e) > kSymTableTermLimit) {
    throw GuardrailError("Sym^" + std::to_string(d) + " of a rank-" + std::to_string(e) +
                         " bundle up to degree " + std::to_string(cap) + " is too large");
  }
  std::vector<std::vector<int>> roots;
  std::vector<int> mult(static_cast<std::size_t>(e), 0);
  multisets(e, d, 0, mult, roots);

  Polynomial product = Polynomial::roots(e, cap).constant(1);
  for (const auto& root : roots) {
    Polynomial factor = product.constant(1);
    for (int i = 0; i < e; ++i) {
      const int m = root[static_cast<std::size_t>(i)];
      if (m != 0) factor += factor.variable(i) * BigInt(m);
    }
    product = product * factor;
  }
  const Polynomial elementary = to_elementary(product);
  std::vector<Polynomial> table;
  for (int i = 0; i <= cap; ++i) table.push_back(elementary.homogeneous_part(i));
  return table;
}

std::vector<Polynomial> pad_to(std::vector<Polynomial> table, int degree_cap) {
  const Polynomial zero = table.front() - table.front();
  table.resize(static_cast<std::size_t>(std::max(degree_cap, 0)) + 1, zero);
  return table;
}

}  // namespace

std::vector<Polynomial> sym_chern(int d, int e, int degree_cap) {
  if (d < 1 || e < 1) throw std::invalid_argument("sym_chern needs d >= 1 and e >= 1");
  const int cap = static_cast<int>(std::min<long>(degree_cap, sym_rank(e, d)));
  const auto key = std::make_pair(e, d);
  {
    std::lock_guard lock(sym_mutex);
    if (auto it = sym_memo.find(key); it != sym_memo.end() && it->second.degree_cap >= cap) {
      const auto& table = it->second.table;
      return pad_to(std::vector<Polynomial>(table.begin(), table.begin() + cap + 1), degree_cap);
    }
  }
  std::vector<Polynomial> table = compute_sym_table(d, e, cap);
  {
    std::lock_guard lock(sym_mutex);
    auto& slot = sym_memo[key];
    if (slot.degree_cap < cap) slot = SymTableEntry{cap, table};
  }
  return pad_to(std::move(table), degree_cap);
}

GrassRing::Element GrassRing::line_class(const LineClass& t) const {
  if (t.zeta != 0) throw std::invalid_argument("zeta is not defined on a Grassmannian");
  return chern_universal_dual(ctx_, 1) * BigInt(t.hyperplane);
}

UniversalRing::Element UniversalRing::universal_chern(int i) const {
  if (i < 0) throw std::invalid_argument("negative Chern class index");
  if (i == 0) return one();
  if (i > prototype_.nvars() || i > prototype_.degree_cap()) return zero();
  return prototype_.variable(i - 1);
}

UniversalRing::Element UniversalRing::line_class(const LineClass& t) const {
  if (t.zeta != 0) throw std::invalid_argument("zeta is not defined in the universal ring");
  if (prototype_.degree_cap() < 1) return zero();
  return prototype_.variable(0) * BigInt(t.hyperplane);
}

}  // namespace schubfire
