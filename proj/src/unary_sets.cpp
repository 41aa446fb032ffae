#include "qprove/unary_sets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qprove {
namespace {

// DP tables are bit vectors over [0, bound]; cap them well above desk scale
// but below anything that could thrash the machine.
constexpr std::uint64_t kMaxTableSize = std::uint64_t(1) << 30;

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Least element of <generators> in each residue class mod modulus, kInf for
// classes the span misses: shortest paths over residues, edge u -> (u+g) mod
// modulus with weight g.
std::vector<std::uint64_t> residue_minima(
    const std::vector<std::uint64_t>& generators, std::uint64_t modulus) {
  std::vector<std::uint64_t> dist(modulus, kInf);
  dist[0] = 0;
  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (std::uint64_t g : generators) {
      if (g > kInf - d) {
        throw std::length_error("generators too large for residue search");
      }
      std::uint64_t nd = d + g;
      std::uint64_t nr = nd % modulus;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        queue.push({nd, nr});
      }
    }
  }
  return dist;
}

std::vector<bool> reachable_table(const std::vector<std::uint64_t>& coeffs,
                                  std::uint64_t budget) {
  if (budget >= kMaxTableSize) {
    throw std::length_error("enumeration bound too large");
  }
  std::vector<bool> reach(budget + 1, false);
  reach[0] = true;
  for (std::uint64_t c : coeffs) {
    if (c == 0 || c > budget) continue;
    for (std::uint64_t v = c; v <= budget; ++v) {
      if (reach[v - c]) reach[v] = true;
    }
  }
  return reach;
}

}  // namespace

struct SetExpr::Node {
  Kind kind;
  std::uint64_t value = 0;
  std::vector<SetExpr> children;
};

SetExpr SetExpr::singleton(std::uint64_t value) {
  return SetExpr(std::make_shared<const Node>(Node{Kind::Singleton, value, {}}));
}

SetExpr SetExpr::sum(SetExpr left, SetExpr right) {
  return SetExpr(std::make_shared<const Node>(
      Node{Kind::Sum, 0, {std::move(left), std::move(right)}}));
}

SetExpr SetExpr::star(SetExpr child) {
  return SetExpr(
      std::make_shared<const Node>(Node{Kind::Star, 0, {std::move(child)}}));
}

SetExpr::Kind SetExpr::kind() const { return node_->kind; }

std::uint64_t SetExpr::value() const {
  if (node_->kind != Kind::Singleton) {
    throw std::logic_error("value() on a non-singleton set expression");
  }
  return node_->value;
}

const SetExpr& SetExpr::left() const {
  if (node_->kind != Kind::Sum) {
    throw std::logic_error("left() on a non-sum set expression");
  }
  return node_->children[0];
}

const SetExpr& SetExpr::right() const {
  if (node_->kind != Kind::Sum) {
    throw std::logic_error("right() on a non-sum set expression");
  }
  return node_->children[1];
}

const SetExpr& SetExpr::child() const {
  if (node_->kind != Kind::Star) {
    throw std::logic_error("child() on a non-star set expression");
  }
  return node_->children[0];
}

std::string SetExpr::to_string() const {
  switch (node_->kind) {
    case Kind::Singleton:
      return "{" + std::to_string(node_->value) + "}";
    case Kind::Sum:
      return left().to_string() + " + " + right().to_string();
    case Kind::Star: {
      const SetExpr& c = child();
      if (c.kind() == Kind::Sum) return "(" + c.to_string() + ")*";
      return c.to_string() + "*";
    }
  }
  return {};
}

LinearForm::LinearForm(std::vector<std::uint64_t> coeffs, std::uint64_t offset)
    : coeffs_(std::move(coeffs)), offset_(offset) {
  std::erase(coeffs_, 0);
  std::sort(coeffs_.begin(), coeffs_.end());
  coeffs_.erase(std::unique(coeffs_.begin(), coeffs_.end()), coeffs_.end());
}

std::string LinearForm::to_string() const {
  std::string out = "([";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coeffs_[i]);
  }
  out += "], " + std::to_string(offset_) + ")";
  return out;
}

LinearForm canonicalize(const SetExpr& expr) {
  switch (expr.kind()) {
    case SetExpr::Kind::Singleton:
      return LinearForm({}, expr.value());
    case SetExpr::Kind::Sum: {
      LinearForm l = canonicalize(expr.left());
      LinearForm r = canonicalize(expr.right());
      std::vector<std::uint64_t> coeffs = l.coeffs();
      coeffs.insert(coeffs.end(), r.coeffs().begin(), r.coeffs().end());
      std::uint64_t offset = 0;
      if (__builtin_add_overflow(l.offset(), r.offset(), &offset)) {
        throw std::overflow_error("set offset exceeds 64 bits");
      }
      return LinearForm(std::move(coeffs), offset);
    }
    case SetExpr::Kind::Star: {
      LinearForm c = canonicalize(expr.child());
      // A form with no offset is already the span of its coefficients,
      // hence closed under sums; a star adds nothing.
      if (c.offset() == 0) return c;
      if (c.coeffs().empty()) return LinearForm({c.offset()}, 0);
      // A sum of m members lands in m*offset + span(coeffs), so the star
      // is {0} plus offset + span(coeffs, offset).  Its indecomposable
      // generators are offset + the least span(coeffs) element of each
      // residue class mod offset; note the span of the coefficients alone
      // is *not* part of the star, which is why the offset cannot simply
      // be appended to the coefficient list.
      std::uint64_t base = c.offset();
      if (base >= (std::uint64_t(1) << 22)) {
        throw std::length_error("star offset too large to canonicalize");
      }
      std::vector<std::uint64_t> gens;
      for (std::uint64_t least : residue_minima(c.coeffs(), base)) {
        if (least == kInf) continue;
        std::uint64_t g = 0;
        if (__builtin_add_overflow(base, least, &g)) {
          throw std::overflow_error("set coefficients exceed 64 bits");
        }
        gens.push_back(g);
      }
      return LinearForm(std::move(gens), 0);
    }
  }
  throw std::logic_error("unreachable set expression kind");
}

std::vector<std::uint64_t> enumerate_set(const LinearForm& form,
                                         std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (form.offset() > bound) return out;
  std::uint64_t budget = bound - form.offset();
  std::vector<bool> reach = reachable_table(form.coeffs(), budget);
  for (std::uint64_t v = 0; v <= budget; ++v) {
    if (reach[v]) out.push_back(form.offset() + v);
  }
  return out;
}

std::optional<Tuple> member_with_witness(const LinearForm& form,
                                         std::uint64_t m) {
  if (m < form.offset()) return std::nullopt;
  std::uint64_t target = m - form.offset();
  std::size_t k = form.arity();
  if (k == 0) {
    if (target == 0) return Tuple{};
    return std::nullopt;
  }
  if (target >= kMaxTableSize / k) {
    throw std::length_error("witness search bound too large");
  }

  // reach[j][v]: v is a sum over coefficients j..k-1.  Built back to front;
  // the greedy pass below then picks the least n_j at each level, which is
  // exactly the lexicographically smallest witness.
  const auto& a = form.coeffs();
  std::vector<std::vector<bool>> reach(k + 1);
  reach[k] = std::vector<bool>(target + 1, false);
  reach[k][0] = true;
  for (std::size_t j = k; j-- > 0;) {
    reach[j] = reach[j + 1];
    std::uint64_t c = a[j];
    for (std::uint64_t v = c; v <= target; ++v) {
      if (reach[j][v - c]) reach[j][v] = true;
    }
  }
  if (!reach[0][target]) return std::nullopt;

  Tuple witness(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t n = 0;
    while (!reach[j + 1][target - n * a[j]]) ++n;
    witness[j] = n;
    target -= n * a[j];
  }
  return witness;
}

std::string FrobeniusGap::to_string() const {
  switch (kind) {
    case Kind::Gap:
      return std::to_string(gap);
    case Kind::CofiniteNone:
      return "cofinite-none";
    case Kind::NotApplicable:
      return "not-applicable";
  }
  return {};
}

FrobeniusGap frobenius_gap(const LinearForm& form) {
  const auto& a = form.coeffs();
  if (a.empty()) return {FrobeniusGap::Kind::NotApplicable, 0};

  std::uint64_t g = 0;
  for (std::uint64_t c : a) g = std::gcd(g, c);
  if (g != 1) return {FrobeniusGap::Kind::NotApplicable, 0};
  if (a.front() == 1) return {FrobeniusGap::Kind::CofiniteNone, 0};

  // Largest value not generated by <a_1..a_k>: dist[r] below is the least
  // generated value congruent to r mod a_1, so the answer is max dist - a_1.
  std::uint64_t base = a.front();
  if (base >= (std::uint64_t(1) << 26)) {
    throw std::length_error("smallest generator too large for gap search");
  }
  std::vector<std::uint64_t> dist = residue_minima(a, base);
  std::uint64_t worst = *std::max_element(dist.begin(), dist.end());
  // gcd = 1 makes every residue reachable, and base >= 2 makes 1 a gap.
  std::uint64_t raw_gap = worst - base;
  std::uint64_t shifted = 0;
  if (__builtin_add_overflow(form.offset(), raw_gap, &shifted)) {
    throw std::overflow_error("gap exceeds 64 bits");
  }
  return {FrobeniusGap::Kind::Gap, shifted};
}

}  // namespace qprove
