#include "qprove/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qprove {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxEnumerationBound = std::uint64_t(1) << 30;
constexpr std::uint64_t kMaxCoordinate = std::uint64_t(1) << 62;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return kSat;
  return r;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) return kSat;
  return r;
}

std::uint64_t pow_sat(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp) {
    if (exp & 1) r = mul_sat(r, base);
    exp >>= 1;
    if (exp) base = mul_sat(base, base);
  }
  return r;
}

std::uint32_t total_degree(const PolyTerm& t) {
  std::uint64_t d = 0;
  for (auto e : t.exponents) d += e;
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(d, 0xffffffff));
}

bool term_before(const PolyTerm& a, const PolyTerm& b) {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

// F(point) with values above `bound` allowed to saturate; exact below it.
// Saturation is absorbing and the true value only shrinks toward it, so
// result > bound if and only if the exact value is > bound.
std::uint64_t eval_capped(const NonnegPolynomial& F, const Tuple& point,
                          std::uint64_t bound) {
  std::uint64_t acc = 0;
  for (const PolyTerm& t : F.terms()) {
    std::uint64_t prod = 1;
    bool vanished = false;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (point[i] == 0) {
        vanished = true;
        break;
      }
      prod = mul_sat(prod, pow_sat(point[i], t.exponents[i]));
    }
    if (vanished) continue;
    if (t.coefficient > bound) return kSat;  // prod >= 1
    acc = add_sat(acc, mul_sat(t.coefficient.convert_to<std::uint64_t>(), prod));
    if (acc > bound) return acc;
  }
  return acc;
}

// coefficient * v^e > bound, with the term's other variables at 1.
bool monomial_exceeds(const BigInt& coefficient, std::uint32_t exponent,
                      std::uint64_t v, const BigInt& bound) {
  if (v == 0) return false;
  if (coefficient > bound) return true;
  if (v == 1) return false;
  std::uint64_t vbits = boost::multiprecision::msb(BigInt(v)) + 1;
  std::uint64_t bound_bits = bound <= 0 ? 1 : boost::multiprecision::msb(bound) + 1;
  // v^e has at least e*(vbits-1)+1 bits; past the bound's width the compare
  // is settled without computing an astronomically wide power.
  if (static_cast<std::uint64_t>(exponent) * (vbits - 1) >= bound_bits) {
    return true;
  }
  BigInt value = coefficient * boost::multiprecision::pow(BigInt(v), exponent);
  return value > bound;
}

// Least v at which every monomial of F containing x_i exceeds `bound` with
// the other variables at 1; 0 if no monomial contains x_i.
std::uint64_t coordinate_bound(const NonnegPolynomial& F, std::size_t i,
                               const BigInt& bound) {
  std::uint64_t best = 0;
  for (const PolyTerm& t : F.terms()) {
    if (t.exponents[i] == 0) continue;
    if (!monomial_exceeds(t.coefficient, t.exponents[i], kMaxCoordinate, bound)) {
      throw std::length_error("preimage coordinate bound exceeds search range");
    }
    std::uint64_t lo = 0;
    std::uint64_t hi = kMaxCoordinate;
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (monomial_exceeds(t.coefficient, t.exponents[i], mid, bound)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    best = std::max(best, lo);
  }
  return best;
}

void range_dfs(const NonnegPolynomial& F, const std::vector<std::uint64_t>& box,
               std::uint64_t bound, std::size_t depth, Tuple& point,
               std::uint64_t prefix_value, std::vector<std::uint64_t>& out) {
  if (depth == point.size()) {
    out.push_back(prefix_value);
    return;
  }
  for (std::uint64_t v = 0; v <= box[depth]; ++v) {
    point[depth] = v;
    std::uint64_t value = eval_capped(F, point, bound);
    if (value > bound) break;  // monotone in v with the suffix at zero
    range_dfs(F, box, bound, depth + 1, point, value, out);
  }
  point[depth] = 0;
}

struct PreimageSearch {
  const NonnegPolynomial& F;
  const std::vector<std::uint64_t>& box;
  const BigInt& target;
  std::size_t limit;
  PreimageResult& result;

  bool dfs(std::size_t depth, Tuple& point, const BigInt& prefix_value) {
    if (depth == point.size()) {
      if (prefix_value == target) {
        if (result.tuples.size() >= limit) {
          result.truncated = true;
          return false;
        }
        result.tuples.push_back(point);
      }
      return true;
    }
    for (std::uint64_t v = 0; v <= box[depth]; ++v) {
      point[depth] = v;
      BigInt value = F.eval(point);  // suffix is zero
      if (value > target) break;
      if (!dfs(depth + 1, point, value)) {
        point[depth] = 0;
        return false;
      }
    }
    point[depth] = 0;
    return true;
  }
};

}  // namespace

NonnegPolynomial::NonnegPolynomial(int arity, std::vector<PolyTerm> terms)
    : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("negative polynomial arity");
  std::map<std::vector<std::uint32_t>, BigInt> merged;
  for (PolyTerm& t : terms) {
    if (t.exponents.size() != static_cast<std::size_t>(arity)) {
      throw std::invalid_argument("polynomial term arity mismatch");
    }
    if (t.coefficient < 0) {
      throw std::invalid_argument("negative polynomial coefficient");
    }
    if (t.coefficient == 0) continue;
    merged[std::move(t.exponents)] += t.coefficient;
  }
  for (auto& [exps, coeff] : merged) {
    terms_.push_back(PolyTerm{exps, coeff});
  }
  std::sort(terms_.begin(), terms_.end(), term_before);
}

NonnegPolynomial NonnegPolynomial::constant(int arity, BigInt value) {
  std::vector<PolyTerm> terms;
  if (value != 0) {
    terms.push_back(PolyTerm{std::vector<std::uint32_t>(arity, 0), std::move(value)});
  }
  return NonnegPolynomial(arity, std::move(terms));
}

BigInt NonnegPolynomial::eval(const Tuple& point) const {
  if (point.size() != static_cast<std::size_t>(arity_)) {
    throw std::invalid_argument("evaluation point arity mismatch");
  }
  BigInt acc = 0;
  for (const PolyTerm& t : terms_) {
    BigInt prod = t.coefficient;
    bool vanished = false;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (point[i] == 0) {
        vanished = true;
        break;
      }
      prod *= boost::multiprecision::pow(BigInt(point[i]), t.exponents[i]);
    }
    if (!vanished) acc += prod;
  }
  return acc;
}

BigInt NonnegPolynomial::constant_term() const {
  for (const PolyTerm& t : terms_) {
    if (total_degree(t) == 0) return t.coefficient;
  }
  return 0;
}

bool NonnegPolynomial::coordinate_appears(int coordinate) const {
  for (const PolyTerm& t : terms_) {
    if (t.exponents[coordinate] != 0) return true;
  }
  return false;
}

NonnegPolynomial NonnegPolynomial::lifted(int arity) const {
  if (arity < arity_) {
    throw std::invalid_argument("lifted arity below polynomial arity");
  }
  std::vector<PolyTerm> terms = terms_;
  for (PolyTerm& t : terms) t.exponents.resize(arity, 0);
  return NonnegPolynomial(arity, std::move(terms));
}

bool NonnegPolynomial::operator==(const NonnegPolynomial& other) const {
  if (arity_ != other.arity_ || terms_.size() != other.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponents != other.terms_[i].exponents ||
        terms_[i].coefficient != other.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::string NonnegPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const PolyTerm& t : terms_) {
    if (!first) out << " + ";
    first = false;
    bool constant = total_degree(t) == 0;
    bool wrote_coeff = false;
    if (constant || t.coefficient != 1) {
      out << t.coefficient;
      wrote_coeff = true;
    }
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (wrote_coeff) out << '*';
      out << 'x' << (i + 1);
      if (t.exponents[i] > 1) out << '^' << t.exponents[i];
      wrote_coeff = true;
    }
  }
  return out.str();
}

NonnegPolynomial from_linear(const LinearForm& form) {
  int k = static_cast<int>(form.arity());
  std::vector<PolyTerm> terms;
  for (std::size_t i = 0; i < form.coeffs().size(); ++i) {
    std::vector<std::uint32_t> exps(k, 0);
    exps[i] = 1;
    terms.push_back(PolyTerm{std::move(exps), BigInt(form.coeffs()[i])});
  }
  if (form.offset() != 0) {
    terms.push_back(
        PolyTerm{std::vector<std::uint32_t>(k, 0), BigInt(form.offset())});
  }
  return NonnegPolynomial(k, std::move(terms));
}

std::vector<std::uint64_t> enumerate_range(const NonnegPolynomial& F,
                                           std::uint64_t bound) {
  if (bound >= kMaxEnumerationBound) {
    throw std::length_error("enumeration bound too large");
  }
  std::size_t k = F.arity();
  BigInt big_bound(bound);
  std::vector<std::uint64_t> box(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    box[i] = coordinate_bound(F, i, big_bound);
  }
  std::vector<std::uint64_t> out;
  Tuple point(k, 0);
  if (k == 0) {
    std::uint64_t value = eval_capped(F, point, bound);
    if (value <= bound) out.push_back(value);
    return out;
  }
  range_dfs(F, box, bound, 0, point, 0, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PreimageResult preimages(const NonnegPolynomial& F, const BigInt& m,
                         std::size_t limit) {
  if (m < 0) throw std::invalid_argument("preimage target is negative");
  PreimageResult result;
  std::size_t k = F.arity();
  std::vector<std::uint64_t> box(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    box[i] = coordinate_bound(F, i, m);
  }
  Tuple point(k, 0);
  PreimageSearch search{F, box, m, limit, result};
  if (k == 0) {
    if (F.eval(point) == m) {
      if (limit == 0) {
        result.truncated = true;
      } else {
        result.tuples.push_back(point);
      }
    }
  } else {
    search.dfs(0, point, F.eval(Tuple(k, 0)));
  }
  if (!result.tuples.empty()) {
    for (int i = 0; i < F.arity(); ++i) {
      if (!F.coordinate_appears(i)) {
        result.infinite_family = true;
        break;
      }
    }
  }
  return result;
}

std::optional<BigInt> truncation_threshold(const NonnegPolynomial& F,
                                           std::uint64_t cutoff) {
  std::optional<BigInt> best;
  for (int i = 0; i < F.arity(); ++i) {
    if (!F.coordinate_appears(i)) continue;
    Tuple point(F.arity(), 0);
    point[i] = cutoff;
    BigInt value = F.eval(point);
    if (!best || value < *best) best = value;
  }
  return best;
}

}  // namespace qprove
