#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qprove/core.hpp"

namespace qprove {

/*
 * Expressions over subsets of N built from three constructors:
 *
 *   {b}        singleton
 *   S + T      pointwise sum  { s+t : s in S, t in T }
 *   S*         all finite sums of elements of S (empty sum included, so
 *              0 is always a member)
 *
 * Every such set is { a_1 n_1 + ... + a_k n_k + a : n in N^k } for some
 * positive coefficients a_i and offset a; LinearForm is that canonical
 * shape and canonicalize() computes it structurally.
 */
class SetExpr {
 public:
  enum class Kind { Singleton, Sum, Star };

  static SetExpr singleton(std::uint64_t value);
  static SetExpr sum(SetExpr left, SetExpr right);
  static SetExpr star(SetExpr child);

  Kind kind() const;
  std::uint64_t value() const;  // Singleton only
  const SetExpr& left() const;  // Sum only
  const SetExpr& right() const;
  const SetExpr& child() const;  // Star only

  std::string to_string() const;

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical description a_1 n_1 + ... + a_k n_k + a: coefficients strictly
// positive, ascending, exact duplicates removed (a duplicate coefficient
// adds no new sums).  k = 0 denotes the singleton {a}.
class LinearForm {
 public:
  LinearForm() = default;  // {0}
  LinearForm(std::vector<std::uint64_t> coeffs, std::uint64_t offset);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t offset() const { return offset_; }
  std::size_t arity() const { return coeffs_.size(); }

  bool operator==(const LinearForm&) const = default;

  std::string to_string() const;  // "([2,3], 1)"

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t offset_ = 0;
};

// Structural rules: {b} -> ([], b); Sum concatenates coefficient lists and
// adds offsets; Star folds the offset into the coefficients and zeroes it.
// Throws std::overflow_error if a Sum pushes the offset past 2^64.
LinearForm canonicalize(const SetExpr& expr);

// Members of the set in [0, bound], ascending.  Coin-problem DP over
// [0, bound - offset]; never iterates tuples.
std::vector<std::uint64_t> enumerate_set(const LinearForm& form,
                                         std::uint64_t bound);

// Lexicographically smallest witness (n_1,...,n_k) with
// a_1 n_1 + ... + a_k n_k + a = m, or nullopt if m is not a member.
std::optional<Tuple> member_with_witness(const LinearForm& form,
                                         std::uint64_t m);

struct FrobeniusGap {
  enum class Kind {
    Gap,            // largest m >= offset not in the set
    CofiniteNone,   // the set contains every integer >= offset
    NotApplicable,  // k = 0, or gcd of coefficients > 1
  };

  Kind kind;
  std::uint64_t gap = 0;  // meaningful only when kind == Kind::Gap

  std::string to_string() const;
};

FrobeniusGap frobenius_gap(const LinearForm& form);

}  // namespace qprove
