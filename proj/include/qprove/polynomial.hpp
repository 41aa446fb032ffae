#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qprove/core.hpp"
#include "qprove/unary_sets.hpp"

namespace qprove {

struct PolyTerm {
  std::vector<std::uint32_t> exponents;  // one per variable
  BigInt coefficient;                    // strictly positive once normalized
};

// Polynomial in k variables with nonnegative integer coefficients.  The
// set it represents is the range { F(n) : n in N^k }; the generalization
// of LinearForm beyond degree one.  Terms are held in a canonical order
// with duplicates merged, so equal polynomials compare equal.
class NonnegPolynomial {
 public:
  NonnegPolynomial(int arity, std::vector<PolyTerm> terms);
  static NonnegPolynomial constant(int arity, BigInt value);

  int arity() const { return arity_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  BigInt eval(const Tuple& point) const;

  BigInt constant_term() const;
  bool coordinate_appears(int coordinate) const;  // in a non-constant term

  // Same polynomial over more variables; the extra coordinates are absent
  // from every term, so the range is unchanged.
  NonnegPolynomial lifted(int arity) const;

  bool operator==(const NonnegPolynomial&) const;

  std::string to_string() const;  // "2*x1 + 3*x2 + 1"

 private:
  int arity_;
  std::vector<PolyTerm> terms_;
};

NonnegPolynomial from_linear(const LinearForm& form);

// { F(n) : n in N^k } intersected with [0, bound], ascending.  Complete:
// coordinate i is searched up to the least value at which every monomial
// containing x_i exceeds bound with the other variables at 1; any witness
// of a value <= bound reduces into that box coordinate by coordinate.
// The walk is depth first and cut as soon as a partial assignment (rest
// zero) already exceeds bound.  bound must be below 2^62.
std::vector<std::uint64_t> enumerate_range(const NonnegPolynomial& F,
                                           std::uint64_t bound);

struct PreimageResult {
  std::vector<Tuple> tuples;     // lexicographic order
  bool truncated = false;        // stopped at `limit` before exhausting the box
  bool infinite_family = false;  // a coordinate is absent from F, so each
                                 // listed tuple stands for infinitely many
};

// Up to `limit` tuples with F(n) = m.  Coordinates absent from F are
// pinned to zero and reported via infinite_family.
PreimageResult preimages(const NonnegPolynomial& F, const BigInt& m,
                         std::size_t limit);

// min over coordinates i appearing in a non-constant term of
// F(0,...,cutoff,...,0).  Every range value below this needs no occupation
// >= cutoff, so the truncated box already realizes it.  nullopt when no
// coordinate appears (constant F): no value ever needs a large occupation.
std::optional<BigInt> truncation_threshold(const NonnegPolynomial& F,
                                           std::uint64_t cutoff);

}  // namespace qprove
