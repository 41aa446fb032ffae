#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qprove/fock.hpp"
#include "qprove/observable.hpp"
#include "qprove/parser.hpp"
#include "qprove/state_io.hpp"
#include "support/oracles.hpp"

using namespace qprove;

namespace {

constexpr double kTol = 1e-12;

bool close(Complex a, Complex b, double tol = kTol) {
  return std::abs(a - b) <= tol;
}

StateVector basis_state(int modes, std::uint64_t cutoff, Tuple n) {
  StateVector::AmplitudeMap amps;
  amps[std::move(n)] = Complex(1.0, 0.0);
  return StateVector(modes, cutoff, std::move(amps));
}

// c1 * s1 + c2 * s2 over a shared basis
double max_deviation(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (const auto& [n, c] : a.amplitudes()) {
    worst = std::max(worst, std::abs(c - b.amplitude(n)));
  }
  for (const auto& [n, c] : b.amplitudes()) {
    worst = std::max(worst, std::abs(c - a.amplitude(n)));
  }
  return worst;
}

}  // namespace

TEST_CASE("colex indexing round-trips") {
  CHECK(colex_index({0, 0}, 3) == 0);
  CHECK(colex_index({1, 0}, 3) == 1);
  CHECK(colex_index({0, 1}, 3) == 3);
  CHECK(colex_index({2, 2}, 3) == 8);
  for (std::size_t i = 0; i < 27; ++i) {
    CHECK(colex_index(occupations_from_index(i, 3, 3), 3) == i);
  }
  ColexLess less;
  CHECK(less({1, 0}, {0, 1}));
  CHECK_FALSE(less({0, 1}, {1, 0}));
}

TEST_CASE("state construction validates occupations") {
  StateVector::AmplitudeMap bad;
  bad[{4}] = Complex(1.0, 0.0);
  CHECK_THROWS_AS(StateVector(1, 4, std::move(bad)), std::invalid_argument);

  StateVector::AmplitudeMap wrong_arity;
  wrong_arity[{1, 1}] = Complex(1.0, 0.0);
  CHECK_THROWS_AS(StateVector(1, 4, std::move(wrong_arity)),
                  std::invalid_argument);

  CHECK_THROWS_AS(StateVector(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(1, 0), std::invalid_argument);
}

TEST_CASE("uniform box state") {
  StateVector s = make_state(UniformBoxSpec{1, 4});
  CHECK(s.amplitudes().size() == 4);
  for (const auto& [n, c] : s.amplitudes()) CHECK(close(c, Complex(0.5, 0.0)));
  CHECK(s.is_normalized());

  StateVector st = make_state(UniformBoxSpec{2, 3});
  CHECK(st.amplitudes().size() == 9);
  CHECK(st.is_normalized());
}

TEST_CASE("explicit state") {
  ExplicitSpec spec;
  spec.modes = 1;
  spec.cutoff = 4;
  double r = 1.0 / std::sqrt(2.0);
  spec.amplitudes = {{{0}, Complex(r, 0.0)}, {{3}, Complex(r, 0.0)}};
  StateVector s = make_state(spec);
  CHECK(s.is_normalized());
  CHECK(close(s.amplitude({0}), Complex(r, 0.0)));
  CHECK(close(s.amplitude({3}), Complex(r, 0.0)));
  CHECK(s.amplitude({1}) == Complex(0.0, 0.0));

  // normalization is applied even to unnormalized input
  spec.amplitudes = {{{0}, Complex(3.0, 0.0)}, {{1}, Complex(0.0, 4.0)}};
  s = make_state(spec);
  CHECK(s.is_normalized());
  CHECK(close(s.amplitude({0}), Complex(0.6, 0.0)));
  CHECK(close(s.amplitude({1}), Complex(0.0, 0.8)));

  spec.amplitudes = {};
  CHECK_THROWS_AS(make_state(spec), std::invalid_argument);
  spec.amplitudes = {{{0}, Complex(0.0, 0.0)}};
  CHECK_THROWS_AS(make_state(spec), std::invalid_argument);
}

TEST_CASE("coherent state amplitudes follow alpha^n over sqrt factorial") {
  CoherentSpec spec;
  spec.modes = 1;
  spec.cutoff = 3;
  spec.alpha = {Complex(1.0, 0.0)};
  StateVector s = make_state(spec);
  // unnormalized pattern (1, 1, 1/sqrt 2), squared norm 5/2
  double scale = std::sqrt(2.0 / 5.0);
  CHECK(close(s.amplitude({0}), Complex(scale, 0.0)));
  CHECK(close(s.amplitude({1}), Complex(scale, 0.0)));
  CHECK(close(s.amplitude({2}), Complex(scale / std::sqrt(2.0), 0.0)));
  CHECK(s.is_normalized());

  // alpha = 0 collapses to the vacuum
  spec.alpha = {Complex(0.0, 0.0)};
  s = make_state(spec);
  CHECK(s.amplitudes().size() == 1);
  CHECK(close(s.amplitude({0}), Complex(1.0, 0.0)));

  spec.alpha = {};
  CHECK_THROWS_AS(make_state(spec), std::invalid_argument);
}

TEST_CASE("two-mode coherent state is the tensor product") {
  CoherentSpec spec;
  spec.modes = 2;
  spec.cutoff = 4;
  spec.alpha = {Complex(0.7, -0.2), Complex(-0.3, 0.5)};
  StateVector s = make_state(spec);
  CHECK(s.is_normalized());

  CoherentSpec left{1, 4, {spec.alpha[0]}};
  CoherentSpec right{1, 4, {spec.alpha[1]}};
  StateVector sl = make_state(left);
  StateVector sr = make_state(right);
  // ratio against the product of the single-mode factors is a constant
  for (const auto& [n, c] : s.amplitudes()) {
    Complex product = sl.amplitude({n[0]}) * sr.amplitude({n[1]});
    CHECK(close(c, product, 1e-9));
  }
}

TEST_CASE("random gaussian state is seed-deterministic") {
  RandomGaussianSpec spec{2, 3, 42};
  StateVector a = make_state(spec);
  StateVector b = make_state(spec);
  CHECK(a.is_normalized());
  REQUIRE(a.amplitudes().size() == b.amplitudes().size());
  CHECK(max_deviation(a, b) == 0.0);

  StateVector c = make_state(RandomGaussianSpec{2, 3, 43});
  CHECK(max_deviation(a, c) > 1e-6);
}

TEST_CASE("annihilation and creation ladder rules") {
  // a |0> = 0
  StateVector vac = basis_state(1, 4, {0});
  StateVector out = apply_ladder(LadderOp::Annihilate, 0, vac);
  CHECK(out.amplitudes().empty());
  CHECK(out.truncation_loss() == 0.0);

  // a^+ |0> = |1>
  out = apply_ladder(LadderOp::Create, 0, vac);
  CHECK(close(out.amplitude({1}), Complex(1.0, 0.0)));

  // a^+ a |2> = 2 |2>
  StateVector two = basis_state(1, 4, {2});
  out = apply_ladder(LadderOp::Create, 0,
                     apply_ladder(LadderOp::Annihilate, 0, two));
  CHECK(close(out.amplitude({2}), Complex(2.0, 0.0)));

  // a |3> = sqrt(3) |2>
  out = apply_ladder(LadderOp::Annihilate, 0, basis_state(1, 4, {3}));
  CHECK(close(out.amplitude({2}), Complex(std::sqrt(3.0), 0.0)));

  CHECK_THROWS_AS(apply_ladder(LadderOp::Create, 1, vac),
                  std::invalid_argument);
}

TEST_CASE("creation at the cutoff books truncation loss") {
  StateVector top = basis_state(1, 4, {3});
  StateVector out = apply_ladder(LadderOp::Create, 0, top);
  CHECK(out.amplitudes().empty());
  // |sqrt(4) * 1|^2
  CHECK(out.truncation_loss() == doctest::Approx(4.0).epsilon(1e-12));

  // loss accumulates across applications
  StateVector again = apply_ladder(LadderOp::Create, 0, out);
  CHECK(again.truncation_loss() == doctest::Approx(4.0).epsilon(1e-12));

  // no loss while the cutoff is respected
  StateVector mid = apply_ladder(LadderOp::Create, 0, basis_state(1, 4, {1}));
  CHECK(mid.truncation_loss() == 0.0);
}

TEST_CASE("commutator identities hold exactly away from the cutoff") {
  // on every interior basis state: (a a^+ - a^+ a) |n> = |n>
  for (std::uint64_t n = 0; n + 2 < 8; ++n) {
    StateVector s = basis_state(1, 8, {n});
    StateVector left = apply_ladder(LadderOp::Annihilate, 0,
                                    apply_ladder(LadderOp::Create, 0, s));
    StateVector right = apply_ladder(LadderOp::Create, 0,
                                     apply_ladder(LadderOp::Annihilate, 0, s));
    CHECK(close(left.amplitude({n}) - right.amplitude({n}),
                Complex(1.0, 0.0)));
  }

  // cross-mode operators commute, including a_1 with a_2^+
  StateVector s = basis_state(2, 5, {2, 3});
  StateVector ab = apply_ladder(LadderOp::Annihilate, 0,
                                apply_ladder(LadderOp::Create, 1, s));
  StateVector ba = apply_ladder(LadderOp::Create, 1,
                                apply_ladder(LadderOp::Annihilate, 0, s));
  CHECK(max_deviation(ab, ba) <= kTol);
}

TEST_CASE("repeated creation reproduces the normalized eigenvector formula") {
  // (a^+)^n |0> / sqrt(n!) = |n>
  StateVector s = basis_state(1, 8, {0});
  double factorial = 1.0;
  for (std::uint64_t n = 1; n < 8; ++n) {
    s = apply_ladder(LadderOp::Create, 0, s);
    factorial *= static_cast<double>(n);
    Complex amp = s.amplitude({n}) / std::sqrt(factorial);
    CHECK_MESSAGE(close(amp, Complex(1.0, 0.0)), "n = ", n);
  }
}

TEST_CASE("state spec json round trip") {
  StateSpec spec = parse_state_spec(
      R"({"kind":"uniform","k":1,"cutoff":4})");
  CHECK(std::holds_alternative<UniformBoxSpec>(spec));
  CHECK(make_state(spec).amplitudes().size() == 4);

  spec = parse_state_spec(
      R"({"kind":"coherent","k":2,"cutoff":3,"alpha":[[1.0,0.0],[0.5,-0.5]]})");
  auto& coherent = std::get<CoherentSpec>(spec);
  CHECK(coherent.alpha[1] == Complex(0.5, -0.5));

  spec = parse_state_spec(R"({"kind":"random","k":1,"cutoff":8,"seed":42})");
  CHECK(std::get<RandomGaussianSpec>(spec).seed == 42);

  spec = parse_state_spec(
      R"({"kind":"explicit","k":1,"cutoff":4,
          "amplitudes":[{"n":[0],"re":0.7071,"im":0.0},
                        {"n":[3],"re":0.7071,"im":0.0}]})");
  StateVector s = make_state(spec);
  CHECK(s.is_normalized());
  CHECK(s.amplitudes().size() == 2);
}

TEST_CASE("state spec json rejects malformed input") {
  CHECK_THROWS_AS(parse_state_spec("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_spec("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_state_spec(R"({"kind":"nope","k":1,"cutoff":4})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_state_spec(R"({"kind":"uniform","cutoff":4})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_state_spec(R"({"kind":"uniform","k":0,"cutoff":4})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_state_spec(R"({"kind":"coherent","k":1,"cutoff":4,"alpha":[[1]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse_state_spec(
          R"({"kind":"explicit","k":1,"cutoff":4,"amplitudes":[{"n":[-1],"re":1,"im":0}]})"),
      std::invalid_argument);
}

TEST_CASE("box dimension guard") {
  CHECK(box_dimension(3, 4, 1 << 22) == 64);
  CHECK_THROWS_AS(make_state(UniformBoxSpec{16, 64}), std::length_error);
}

TEST_CASE("number operator acts diagonally on every basis state") {
  for (int mode = 0; mode < 2; ++mode) {
    GeneralObservable N = number_operator(2, mode);
    for_each_box_point(2, 4, [&](const Tuple& n) {
      StateVector s = basis_state(2, 4, n);
      StateVector out = apply_observable(N, s);
      CHECK(close(out.amplitude(n),
                  Complex(static_cast<double>(n[mode]), 0.0)));
      CHECK(out.amplitudes().size() <= 1);
      CHECK(out.truncation_loss() == 0.0);
    });
  }
}

TEST_CASE("observable application is linear and respects written order") {
  // a^+ a + 1/2 on |3>
  ObservableMonomial number;
  number.coefficient = {Rational(1), Rational(0)};
  number.factors = {{LadderOp::Create, 0}, {LadderOp::Annihilate, 0}};
  ObservableMonomial half;
  half.coefficient = {Rational(1, 2), Rational(0)};
  GeneralObservable H(1, {number, half});
  StateVector out = apply_observable(H, basis_state(1, 8, {3}));
  CHECK(close(out.amplitude({3}), Complex(3.5, 0.0)));

  // factor order matters: a a^+ = a^+ a + 1 away from the cutoff
  ObservableMonomial reversed;
  reversed.coefficient = {Rational(1), Rational(0)};
  reversed.factors = {{LadderOp::Annihilate, 0}, {LadderOp::Create, 0}};
  GeneralObservable R(1, {reversed});
  out = apply_observable(R, basis_state(1, 8, {3}));
  CHECK(close(out.amplitude({3}), Complex(4.0, 0.0)));

  // a + a^+ on |0>
  ObservableMonomial create{{Rational(1), Rational(0)},
                            {{LadderOp::Create, 0}}};
  ObservableMonomial annih{{Rational(1), Rational(0)},
                           {{LadderOp::Annihilate, 0}}};
  GeneralObservable X(1, {create, annih});
  out = apply_observable(X, basis_state(1, 4, {0}));
  CHECK(close(out.amplitude({1}), Complex(1.0, 0.0)));
  CHECK(out.amplitude({0}) == Complex(0.0, 0.0));
}

TEST_CASE("gaussian rational coefficients are exact") {
  GaussianRational c{Rational(1, 3), Rational(-2, 7)};
  GaussianRational conj = c.conjugate();
  CHECK(conj.re == Rational(1, 3));
  CHECK(conj.im == Rational(2, 7));
  CHECK(c.to_complex() == Complex(1.0 / 3.0, -2.0 / 7.0));
  CHECK_FALSE(c.is_zero());
  CHECK(GaussianRational{Rational(0), Rational(0)}.is_zero());
}

TEST_CASE("adjoint reverses factors and conjugates coefficients") {
  ObservableMonomial m;
  m.coefficient = {Rational(2), Rational(1)};  // 2 + i
  m.factors = {{LadderOp::Create, 0}, {LadderOp::Annihilate, 1}};
  GeneralObservable A(2, {m});
  GeneralObservable B = A.adjoint();
  REQUIRE(B.monomials().size() == 1);
  const ObservableMonomial& bm = B.monomials()[0];
  CHECK(bm.coefficient == GaussianRational{Rational(2), Rational(-1)});
  REQUIRE(bm.factors.size() == 2);
  CHECK(bm.factors[0] == LadderFactor{LadderOp::Create, 1});
  CHECK(bm.factors[1] == LadderFactor{LadderOp::Annihilate, 0});

  // adjoint twice is the identity
  GeneralObservable C = B.adjoint();
  REQUIRE(C.monomials().size() == 1);
  CHECK(C.monomials()[0].coefficient == m.coefficient);
  CHECK(C.monomials()[0].factors == m.factors);
}

TEST_CASE("matrix_of on classic observables") {
  // N at cutoff 3: diag(0, 1, 2)
  HermitianMatrix N = matrix_of(number_operator(1, 0), 1, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Complex expected =
          r == c ? Complex(static_cast<double>(r), 0.0) : Complex(0.0, 0.0);
      CHECK(close(N.at(r, c), expected));
    }
  }

  // a + a^+ at cutoff 2: [[0,1],[1,0]]
  ObservableMonomial create{{Rational(1), Rational(0)},
                            {{LadderOp::Create, 0}}};
  ObservableMonomial annih{{Rational(1), Rational(0)},
                           {{LadderOp::Annihilate, 0}}};
  HermitianMatrix X = matrix_of(GeneralObservable(1, {create, annih}), 1, 2);
  CHECK(close(X.at(0, 0), Complex(0.0, 0.0)));
  CHECK(close(X.at(0, 1), Complex(1.0, 0.0)));
  CHECK(close(X.at(1, 0), Complex(1.0, 0.0)));
  CHECK(close(X.at(1, 1), Complex(0.0, 0.0)));

  // i(a - a^+) at cutoff 2: [[0,i],[-i,0]]
  ObservableMonomial ia{{Rational(0), Rational(1)}, {{LadderOp::Annihilate, 0}}};
  ObservableMonomial iad{{Rational(0), Rational(-1)}, {{LadderOp::Create, 0}}};
  HermitianMatrix Y = matrix_of(GeneralObservable(1, {ia, iad}), 1, 2);
  CHECK(close(Y.at(0, 0), Complex(0.0, 0.0)));
  CHECK(close(Y.at(0, 1), Complex(0.0, 1.0)));
  CHECK(close(Y.at(1, 0), Complex(0.0, -1.0)));
  CHECK(close(Y.at(1, 1), Complex(0.0, 0.0)));
}

TEST_CASE("is_hermitian classifies the standard examples") {
  CHECK(is_hermitian(number_operator(1, 0), 1, 8));

  ObservableMonomial annih{{Rational(1), Rational(0)},
                           {{LadderOp::Annihilate, 0}}};
  CHECK_FALSE(is_hermitian(GeneralObservable(1, {annih}), 1, 8));

  // 2 a^+ a + a + a^+
  ObservableMonomial num{{Rational(2), Rational(0)},
                         {{LadderOp::Create, 0}, {LadderOp::Annihilate, 0}}};
  ObservableMonomial create{{Rational(1), Rational(0)},
                            {{LadderOp::Create, 0}}};
  ObservableMonomial annih2{{Rational(1), Rational(0)},
                            {{LadderOp::Annihilate, 0}}};
  CHECK(is_hermitian(GeneralObservable(1, {num, create, annih2}), 1, 8));

  // i a is not hermitian; i(a - a^+) is
  ObservableMonomial ia{{Rational(0), Rational(1)}, {{LadderOp::Annihilate, 0}}};
  CHECK_FALSE(is_hermitian(GeneralObservable(1, {ia}), 1, 8));
  ObservableMonomial iad{{Rational(0), Rational(-1)}, {{LadderOp::Create, 0}}};
  CHECK(is_hermitian(GeneralObservable(1, {ia, iad}), 1, 8));

  // cutoff too small for any interior block: vacuously hermitian
  CHECK(is_hermitian(GeneralObservable(1, {annih}), 1, 1));
}

TEST_CASE("X + adjoint(X) is always hermitian on the interior") {
  std::mt19937_64 gen(1010);
  for (int i = 0; i < 20; ++i) {
    GeneralObservable A = oracle::random_hermitian_observable(gen, 2);
    CHECK(is_hermitian(A, 2, 6));
  }
}

TEST_CASE("observable_from_polynomial acts as F of the number operators") {
  NonnegPolynomial F = parse_polynomial("2*x1 + 3*x2 + 1");
  GeneralObservable A = observable_from_polynomial(F);
  for_each_box_point(2, 3, [&](const Tuple& n) {
    StateVector out = apply_observable(A, basis_state(2, 3, n));
    CHECK(close(out.amplitude(n), Complex(to_double(F.eval(n)), 0.0)));
    CHECK(out.amplitudes().size() <= 1);
  });

  // squares stay exact: N^2 needs no correction terms
  NonnegPolynomial G = parse_polynomial("x1^2 + 2");
  GeneralObservable B = observable_from_polynomial(G);
  for (std::uint64_t n = 0; n < 6; ++n) {
    StateVector out = apply_observable(B, basis_state(1, 6, {n}));
    CHECK(close(out.amplitude({n}),
                Complex(static_cast<double>(n * n + 2), 0.0)));
  }
  CHECK(is_hermitian(B, 1, 7));
}

TEST_CASE("apply_observable propagates weighted truncation loss") {
  // 3 a^+ on the top state: loss = |3|^2 * cutoff
  ObservableMonomial m{{Rational(3), Rational(0)}, {{LadderOp::Create, 0}}};
  GeneralObservable A(1, {m});
  StateVector out = apply_observable(A, basis_state(1, 4, {3}));
  CHECK(out.amplitudes().empty());
  CHECK(out.truncation_loss() == doctest::Approx(36.0).epsilon(1e-12));
}
