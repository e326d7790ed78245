#include <gtest/gtest.h>

#include <set>

#include "k3cert/gitcurve.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace k3cert;
using namespace k3cert::gitcurve;

namespace {

Poly q2(const char* t) { return parse_expr(rings::Q2(), t); }

CurveCoeffs all_ones() {
  CurveCoeffs c;
  for (std::size_t p = 0; p < 10; ++p) c[p] = 1;
  return c;
}

CurveCoeffs all_ones_on_slice() {
  CurveCoeffs c = all_ones();
  c.at({1, 1, 1}) = 0;
  return c;
}

// Oracle for the action: pull the form back along the three substitutions
// one after another. The torus is given as (a, b, c) so that it is a genuine
// substitution; it corresponds to (a, u, v) = (a, bc, c^2).
CurveCoeffs act_by_substitution(const Scalar& lambda, const Scalar& a, const Scalar& b, const Scalar& c, bool flip,
                                const CurveCoeffs& coeffs) {
  const auto& r = rings::Q2();
  const Poly X0 = Poly::var(r, "X0");
  const Poly X1 = Poly::var(r, "X1");
  const Poly Y0 = Poly::var(r, "Y0");
  const Poly Y1 = Poly::var(r, "Y1");
  const Substitution shift(r, r, {X0 + lambda * X1, X1, Y0, Y1});
  const Substitution torus(r, r, {X0, a * X1, b * Y0, c * Y1});
  const Substitution swap(r, r, {X0, X1, Y1, Y0});
  Poly f = torus(shift(coeffs.to_poly()));
  if (flip) f = swap(f);
  return CurveCoeffs::from_poly(f);
}

// Generic point of the slice: sampled, slice-normalized and resampled until
// every coefficient the invariants and iota relations divide by is nonzero.
CurveCoeffs generic_slice_point(SplitMix64& rng, std::int64_t bound) {
  for (;;) {
    const CurveCoeffs c = normalize_slice(sample_generic(rng, bound)).coeffs;
    bool ok = true;
    for (std::size_t p : kSlicePositions) ok = ok && !c[p].is_zero();
    if (ok) return c;
  }
}

// Coefficients on the normalized locus C211 = C311 = C102 = 1 with the
// prescribed torus invariants.
CurveCoeffs from_torus_invariants(const Scalar& I1, const Scalar& J2, const Scalar& J3, const Scalar& I4,
                                  const Scalar& I5, const Scalar& I6) {
  CurveCoeffs c;
  c.at({2, 1, 1}) = 1;
  c.at({3, 1, 1}) = 1;
  c.at({1, 0, 2}) = 1;
  c.at({0, 1, 1}) = I6.inverse();
  c.at({2, 2, 0}) = c.at({0, 1, 1}) / J2;
  c.at({2, 0, 2}) = I4 / c.at({2, 2, 0});
  c.at({1, 2, 0}) = I1 * c.at({0, 1, 1});
  c.at({3, 0, 2}) = J3 / c.at({0, 1, 1});
  c.at({3, 2, 0}) = I5 / c.at({3, 0, 2});
  return c;
}

}  // namespace

TEST(Coeffs, FormAndSerialization) {
  const CurveCoeffs c = CurveCoeffs::from_strings({"1", "-2", "3/4", "5", "6", "7", "8", "9", "10", "-11/3"});
  const Poly form = c.to_poly();
  EXPECT_EQ(form.num_terms(), 10U);
  EXPECT_EQ(form.multidegree(), (Multidegree{3, 2}));
  EXPECT_EQ(form.coefficient(Monomial({3, 0, 1, 1})), Scalar(1));
  EXPECT_EQ(form.coefficient(Monomial({2, 1, 1, 1})), Scalar(Integer(3), Integer(4)));
  EXPECT_EQ(form.coefficient(Monomial({0, 3, 0, 2})), Scalar(Integer(-11), Integer(3)));
  EXPECT_EQ(CurveCoeffs::from_poly(form), c);
  EXPECT_EQ(coeffs_from_json(nlohmann::json::parse(to_json(c).dump())), c);
  EXPECT_EQ(to_json(c).dump(), R"(["1","-2","3/4","5","6","7","8","9","10","-11/3"])");
  const std::vector<Scalar> o1{1, 0, 1, 0};
  const std::vector<Scalar> o2{1, 0, 0, 1};
  EXPECT_TRUE(form.evaluate(o1).is_zero());
  EXPECT_TRUE(form.evaluate(o2).is_zero());
  EXPECT_THROW(CurveCoeffs::from_poly(q2("X0^3*Y0^2")), InvalidArgument);
  EXPECT_THROW(CurveCoeffs::from_poly(q2("X0^2*Y0^2")), DegreeMismatch);
  EXPECT_THROW(CurveCoeffs::from_strings({"1", "2"}), ParseError);
  EXPECT_THROW(c.at({0, 2, 0}), InvalidArgument);
}

TEST(Act, Examples) {
  SplitMix64 rng(1);
  const CurveCoeffs c = sample_generic(rng, 20);
  EXPECT_EQ(act(identity_elem(), c), c);

  const CurveCoeffs scaled = act(torus_elem(2, 1, 1), c);
  for (std::size_t p = 0; p < 10; ++p) EXPECT_EQ(scaled[p], c[p] * Scalar(2).pow(kCoeffOrder[p].i));

  CurveCoeffs only011;
  only011.at({0, 1, 1}) = 1;
  CurveCoeffs expected;
  expected.at({0, 1, 1}) = 1;
  expected.at({1, 1, 1}) = 3;
  expected.at({2, 1, 1}) = 3;
  expected.at({3, 1, 1}) = 1;
  EXPECT_EQ(act(shift_elem(1), only011), expected);

  CurveCoeffs symmetric = c;
  for (int i = 1; i <= 3; ++i) symmetric.at({i, 0, 2}) = symmetric.at({i, 2, 0});
  EXPECT_EQ(act(flip_elem(), symmetric), symmetric);
  EXPECT_NE(act(flip_elem(), c), c);
  EXPECT_THROW(act(GroupElem{0, 0, 1, 1, false}, c), InvalidArgument);
}

TEST(Act, MatchesSubstitutionOracle) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 250; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 12);
    const Scalar lambda = k3cert::testing::random_scalar(rng, 6);
    const Scalar a = sample_nonzero(rng, 6);
    const Scalar b = sample_nonzero(rng, 6);
    const Scalar cc = sample_nonzero(rng, 6);
    const bool flip = rng.coin();
    const GroupElem g{lambda, a, b * cc, cc * cc, flip};
    ASSERT_EQ(act(g, c), act_by_substitution(lambda, a, b, cc, flip, c)) << to_string(g);
  }
}

TEST(Act, GroupLaws) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 250; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 12);
    const GroupElem g1 = sample_group(rng, 7);
    const GroupElem g2 = sample_group(rng, 7);
    ASSERT_EQ(act(g2, act(g1, c)), act(compose(g2, g1), c)) << to_string(g1) << " " << to_string(g2);
    ASSERT_EQ(act(inverse(g1), act(g1, c)), c);
    ASSERT_EQ(compose(inverse(g1), g1), identity_elem());
    ASSERT_EQ(compose(g1, inverse(g1)), identity_elem());
    ASSERT_EQ(compose(g1, identity_elem()), g1);
    const GroupElem g3 = sample_group(rng, 7);
    ASSERT_EQ(compose(g3, compose(g2, g1)), compose(compose(g3, g2), g1));
  }
}

TEST(Act, CommutationRelations) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 12);
    const Scalar lambda = sample_nonzero(rng, 7);
    const Scalar a = sample_nonzero(rng, 7);
    const Scalar u = sample_nonzero(rng, 7);
    const Scalar v = sample_nonzero(rng, 7);
    ASSERT_EQ(act(torus_elem(a, 1, 1), act(shift_elem(lambda), c)),
              act(shift_elem(a * lambda), act(torus_elem(a, 1, 1), c)));
    ASSERT_EQ(act(flip_elem(), act(shift_elem(lambda), c)), act(shift_elem(lambda), act(flip_elem(), c)));
    ASSERT_EQ(act(flip_elem(), act(torus_elem(a, u, v), c)), act(torus_elem(a, u, u * u / v), act(flip_elem(), c)));
  }
}

TEST(Act, SliceStability) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const CurveCoeffs c = normalize_slice(sample_generic(rng, 20)).coeffs;
    ASSERT_TRUE(on_slice(c));
    GroupElem g = sample_group(rng, 9);
    g.lambda = 0;
    ASSERT_TRUE(on_slice(act(g, c)));
    ASSERT_TRUE(on_slice(act(flip_elem(), c)));
  }
}

TEST(Act, TorusIsFaithfulOnCoefficients) {
  SplitMix64 rng(6);
  const CurveCoeffs c = sample_generic(rng, 20);
  EXPECT_EQ(act(torus_elem(1, 1, 1), c), c);
  EXPECT_NE(act(torus_elem(1, -1, 1), c), c);
  EXPECT_NE(act(torus_elem(1, 1, -1), c), c);
  EXPECT_NE(act(torus_elem(1, -1, -1), c), c);
  // The torus element (b, c) = (-1, -1) maps to (u, v) = (1, 1).
  EXPECT_EQ(act(GroupElem{0, 1, Scalar(-1) * Scalar(-1), Scalar(-1) * Scalar(-1), false}, c), c);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar u = rng.coin() ? Scalar(1) : sample_nonzero(rng, 3);
    const Scalar v = rng.coin() ? Scalar(1) : sample_nonzero(rng, 3);
    ASSERT_EQ(act(torus_elem(1, u, v), c) == c, u.is_one() && v.is_one());
  }
}

TEST(Slice, Examples) {
  const CurveCoeffs on = all_ones_on_slice();
  const SliceResult same = normalize_slice(on);
  EXPECT_EQ(same.coeffs, on);
  EXPECT_TRUE(same.lambda.is_zero());

  const SliceResult r = normalize_slice(all_ones());
  EXPECT_EQ(r.lambda, Scalar(Integer(-1), Integer(3)));
  EXPECT_TRUE(on_slice(r.coeffs));
  const Scalar third(Integer(1), Integer(3));
  EXPECT_EQ(r.coeffs, act_by_substitution(-third, 1, 1, 1, false, all_ones()));

  CurveCoeffs bad = all_ones();
  bad.at({0, 1, 1}) = 0;
  EXPECT_THROW(normalize_slice(bad), Degenerate);
}

TEST(Slice, WitnessReplays) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 50);
    const SliceResult r = normalize_slice(c);
    ASSERT_TRUE(on_slice(r.coeffs));
    ASSERT_EQ(act(shift_elem(r.lambda), c), r.coeffs);
    ASSERT_EQ(r.coeffs.at({1, 1, 1}), c.at({1, 1, 1}) + Scalar(3) * r.lambda * c.at({0, 1, 1}));
  }
}

TEST(Invariants, Examples) {
  const InvariantTuple t = invariants(all_ones_on_slice());
  EXPECT_EQ(t, (InvariantTuple{1, 2, 2, 1, 1, 1}));
  EXPECT_EQ(torus_invariants(all_ones_on_slice()), (TorusInvariants{1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(invariants(all_ones()), SliceViolation);
  CurveCoeffs bad = all_ones_on_slice();
  bad.at({0, 1, 1}) = 0;
  EXPECT_THROW(invariants(bad), Degenerate);
  for (const CoeffIndex idx : {CoeffIndex{1, 2, 0}, CoeffIndex{1, 0, 2}, CoeffIndex{2, 2, 0}, CoeffIndex{2, 1, 1},
                               CoeffIndex{2, 0, 2}, CoeffIndex{3, 1, 1}}) {
    CurveCoeffs d = all_ones_on_slice();
    d.at(idx) = 0;
    EXPECT_THROW(invariants(d), Degenerate) << to_string(idx);
  }
}

TEST(Invariants, DirectFormulas) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const CurveCoeffs c = generic_slice_point(rng, 30);
    const auto C = [&](int i, int j, int k) { return c.at({i, j, k}); };
    const InvariantTuple t = invariants(c);
    ASSERT_EQ(t.I1, C(1, 2, 0) * C(1, 0, 2) / (C(2, 1, 1) * C(0, 1, 1)));
    ASSERT_EQ(t.I2, C(0, 1, 1) * C(3, 1, 1) / (C(2, 2, 0) * C(1, 0, 2)) +
                        C(0, 1, 1) * C(3, 1, 1) / (C(2, 0, 2) * C(1, 2, 0)));
    ASSERT_EQ(t.I3, C(3, 0, 2) * C(0, 1, 1) / (C(2, 1, 1) * C(1, 0, 2)) +
                        C(3, 2, 0) * C(0, 1, 1) / (C(2, 1, 1) * C(1, 2, 0)));
    ASSERT_EQ(t.I4, C(2, 2, 0) * C(2, 0, 2) / C(2, 1, 1).pow(2));
    ASSERT_EQ(t.I5, C(3, 2, 0) * C(3, 0, 2) / C(3, 1, 1).pow(2));
    ASSERT_EQ(t.I6, C(2, 1, 1).pow(3) / (C(3, 1, 1).pow(2) * C(0, 1, 1)));
  }
}

TEST(Invariants, TorusInvariance) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const CurveCoeffs c = generic_slice_point(rng, 30);
    const GroupElem t = torus_elem(sample_nonzero(rng, 9), sample_nonzero(rng, 9), sample_nonzero(rng, 9));
    ASSERT_EQ(torus_invariants(act(t, c)), torus_invariants(c));
    ASSERT_EQ(invariants(act(flip_elem(), c)), invariants(c));
  }
}

TEST(Invariants, OrbitInvariance) {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 40);
    const GroupElem g = sample_group(rng, 9);
    const CurveCoeffs gc = act(g, c);
    try {
      const InvariantTuple before = invariants(normalize_slice(c).coeffs);
      ASSERT_EQ(invariants(normalize_slice(gc).coeffs), before) << c.to_string() << " " << to_string(g);
    } catch (const Degenerate&) {
      // Off the generic locus; both sides must then agree on being degenerate.
      ASSERT_THROW(invariants(normalize_slice(gc).coeffs), Degenerate);
    }
  }
}

TEST(Orbit, TorusNormalForm) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const CurveCoeffs c = generic_slice_point(rng, 30);
    const Normalized n = torus_normalize(c);
    ASSERT_EQ(n.coeffs.at({2, 1, 1}), Scalar(1));
    ASSERT_EQ(n.coeffs.at({3, 1, 1}), Scalar(1));
    ASSERT_EQ(n.coeffs.at({1, 0, 2}), Scalar(1));
    ASSERT_EQ(act(n.witness, c), n.coeffs);
    ASSERT_FALSE(n.witness.flip);
    ASSERT_TRUE(n.witness.lambda.is_zero());
  }
  CurveCoeffs bad = all_ones_on_slice();
  bad.at({3, 1, 1}) = 0;
  EXPECT_THROW(torus_normalize(bad), Degenerate);
}

TEST(Orbit, Examples) {
  SplitMix64 rng(12);
  const CurveCoeffs c = sample_generic(rng, 30);
  const OrbitResult self = same_orbit(c, c);
  ASSERT_TRUE(self.same);
  EXPECT_EQ(*self.witness, identity_elem());

  const CurveCoeffs base = all_ones_on_slice();
  CurveCoeffs other = base;
  other.at({3, 2, 0}) = 2;
  EXPECT_FALSE(same_orbit(base, other).same);
  EXPECT_FALSE(same_orbit(base, other).witness.has_value());
  EXPECT_EQ(invariants(base).I5, Scalar(1));
  EXPECT_EQ(invariants(other).I5, Scalar(2));
  EXPECT_NE(invariants(base), invariants(other));

  CurveCoeffs bad = c;
  bad.at({0, 1, 1}) = 0;
  EXPECT_THROW(same_orbit(bad, c), Degenerate);
}

TEST(Orbit, WitnessReplayOnOrbitPairs) {
  SplitMix64 rng(13);
  int flipped = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CurveCoeffs c = sample_generic(rng, 40);
    const GroupElem g = sample_group(rng, 9);
    const CurveCoeffs gc = act(g, c);
    OrbitResult r;
    try {
      r = same_orbit(c, gc);
    } catch (const Degenerate&) {
      continue;
    }
    ASSERT_TRUE(r.same) << c.to_string() << " " << to_string(g);
    ASSERT_EQ(act(*r.witness, c), gc);
    // Generic points have trivial stabilizer, so the witness is g itself.
    ASSERT_EQ(*r.witness, g);
    flipped += g.flip ? 1 : 0;
  }
  EXPECT_GT(flipped, 50);
}

TEST(Orbit, SeparationOnRandomPairs) {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const CurveCoeffs c1 = sample_generic(rng, 40);
    const CurveCoeffs c2 = sample_generic(rng, 40);
    try {
      const OrbitResult r = same_orbit(c1, c2);
      const bool equal = invariants(normalize_slice(c1).coeffs) == invariants(normalize_slice(c2).coeffs);
      if (r.same) {
        ASSERT_TRUE(equal);
        ASSERT_EQ(act(*r.witness, c1), c2);
      } else {
        ASSERT_FALSE(equal);
      }
    } catch (const Degenerate&) {
      continue;
    }
  }
}

// The symmetrized invariants cannot tell J3 from iota(J3) independently of
// J2: replacing J3 by iota(J3) alone keeps I2 and I3 but moves the point off
// the orbit.
TEST(Orbit, HalfFlipHasEqualInvariantsButDifferentOrbit) {
  const Scalar I1 = 2, J2 = 3, J3 = 5, I4 = 7, I5 = 11, I6 = 13;
  const CurveCoeffs c = from_torus_invariants(I1, J2, J3, I4, I5, I6);
  ASSERT_EQ(torus_invariants(c), (TorusInvariants{I1, J2, J3, I4, I5, I6}));
  const Scalar iota_J3 = I5 / (I1 * J3 * I6);
  const CurveCoeffs half = from_torus_invariants(I1, J2, iota_J3, I4, I5, I6);
  EXPECT_EQ(invariants(c), invariants(half));
  EXPECT_FALSE(same_orbit(c, half).same);
  // Applying the flip to both J's at once does give the same orbit.
  const Scalar iota_J2 = (I1 * J2 * I4 * I6).inverse();
  const CurveCoeffs both = from_torus_invariants(I1, iota_J2, iota_J3, I4, I5, I6);
  const OrbitResult r = same_orbit(c, both);
  ASSERT_TRUE(r.same);
  EXPECT_TRUE(r.witness->flip);
  EXPECT_EQ(act(*r.witness, c), both);
}

TEST(Iota, Relations) {
  EXPECT_TRUE(iota_relations(all_ones_on_slice()));
  EXPECT_TRUE(iota_relations_symbolic());
  SplitMix64 rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    ASSERT_TRUE(iota_relations(generic_slice_point(rng, 60)));
  }
  CurveCoeffs bad = all_ones_on_slice();
  bad.at({2, 0, 2}) = 0;
  EXPECT_THROW(iota_relations(bad), Degenerate);
  bad = all_ones_on_slice();
  bad.at({3, 0, 2}) = 0;
  EXPECT_THROW(iota_relations(bad), Degenerate);
}

TEST(Iota, SymbolicCheckDetectsAWrongIdentity) {
  const auto& m = torus_monomials();
  // iota(J2) against I1^-1 J2^-1 I4^-1 I6 (wrong sign on I6).
  EXPECT_NE(flip_exponents(m[1].exps), combine({{-1, &m[0].exps}, {-1, &m[1].exps}, {-1, &m[3].exps}, {1, &m[5].exps}}));
  EXPECT_EQ(flip_exponents(flip_exponents(m[2].exps)), m[2].exps);
}

TEST(Lattice, Report) {
  const ExponentLatticeReport r = exponent_lattice_report();
  EXPECT_EQ(r.kernel_rank, 6U);
  ASSERT_EQ(r.weights.size(), 3U);
  EXPECT_EQ(r.weights[0], (std::vector<Integer>{0, 1, 1, 2, 2, 2, 3, 3, 3}));
  EXPECT_EQ(r.weights[1], (std::vector<Integer>{1, 2, 0, 2, 1, 0, 2, 1, 0}));
  EXPECT_EQ(r.weights[2], (std::vector<Integer>{0, -1, 1, -1, 0, 1, -1, 0, 1}));
  EXPECT_EQ(r.names, (std::vector<std::string>{"I1", "J2", "J3", "I4", "I5", "I6"}));
  EXPECT_EQ(r.exponents[0], (ExponentVector{-1, 1, 1, 0, -1, 0, 0, 0, 0}));
  for (bool b : r.in_kernel) EXPECT_TRUE(b);
  EXPECT_FALSE(in_kernel(r.weights, ExponentVector{1, 0, 0, 0, 0, 0, 0, 0, 0}));
  for (const auto& k : r.kernel) {
    ExponentVector e{};
    for (std::size_t p = 0; p < 9; ++p) e[p] = static_cast<int>(k[p]);
    EXPECT_TRUE(in_kernel(r.weights, e));
  }
  EXPECT_GE(r.index, 1);
}

namespace {

// gcd of all maximal minors of a k x n integer matrix, straight from the
// definition.
Integer gcd_of_maximal_minors(const IntMatrix& m) {
  const std::size_t k = m.size();
  const std::size_t n = m[0].size();
  Integer g = 0;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  for (;;) {
    k3cert::testing::Rows sub;
    for (const auto& row : m) {
      std::vector<Scalar> r;
      for (auto c : cols) r.emplace_back(row[c]);
      sub.push_back(std::move(r));
    }
    Integer d = k3cert::testing::cofactor_det(sub).numerator();
    if (d < 0) d = -d;
    g = integer_gcd(g, d);
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

}  // namespace

TEST(Lattice, IndexMatchesGcdOfMinors) {
  const ExponentLatticeReport r = exponent_lattice_report();
  IntMatrix gens;
  for (const auto& e : r.exponents) gens.emplace_back(e.begin(), e.end());
  // The kernel is saturated, so its maximal minors are coprime and the index
  // of the generated sublattice is the gcd of the generators' minors.
  EXPECT_EQ(gcd_of_maximal_minors(r.kernel), 1);
  EXPECT_EQ(gcd_of_maximal_minors(gens), r.index);
}

TEST(Lattice, HermiteNormalFormProperties) {
  SplitMix64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.between(1, 5));
    const auto cols = static_cast<std::size_t>(rng.between(1, 6));
    IntMatrix m(rows, std::vector<Integer>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = rng.below(3) == 0 ? 0 : rng.between(-9, 9);
    }
    IntMatrix h = m;
    const std::size_t rank = hermite_normal_form(h);
    k3cert::testing::Rows as_rows;
    for (const auto& row : m) {
      std::vector<Scalar> r;
      for (const auto& x : row) r.emplace_back(x);
      as_rows.push_back(std::move(r));
    }
    ASSERT_EQ(rank, k3cert::testing::oracle_rank(as_rows));
    std::size_t last_pivot = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t p = 0;
      while (p < cols && h[i][p] == 0) ++p;
      if (i >= rank) {
        ASSERT_EQ(p, cols);
        continue;
      }
      ASSERT_LT(p, cols);
      if (i > 0) {
        ASSERT_GT(p, last_pivot);
      }
      ASSERT_GT(h[i][p], 0);
      for (std::size_t above = 0; above < i; ++above) {
        ASSERT_GE(h[above][p], 0);
        ASSERT_LT(h[above][p], h[i][p]);
      }
      last_pivot = p;
    }
    if (rows == cols) {
      k3cert::testing::Rows hr;
      for (const auto& row : h) {
        std::vector<Scalar> r;
        for (const auto& x : row) r.emplace_back(x);
        hr.push_back(std::move(r));
      }
      const Scalar d1 = k3cert::testing::cofactor_det(as_rows);
      const Scalar d2 = k3cert::testing::cofactor_det(hr);
      ASSERT_TRUE(d1 == d2 || d1 == -d2);
    }
  }
}

TEST(Lattice, KernelOfRandomMatrices) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.between(1, 3));
    const auto cols = static_cast<std::size_t>(rng.between(rows + 1, 6));
    IntMatrix a(rows, std::vector<Integer>(cols));
    for (auto& row : a) {
      for (auto& x : row) x = rng.between(-4, 4);
    }
    const IntMatrix k = integer_kernel(a);
    k3cert::testing::Rows ar;
    for (const auto& row : a) {
      std::vector<Scalar> r;
      for (const auto& x : row) r.emplace_back(x);
      ar.push_back(std::move(r));
    }
    ASSERT_EQ(k.size(), cols - k3cert::testing::oracle_rank(ar));
    for (const auto& v : k) {
      for (const auto& row : a) {
        Integer dot = 0;
        for (std::size_t p = 0; p < cols; ++p) dot += row[p] * v[p];
        ASSERT_EQ(dot, 0);
      }
    }
    if (!k.empty()) {
      ASSERT_EQ(gcd_of_maximal_minors(k), 1);
    }
  }
}

TEST(Sample, Determinism) {
  EXPECT_EQ(sample_generic(42, 100), sample_generic(42, 100));
  EXPECT_NE(sample_generic(42, 100), sample_generic(43, 100));
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CurveCoeffs c = sample_generic(trial_seed(stream_seed(0, "sample"), s), 100);
    for (std::size_t p = 0; p < 10; ++p) {
      ASSERT_FALSE(c[p].is_zero());
      ASSERT_LE(abs(c[p].numerator()), 100);
      ASSERT_GE(c[p].denominator(), 1);
      ASSERT_LE(c[p].denominator(), 100);
    }
    seen.insert(c.to_string());
  }
  EXPECT_EQ(seen.size(), 200U);
  SplitMix64 rng(1);
  bool saw_negative = false;
  bool saw_bound = false;
  for (int i = 0; i < 2000; ++i) {
    const Scalar x = sample_nonzero(rng, 3);
    saw_negative = saw_negative || x.sign() < 0;
    saw_bound = saw_bound || x == Scalar(3) || x == Scalar(-3);
  }
  EXPECT_TRUE(saw_negative);
  EXPECT_TRUE(saw_bound);
  EXPECT_THROW(sample_generic(1, 0), InvalidArgument);
}
