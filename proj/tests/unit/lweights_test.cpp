#include <gtest/gtest.h>

#include "coeff/qnumbers.hpp"
#include "lweights/catalog.hpp"
#include "test_support.hpp"

using namespace qloop;
using namespace qloop::lweights;
using coeff::Field;
using coeff::kappa;
using coeff::LambdaSpec;
using coeff::Var;
using linop::WeightModule;

namespace {

const LambdaSpec kSym = LambdaSpec::symbolic_markers();

FieldSeries series_of(Direction d, std::vector<Field> c) { return FieldSeries(d, std::move(c)); }

// Taylor coefficients of c (1 - a u) / (1 - b u), written out directly.
std::vector<Field> one_pole(const Field& c, const Field& a, const Field& b, int n) {
  std::vector<Field> out{c};
  for (int k = 1; k <= n; ++k) out.push_back(c * (b.pow(k) - a * b.pow(k - 1)));
  return out;
}

Field z(int i, int k = 1) { return Field::var(static_cast<Var>(i), k); }

}  // namespace

TEST(Rational, ReconstructsSimpleForms) {
  const Field q = Field::q();
  auto lin = rational_reconstruct(series_of(Direction::Plus, {Field(1), -q, Field(0)}), 1, 0);
  ASSERT_TRUE(lin);
  EXPECT_TRUE(lin->same_function(RationalForm{Direction::Plus, {Field(1), -q}, {Field(1)}}));

  std::vector<Field> geo;
  for (int k = 0; k <= 4; ++k) geo.push_back(q.pow(k));
  auto inv = rational_reconstruct(series_of(Direction::Plus, geo), 0, 1);
  ASSERT_TRUE(inv);
  EXPECT_EQ(inv->num, std::vector<Field>{Field(1)});
  EXPECT_EQ(inv->den, (std::vector<Field>{Field(1), -q}));

  auto c = rational_reconstruct(series_of(Direction::Minus, {q, Field(0), Field(0), Field(0)}), 1, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->num, std::vector<Field>{q});
  EXPECT_EQ(c->den, std::vector<Field>{Field(1)});
}

TEST(Rational, RejectsUnderdeterminedSystems) {
  EXPECT_THROW(rational_reconstruct(series_of(Direction::Plus, {Field(1), Field(1)}), 1, 1), UsageError);
}

TEST(Rational, ReportsMissingRationalForm) {
  // exp(u) has no rational form of degrees <= 1/1 matching through order 5.
  std::vector<Field> e;
  mpz_class f = 1;
  for (int k = 0; k <= 5; ++k) {
    if (k > 1) f *= k;
    e.push_back(Field(mpq_class(mpz_class(1), f)));
  }
  EXPECT_FALSE(rational_reconstruct(series_of(Direction::Plus, e), 1, 1).has_value());
}

TEST(Rational, NonMonomialPolesUseTheGeneralSolver) {
  // 1 / (1 - 2u + 3u^2)
  std::vector<Field> s{Field(1), Field(2)};
  for (int k = 2; k <= 6; ++k) s.push_back(Field(2) * s[k - 1] - Field(3) * s[k - 2]);
  auto r = rational_reconstruct(series_of(Direction::Plus, s), 2, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->num, std::vector<Field>{Field(1)});
  EXPECT_EQ(r->den, (std::vector<Field>{Field(1), Field(-2), Field(3)}));
  EXPECT_FALSE(factorize(*r).has_value());
}

TEST(Rational, ReducesCommonFactors) {
  // (1 - q u)(1 - z1^2 u) / ((1 - q u)(1 - q^2 u)) expanded: must come back reduced.
  const Field q = Field::q();
  FactoredRational f{Direction::Plus, Field(1), {{q, 1}, {z(1, 2), 1}, {q, -1}, {q.pow(2), -1}}};
  const FieldSeries s = series_of(Direction::Plus, one_pole(Field(1), z(1, 2), q.pow(2), 7));
  auto r = rational_reconstruct(s, 3, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->num_degree(), 1);
  EXPECT_EQ(r->den_degree(), 1);
  EXPECT_TRUE(f.same_function(*r));
}

TEST(Rational, FactorsMonomialRoots) {
  const Field q = Field::q();
  FactoredRational f{Direction::Plus, q.pow(-2) * z(1), {{q.pow(3) * z(2, 2), 1}, {-q, 1}, {z(1, -2), -1}, {q, -2}}};
  auto back = factorize(f.to_form());
  ASSERT_TRUE(back);
  EXPECT_EQ(back->render(), f.normalized().render());
  EXPECT_TRUE(back->same_function(f));
  EXPECT_EQ(f.num_degree(), 2);
  EXPECT_EQ(f.den_degree(), 3);
}

TEST(Rational, RenderShowsSignsOfRoots) {
  const Field q = Field::q();
  FactoredRational f{Direction::Plus, q.pow(-1), {{q, 1}, {-q, -1}}};
  EXPECT_EQ(f.render(), "q^-1*(1 - q*u)*(1 + q*u)^-1");
  FactoredRational g{Direction::Minus, Field(1), {{q.pow(2), 1}}};
  EXPECT_EQ(g.render(), "(1 - q^2*u^-1)");
}

TEST(WBasis, CoefficientsMatchTheirDefinition) {
  const auto c = w_coefficients(kSym, {2, 2, 1});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], Field(1));
  // C_1 = -kappa [m2] / (1 - q^{2 lambda1 - 2 lambda2 - 2 m2 + 2 m3 + 4})
  const Field d1 = Field(1) - z(1, 2) * z(2, -2) * Field::q(-4 + 2 + 4);
  EXPECT_EQ(c[1], -kappa() * coeff::qnum(2) / d1);
  const Field d2 = Field(1) - z(1, 2) * z(2, -2) * Field::q(-4 + 2 + 6);
  EXPECT_EQ(c[2], kappa().pow(2) * Field::q(-1) / (d1 * d2));
}

TEST(WBasis, ZeroMiddleIndexGivesBasisVector) {
  auto mod = WeightModule::verma_gl3(kSym, 4);
  auto w = build_w_basis(mod, {2, 0, 1});
  ASSERT_EQ(w.vec.entries.size(), 1u);
  EXPECT_EQ(w.vec.entries[0].first, *mod->find({2, 0, 1}));
  EXPECT_EQ(w.vec.entries[0].second, Field(1));
}

TEST(WBasis, DegenerateIntegerWeightIsADomainError) {
  // k = 1, m = (0,1,0): vanishes when 2 lambda1 - 2 lambda2 + 2 = 0.
  auto mod = WeightModule::verma_gl3(LambdaSpec::integers({0, 1, 0}), 3);
  EXPECT_THROW(build_w_basis(mod, {0, 1, 0}), DomainError);
}

TEST(WBasis, OscillatorAndGl2ReturnTheBasisVector) {
  auto osc = presentations::theta_sl3(1, false, 4).carrier;
  auto w = build_w_basis(osc, {1, 2});
  ASSERT_EQ(w.vec.entries.size(), 1u);
  EXPECT_EQ(w.vec.entries[0].first, *osc->find({1, 2}));
  EXPECT_THROW(build_w_basis(WeightModule::verma_gl2(kSym, 3), {5}), EscapeError);
}

TEST(EigenvalueSeries, Theta3SecondNodeIsLinear) {
  const auto g = presentations::theta_sl3(3, false, 9);
  cartanweyl::RootVectorTable t(g);
  const auto phi = t.phi_plus(2, 4);
  for (linop::BasisIndex m : {linop::BasisIndex{0, 0}, {1, 2}, {3, 1}}) {
    const auto s = eigenvalue_series(phi, build_w_basis(g.carrier, m).vec);
    const Field c = Field::q(-m[0] - 2 * m[1]);
    EXPECT_EQ(s[0], c);
    EXPECT_EQ(s[1], -c * Field::q(1));
    for (int n = 2; n <= 4; ++n) EXPECT_TRUE(s[n].is_zero());
  }
}

TEST(EigenvalueSeries, Sl2HighestVectorIsTaylorOfReducedForm) {
  auto mod = WeightModule::verma_gl2(kSym, 8);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl2(mod));
  const auto s = eigenvalue_series(t.phi_plus(1, 5), build_w_basis(mod, {0}).vec);
  const auto oracle = one_pole(z(1) * z(2, -1), z(2, 2), z(1, 2), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(s[n], oracle[static_cast<std::size_t>(n)]) << n;
}

TEST(EigenvalueSeries, Theta1Sl2ConstantTerm) {
  const auto g = presentations::theta_sl2(1, 6);
  cartanweyl::RootVectorTable t(g);
  for (int m = 0; m <= 3; ++m)
    EXPECT_EQ(eigenvalue_series(t.phi_plus(1, 2), build_w_basis(g.carrier, {m}).vec)[0], Field::q(-2 * m - 2));
}

TEST(EigenvalueSeries, ReportsTheFirstFailingOrder) {
  auto mod = WeightModule::verma_gl3(kSym, 6);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl3(mod));
  const auto v = SparseVec::basis(*mod->find({0, 1, 0}));
  try {
    eigenvalue_series(t.phi_plus(1, 3), v);
    FAIL() << "v_(0,1,0) is not an l-weight vector";
  } catch (const NotEigenvectorError& e) {
    EXPECT_EQ(e.order(), 1);
    EXPECT_FALSE(e.residual().empty());
  }
}

TEST(EigenvalueSeries, EscapesAreReported) {
  auto mod = WeightModule::verma_gl3(kSym, 3);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl3(mod));
  EXPECT_THROW(eigenvalue_series(t.phi_plus(2, 3), build_w_basis(mod, {0, 1, 1}).vec), EscapeError);
}

TEST(Catalog, Sl3EvaluationAtZeroCancels) {
  const auto f = closed_form("sl3-eval", {0, 0, 0});
  const FactoredRational expected{Direction::Plus, z(1) * z(2, -1), {{z(2, 2), 1}, {z(1, 2), -1}}};
  EXPECT_EQ(f.plus[0].render(), expected.normalized().render());
  EXPECT_TRUE(f.plus[0].same_function(expected));
}

TEST(Catalog, BarredTheta1IsTheta3WithNegatedArgument) {
  const auto f = closed_form("sl3-theta1-bar", {2, 1});
  const Field c = Field::q(-2 - 2);
  EXPECT_TRUE(f.plus[0].same_function(FactoredRational{Direction::Plus, c, {{-Field::q(1), 1}}}));
  EXPECT_TRUE(f.plus[1].same_function(FactoredRational{Direction::Plus, Field::q(-2 + 1), {}}));
}

TEST(Catalog, UnknownIdAndWrongIndex) {
  EXPECT_THROW(closed_form("sl4-eval", {0}), UsageError);
  EXPECT_THROW(closed_form("sl3-eval", {0, 0}), UsageError);
}

TEST(Catalog, LedgerEntriesDifferWhereTheyClaimTo) {
  for (const auto& t : typo_ledger()) {
    if (t.catalog_id.empty()) continue;
    const auto& e = catalog_entry(t.catalog_id);
    const linop::BasisIndex m(e.index_size, 1);
    const auto printed = closed_form(t.catalog_id, m, kSym, FormKind::Printed).as_lweight();
    const auto computed = closed_form(t.catalog_id, m, kSym, FormKind::Computed).as_lweight();
    EXPECT_FALSE(printed.same_function(computed)) << t.id;
  }
}

TEST(Lweights, EvaluationSl2MatchesCatalogBothSigns) {
  auto mod = WeightModule::verma_gl2(kSym, 8);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl2(mod));
  for (int m = 0; m <= 3; ++m) {
    auto v = build_w_basis(mod, {m});
    const LWeight w = compute_lweight(t, v, 5, {2, 2});
    EXPECT_TRUE(w.same_function(closed_form("sl2-eval", {m}).as_lweight())) << m;
    EXPECT_TRUE(w.constant_terms_inverse());
    EXPECT_TRUE(w.signs_consistent());
    EXPECT_EQ(v.certified_order, 5);
  }
}

TEST(Lweights, GaussPathGivesTheSameSl3Lweight) {
  auto mod = WeightModule::verma_gl3(kSym, 9);
  auto v = build_w_basis(mod, {1, 1, 1});
  const LWeight w = compute_lweight_gauss(v, 9);
  EXPECT_TRUE(w.same_function(closed_form("sl3-eval", {1, 1, 1}).as_lweight()));
  EXPECT_TRUE(w.signs_consistent());
}

TEST(Lweights, Theta2Sl2UsesComputedPrefactor) {
  const auto g = presentations::theta_sl2(2, 8);
  cartanweyl::RootVectorTable t(g);
  auto v = build_w_basis(g.carrier, {2});
  const LWeight w = compute_lweight(t, v, 3, {1, 1});
  EXPECT_TRUE(w.same_function(closed_form("sl2-theta2", {2}, kSym, FormKind::Computed).as_lweight()));
  EXPECT_FALSE(w.same_function(closed_form("sl2-theta2", {2}, kSym, FormKind::Printed).as_lweight()));
}

TEST(Decompose, GenericIntegerWeightGivesWBasis) {
  auto mod = WeightModule::verma_gl3(LambdaSpec::integers({7, 3, 0}), 8);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl3(mod));
  const auto rep = lweight_decompose(t, *mod->find({0, 2, 0}), 2);
  ASSERT_EQ(rep.positions.size(), 3u);
  EXPECT_TRUE(rep.triangular);
  EXPECT_TRUE(rep.diagonalizable);
  EXPECT_TRUE(rep.findings.empty());
  ASSERT_EQ(rep.blocks.size(), 3u);
  for (const linop::BasisIndex m : {linop::BasisIndex{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}) {
    const auto w = build_w_basis(mod, m).vec;
    bool found = false;
    for (const auto& b : rep.blocks)
      for (const auto& v : b.basis) found = found || v.vec == w;
    EXPECT_TRUE(found) << mod->render_index(m);
  }
}

TEST(Decompose, OneDimensionalWeightSpace) {
  auto mod = WeightModule::verma_gl3(LambdaSpec::integers({4, 1, 0}), 4);
  cartanweyl::RootVectorTable t(presentations::jimbo_sl3(mod));
  const auto rep = lweight_decompose(t, *mod->find({1, 0, 0}), 2);
  ASSERT_EQ(rep.blocks.size(), 1u);
  ASSERT_EQ(rep.blocks[0].basis.size(), 1u);
  EXPECT_EQ(rep.blocks[0].basis[0].vec, SparseVec::basis(*mod->find({1, 0, 0})));
}

TEST(Decompose, Theta1WeightSpacesAreDiagonal) {
  const auto g = presentations::theta_sl3(1, false, 5);
  cartanweyl::RootVectorTable t(g);
  const auto rep = lweight_decompose(t, *g.carrier->find({1, 1}), 2);
  EXPECT_TRUE(rep.diagonalizable);
  for (const auto& b : rep.blocks)
    for (const auto& v : b.basis) EXPECT_EQ(v.vec.entries.size(), 1u);
}

TEST(Prefundamental, ConstantsMultiply) {
  // L_zeta x L_zeta' with <zeta, h_1> = 2, <zeta', h_1> = -5.
  LWeight a{{RationalForm{Direction::Plus, {Field::q(2)}, {Field(1)}}}, {}};
  LWeight b{{RationalForm{Direction::Plus, {Field::q(-5)}, {Field(1)}}}, {}};
  const LWeight p = tensor_highest_lweight({a, b});
  EXPECT_EQ(p.plus[0].trimmed().num, std::vector<Field>{Field::q(-3)});
  const auto rep = match_prefundamental(p);
  ASSERT_TRUE(rep.complete());
  EXPECT_TRUE(rep.nodes[0].form.factors.empty());
  EXPECT_EQ(rep.nodes[0].form.constant, Field::q(-3));
}

TEST(Prefundamental, SplitsIntoLinearFactors) {
  const Field a = Field::q(3) * z(4);
  const FactoredRational f{Direction::Plus, Field::q(1), {{a, 1}, {Field::q(-1), -1}}};
  const auto rep = match_prefundamental(LWeight{{f.to_form()}, {}});
  ASSERT_TRUE(rep.complete());
  EXPECT_EQ(rep.render(), "node 1: L_zeta constant q, L+(a = q^3*zeta), L-(a = q^-1)");
  EXPECT_THROW(match_prefundamental(LWeight{{RationalForm{Direction::Plus, {Field(0)}, {Field(1)}}}, {}}), DomainError);
}

TEST(Twists, SpectralTwistSubstitutesTheArgument) {
  const auto g0 = presentations::theta_sl3(2, false, 6);
  const auto g = presentations::spectral_twist(g0, {1, 0, 2}, Var::zeta);
  cartanweyl::RootVectorTable t0(g0), t(g);
  for (linop::BasisIndex m : {linop::BasisIndex{0, 0}, {1, 1}}) {
    auto v0 = build_w_basis(g0.carrier, m);
    auto v = build_w_basis(g.carrier, m);
    const LWeight base = compute_lweight(t0, v0, 5, {2, 2});
    const LWeight twisted = compute_lweight(t, v, 5, {2, 2});
    EXPECT_TRUE(twisted.same_function(spectral_substitute(base, z(4, 3))));
  }
}

TEST(Twists, TensorOfOscillatorsMultipliesHighestLweights) {
  const auto a = presentations::theta_sl3(2, false, 4);
  const auto b = presentations::theta_sl3(3, false, 4);
  const auto g = presentations::tensor(a, b, 4);
  cartanweyl::RootVectorTable t(g);
  LWeightVector v{g.carrier, SparseVec::basis(*g.carrier->find({0, 0, 0, 0})), -1};
  const LWeight w = compute_lweight(t, v, 3, {1, 1});
  const LWeight expected = tensor_highest_lweight(
      {closed_form("sl3-theta2", {0, 0}).as_lweight(), closed_form("sl3-theta3", {0, 0}).as_lweight()});
  EXPECT_TRUE(w.same_function(expected));
}

TEST(Factorization, SubstitutionGivesShiftedEvaluationWeight) {
  const auto triple = triple_tensor_highest();
  const auto eval = shifted_evaluation_highest(kSym, {coeff::QExponent{-2, {-1, 1, 0}}, coeff::QExponent{-2, {0, -1, 1}}});
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(substitute_spectral(triple.plus[i]).same_function(eval.plus[i])) << i;
  const auto wrong = shifted_evaluation_highest(kSym, {coeff::QExponent{-2, {-1, 1, 0}}, coeff::QExponent{-1, {0, -1, 1}}});
  EXPECT_FALSE(substitute_spectral(triple.plus[1]).same_function(wrong.plus[1]));
}
