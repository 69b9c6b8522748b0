#include <gtest/gtest.h>

#include "presentations/presentations.hpp"
#include "test_support.hpp"

using namespace qloop;
using namespace qloop::presentations;
using coeff::parse_field;
using linop::SparseVec;
using linop::WeightModule;

namespace {

const coeff::LambdaSpec kSym = coeff::LambdaSpec::symbolic_markers();

std::vector<std::size_t> all_columns(const ModulePtr& m) {
  std::vector<std::size_t> v(m->dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

void expect_relations(const GeneratorImages& g, const std::vector<std::size_t>& cols, std::size_t min_compared) {
  const auto checks = check_defining_relations(g, cols);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) {
    EXPECT_TRUE(c.result.equal) << g.name << ": " << c.name << ": " << c.result.mismatch;
    EXPECT_GE(c.result.compared, min_compared) << g.name << ": " << c.name;
  }
}

void expect_same_images(const GeneratorImages& a, const GeneratorImages& b) {
  const auto cols = all_columns(a.carrier);
  ASSERT_EQ(a.nodes(), b.nodes());
  for (std::size_t i = 0; i < a.nodes(); ++i) {
    EXPECT_TRUE(linop::compare_on(a.e[i], b.e[i], cols).equal) << i;
    EXPECT_TRUE(linop::compare_on(a.qh[i], b.qh[i], cols).equal) << i;
    if (a.scope == Scope::Full) EXPECT_TRUE(linop::compare_on(a.f[i], b.f[i], cols).equal) << i;
  }
}

// Single-entry column check: op v_from = c v_to.
void expect_column(const Operator& op, const linop::BasisIndex& from, const linop::BasisIndex& to, const Field& c) {
  const auto& m = op.module();
  const SparseVec& v = op.column(*m->find(from));
  ASSERT_FALSE(v.escaped);
  ASSERT_EQ(v.entries.size(), 1u);
  EXPECT_EQ(m->index(v.entries[0].first), to);
  EXPECT_EQ(v.entries[0].second, c);
}

}  // namespace

TEST(Presentations, JimboSl2Images) {
  const auto m = WeightModule::verma_gl2(kSym, 5);
  const auto g = jimbo_sl2(m);
  expect_column(g.qh[0], {3}, {3}, parse_field("z1^-1*z2*q^6"));
  expect_column(g.e[0], {0}, {1}, parse_field("z1*z2"));
  expect_column(g.e[1], {1}, {0}, parse_field("(z1*z2^-1 - z1^-1*z2)/(q - q^-1)"));
  EXPECT_THROW(jimbo_sl2(WeightModule::verma_gl3(kSym, 2)), UsageError);
}

TEST(Presentations, JimboSl3Images) {
  const auto m = WeightModule::verma_gl3(kSym, 4);
  const auto g = jimbo_sl3(m);
  expect_column(g.qh[0], {0, 0, 0}, {0, 0, 0}, parse_field("z1^-1*z3"));
  expect_column(g.e[0], {0, 0, 0}, {0, 1, 0}, parse_field("z1*z3"));
  EXPECT_EQ(g.o, (std::vector<int>{0, 1, -1}));
}

TEST(Presentations, OscillatorImages) {
  const auto t2 = theta_sl2(2, 4);
  expect_column(t2.e[0], {2}, {3}, Field(1));
  const auto t3 = theta_sl3(3, false, 4);
  expect_column(t3.qh[1], {2, 1}, {2, 1}, Field::q(-1));
  expect_column(t3.qh[2], {1, 1}, {1, 1}, Field::q(-3));
  // rho(e_1) = -q^-1 b1 b2^dagger q^{N1 - N2} on W+ x W+: v(1,0) -> -q^-1 q^1 v(0,1)
  expect_column(t3.e[1], {1, 0}, {0, 1}, Field(-1));
}

TEST(Presentations, EvaluationRelationsSl2) {
  const auto m = WeightModule::verma_gl2(kSym, 8);
  expect_relations(jimbo_sl2(m), all_columns(m), 4);
  const auto f = WeightModule::finite_gl2({3, 0});
  expect_relations(jimbo_sl2(f), all_columns(f), 4);
}

TEST(Presentations, EvaluationRelationsSl3) {
  const auto m = WeightModule::verma_gl3(kSym, 5);
  expect_relations(jimbo_sl3(m), m->positions_up_to_degree(2), 3);
  const auto f = WeightModule::finite_gl3({2, 1, 0});
  expect_relations(jimbo_sl3(f), all_columns(f), 8);
}

TEST(Presentations, OscillatorRelations) {
  for (int a : {1, 2}) expect_relations(theta_sl2(a, 7), all_columns(theta_sl2(a, 7).carrier), 4);
  for (int a : {1, 2, 3})
    for (bool barred : {false, true}) {
      const auto g = theta_sl3(a, barred, 6);
      expect_relations(g, g.carrier->positions_up_to_degree(3), 4);
    }
}

TEST(Presentations, TwistOrders) {
  const auto g = jimbo_sl3(WeightModule::verma_gl3(kSym, 3));
  expect_same_images(twist_sigma(twist_sigma(twist_sigma(g, 1), 1), 1), g);
  expect_same_images(twist_sigma(g, 3), g);
  expect_same_images(twist_tau(twist_tau(g)), g);
  const auto s = twist_sigma(g, 1);
  EXPECT_TRUE(linop::compare_on(s.e[0], g.e[1], all_columns(g.carrier)).equal);
  const auto t = twist_tau(g);
  EXPECT_TRUE(linop::compare_on(t.qh[1], g.qh[2], all_columns(g.carrier)).equal);
  EXPECT_TRUE(linop::compare_on(t.qh[0], g.qh[0], all_columns(g.carrier)).equal);
  const auto h = jimbo_sl2(WeightModule::verma_gl2(kSym, 4));
  expect_same_images(twist_tau(h), h);
  expect_same_images(twist_sigma(h, -2), h);
}

TEST(Presentations, TwistsPreserveRelations) {
  const auto m = WeightModule::verma_gl2(kSym, 7);
  const auto g = jimbo_sl2(m);
  expect_relations(twist_sigma(g, 1), all_columns(m), 4);
  expect_relations(spectral_twist(g, {1, 2}, Var::zeta), all_columns(m), 4);
  const auto z = spectral_twist(g, {1, 2}, Var::zeta);
  EXPECT_TRUE(linop::compare_on(z.e[1], g.e[1].scaled(Field::var(Var::zeta, 2)), all_columns(m)).equal);
  EXPECT_THROW(spectral_twist(g, {1}, Var::zeta), UsageError);
  const auto b = borel(g);
  EXPECT_THROW(b.f_image(0), UsageError);
  const auto sh = shift(b, {coeff::QExponent{-2, {-1, 1, 0}}});
  expect_relations(sh, all_columns(m), 4);
  expect_column(sh.qh[1], {0}, {0}, parse_field("q^-2"));
  EXPECT_THROW(shift(g, {coeff::QExponent{}}), UsageError);
}

TEST(Presentations, TensorProductsAreRepresentations) {
  const auto a = jimbo_sl2(WeightModule::verma_gl2(coeff::LambdaSpec::integers({2, 0, 0}), 4));
  const auto b = jimbo_sl2(WeightModule::verma_gl2(coeff::LambdaSpec::integers({1, 3, 0}), 4));
  const auto ab = tensor(a, b, 4);
  EXPECT_EQ(ab.scope, Scope::Full);
  expect_relations(ab, ab.carrier->positions_up_to_degree(1), 2);
  const auto o = tensor(theta_sl3(1, false, 6), theta_sl3(2, false, 6), 6);
  EXPECT_EQ(o.scope, Scope::BorelPlus);
  expect_relations(o, o.carrier->positions_up_to_degree(1), 1);
}
