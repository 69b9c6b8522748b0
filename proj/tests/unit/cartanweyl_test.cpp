#include <gtest/gtest.h>

#include "cartanweyl/cartanweyl.hpp"
#include "coeff/qnumbers.hpp"
#include "test_support.hpp"

using namespace qloop;
using namespace qloop::cartanweyl;
using coeff::kappa;
using coeff::parse_field;
using coeff::qnum;
using linop::WeightModule;
using series::Direction;
using FieldSeries = series::Series<Field>;

namespace {

const coeff::LambdaSpec kSym = coeff::LambdaSpec::symbolic_markers();

std::vector<std::size_t> all_columns(const linop::ModulePtr& m) {
  std::vector<std::size_t> v(m->dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

void expect_equal(const Operator& a, const Operator& b, const std::vector<std::size_t>& cols, std::size_t min_compared,
                  const std::string& what) {
  const auto c = linop::compare_on(a, b, cols);
  EXPECT_TRUE(c.equal) << what << ": " << c.mismatch;
  EXPECT_GE(c.compared, min_compared) << what;
}

// op v_j = value(j) v_j on the given columns.
template <class F>
void expect_diagonal(const Operator& op, const std::vector<std::size_t>& cols, F value, const std::string& what) {
  for (std::size_t j : cols) {
    const auto& v = op.column(j);
    if (v.escaped) continue;
    const Field expected = value(j);
    if (expected.is_zero()) {
      EXPECT_TRUE(v.entries.empty()) << what << " column " << j;
      continue;
    }
    ASSERT_EQ(v.entries.size(), 1u) << what << " column " << j;
    EXPECT_EQ(v.entries[0].first, j) << what;
    EXPECT_EQ(v.entries[0].second, expected) << what << " column " << j;
  }
}

// (1 - a u)^{+-1} as truncated series.
FieldSeries linear_factor(const Field& a, int N, bool invert) {
  const auto s = FieldSeries::affine(Direction::Plus, Field(1), -a, N);
  return invert ? s.inverse() : s;
}

}  // namespace

TEST(CartanWeyl, RootLatticeForm) {
  for (Algebra alg : {Algebra::Sl2, Algebra::Sl3}) {
    const RootLattice L(alg);
    const auto d = L.delta();
    for (int i = 0; i <= L.rank(); ++i) {
      EXPECT_EQ(L.form(d, L.simple(i)), 0);
      EXPECT_EQ(L.form(L.simple(i), L.simple(i)), 2);
      for (int j = 0; j <= L.rank(); ++j) EXPECT_EQ(L.form(L.simple(i), L.simple(j)), L.form(L.simple(j), L.simple(i)));
    }
    EXPECT_EQ(L.form(d, d), 0);
    for (const auto& g : L.finite_positive()) EXPECT_EQ(L.form(g, g), 2);
  }
  const RootLattice L3(Algebra::Sl3);
  EXPECT_EQ(L3.form(L3.simple(1), L3.simple(2)), -1);
  EXPECT_EQ(L3.dual({0, 1, 1}, 0), L3.simple(0));
  EXPECT_EQ(L3.real({0, 0, 1}, 2), (AffineRoot{2, 2, 3}));
}

TEST(CartanWeyl, ThetaRootIsE3) {
  const auto m = WeightModule::verma_gl3(kSym, 4);
  const auto g = presentations::jimbo_sl3(m);
  RootVectorTable t(g);
  // On the evaluation module e_theta = [E1, E2]_q = E1 E2 - q E2 E1 = E3 up to the
  // evaluation prefactor, so compare with the direct q-commutator of the images.
  const Operator direct = g.e[1] * g.e[2] - (g.e[2] * g.e[1]).scaled(Field::q(1));
  expect_equal(t.e_real({0, 1, 1}, 0), direct, all_columns(m), 10, "e_theta");
  EXPECT_THROW(t.e_real({0, 1, 0, 1}, 0), std::exception);
}

TEST(CartanWeyl, Theta2Sl2PrimedVectors) {
  const auto g = presentations::theta_sl2(2, 8);
  RootVectorTable t(g);
  const auto cols = all_columns(g.carrier);
  const AffineRoot a{0, 1};
  // 1 - kappa e'(u) = 1 + q u, so e'_delta = -q / kappa.
  expect_equal(t.e_prime(a, 1), Operator::identity(g.carrier).scaled(-kappa().inverse() * Field::q(1)), cols, 6,
               "e'_delta");
  for (int n = 2; n <= 4; ++n) expect_equal(t.e_prime(a, n), Operator::zero(g.carrier), cols, 3, "e'_n delta");
}

TEST(CartanWeyl, Theta3Sl3PrimedVectors) {
  const auto g = presentations::theta_sl3(3, false, 6);
  RootVectorTable t(g);
  const auto cols = g.carrier->positions_up_to_degree(3);
  for (int n = 1; n <= 3; ++n) expect_equal(t.e_prime({0, 1, 0}, n), Operator::zero(g.carrier), cols, 4, "alpha1");
  expect_equal(t.e_prime({0, 0, 1}, 1), Operator::identity(g.carrier).scaled(kappa().inverse() * Field::q(1)), cols,
               4, "alpha2 n=1");
  for (int n = 2; n <= 3; ++n) expect_equal(t.e_prime({0, 0, 1}, n), Operator::zero(g.carrier), cols, 4, "alpha2");
}

TEST(CartanWeyl, Theta1Sl2PrimedVectorsAreDiagonal) {
  const auto g = presentations::theta_sl2(1, 9);
  RootVectorTable t(g);
  const auto cols = all_columns(g.carrier);
  for (int n = 1; n <= 4; ++n) {
    // chi^- sends q^{N} to q^{-(m+1)} on v_m.
    const auto value = [&](std::size_t j) {
      const int m = g.carrier->index(j)[0];
      const Field qN = Field::q(-(m + 1));
      const Field sign((n % 2 == 1) ? 1 : -1);
      Field qN2n(1), qNm2(1);
      for (int k = 0; k < 2 * n; ++k) qN2n = qN2n * qN;
      qNm2 = (qN * qN).inverse();
      return kappa().inverse() * sign * Field::q(2 * n) * (qnum(n + 1) - Field::q(-1) * qnum(n) * qNm2) * qN2n;
    };
    expect_diagonal(t.e_prime({0, 1}, n), cols, value, "theta1 e'_" + std::to_string(n));
  }
}

TEST(CartanWeyl, Sl2EvaluationPhiPlusMatchesClosedForm) {
  constexpr int N = 3;
  const auto m = WeightModule::verma_gl2(kSym, 8);
  RootVectorTable t(presentations::jimbo_sl2(m));
  const OpSeries phi = t.phi_plus(1, N);
  const Field z1 = Field::var(coeff::Var::z1), z2 = Field::var(coeff::Var::z2);
  for (int mm = 0; mm <= 3; ++mm) {
    const Field qm = Field::q(-2 * mm);
    const FieldSeries expected = (linear_factor(z1 * z1 * Field::q(2), N, false) * linear_factor(z2 * z2, N, false) *
                                  linear_factor(z1 * z1 * Field::q(2) * qm, N, true) *
                                  linear_factor(z1 * z1 * qm, N, true))
                                     .scaled(z1 * z2.inverse() * qm);
    const std::size_t j = *m->find({mm});
    for (int n = 0; n <= N; ++n)
      expect_diagonal(phi[n], {j}, [&](std::size_t) { return expected[n]; },
                      "phi+_" + std::to_string(n) + " v_" + std::to_string(mm));
  }
}

TEST(CartanWeyl, Sl2EvaluationPhiMinusMatchesClosedForm) {
  constexpr int N = 3;
  const auto m = WeightModule::verma_gl2(kSym, 8);
  RootVectorTable t(presentations::jimbo_sl2(m));
  const OpSeries phi = t.phi_minus(1, N);
  const Field z1 = Field::var(coeff::Var::z1), z2 = Field::var(coeff::Var::z2);
  for (int mm = 0; mm <= 3; ++mm) {
    const Field qm = Field::q(2 * mm);
    const Field a = (z1 * z1 * Field::q(2)).inverse(), b = (z2 * z2).inverse();
    const auto lf = [&](const Field& c, bool inv) {
      const auto s = FieldSeries::affine(Direction::Minus, Field(1), -c, N);
      return inv ? s.inverse() : s;
    };
    const FieldSeries expected =
        (lf(a, false) * lf(b, false) * lf(a * qm, true) * lf((z1 * z1).inverse() * qm, true)).scaled(z2 * z1.inverse() * qm);
    const std::size_t j = *m->find({mm});
    for (int n = 0; n <= N; ++n)
      expect_diagonal(phi[n], {j}, [&](std::size_t) { return expected[n]; },
                      "phi-_" + std::to_string(n) + " v_" + std::to_string(mm));
  }
}

TEST(CartanWeyl, PhiCoefficientsCommute) {
  const auto m = WeightModule::verma_gl3(kSym, 5);
  RootVectorTable t(presentations::jimbo_sl3(m));
  const auto cols = m->positions_up_to_degree(1);
  std::vector<Operator> ops;
  for (int i = 1; i <= 2; ++i)
    for (int n = 0; n <= 2; ++n) {
      ops.push_back(t.phi_coefficient(true, i, n));
      ops.push_back(t.phi_coefficient(false, i, -n));
    }
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      expect_equal(ops[a] * ops[b], ops[b] * ops[a], cols, 1, "phi pair " + std::to_string(a) + "," + std::to_string(b));
}

TEST(CartanWeyl, ExponentialRecoversPrimedVectors) {
  constexpr int N = 4;
  const auto m = WeightModule::finite_gl2({3, 0});
  RootVectorTable t(presentations::jimbo_sl2(m));
  const auto cols = all_columns(m);
  const AffineRoot a{0, 1};
  // exp(-kappa e(u)) = 1 - kappa e'(u)
  const OpSeries lhs = series::exp_series(t.e_imag_series(a, N).scaled(-kappa()));
  const OpSeries rhs = t.e_prime_series(a, N).scaled(-kappa());
  for (int n = 1; n <= N; ++n) expect_equal(lhs[n], rhs[n], cols, 4, "e coefficient " + std::to_string(n));
  // exp(kappa f(u^-1)) = 1 + kappa f'(u^-1)
  const OpSeries lf = series::exp_series(t.f_imag_series(a, N).scaled(kappa()));
  const OpSeries rf = t.f_prime_series(a, N).scaled(kappa());
  for (int n = 1; n <= N; ++n) expect_equal(lf[n], rf[n], cols, 4, "f coefficient " + std::to_string(n));
}

TEST(CartanWeyl, DrinfeldGeneratorBasics) {
  const auto m = WeightModule::verma_gl2(kSym, 6);
  const auto g = presentations::jimbo_sl2(m);
  RootVectorTable t(g);
  const auto cols = all_columns(m);
  expect_equal(t.xi_plus(1, 0), g.e[1], cols, 5, "xi+_0");
  expect_equal(t.xi_minus(1, 0), g.f[1], cols, 5, "xi-_0");
  expect_equal(t.phi_coefficient(true, 1, 0), g.qh[1], cols, 5, "phi+_0");
  expect_equal(t.phi_coefficient(false, 1, 0), g.qh_inv[1], cols, 5, "phi-_0");
  expect_equal(t.chi(1, 1), t.e_imag_series({0, 1}, 1)[1].scaled(Field(g.o[1])), cols, 5, "chi_1");
  EXPECT_THROW(t.chi(1, 0), UsageError);
  EXPECT_THROW(t.phi_coefficient(true, 0, 1), UsageError);
  RootVectorTable b(presentations::borel(g));
  EXPECT_THROW(b.xi_minus(1, 0), UsageError);
}

TEST(CartanWeyl, DrinfeldRelationsSl2) {
  const auto m = WeightModule::finite_gl2({3, 0});
  RootVectorTable t(presentations::jimbo_sl2(m));
  const auto cols = all_columns(m);
  const Field k_inv = kappa().inverse();
  for (int n = -2; n <= 2; ++n) {
    for (int k = -2; k <= 2; ++k) {
      const std::string tag = std::to_string(n) + "," + std::to_string(k);
      const Operator phi = t.phi_coefficient(true, 1, n + k) - t.phi_coefficient(false, 1, n + k);
      expect_equal(linop::commutator(t.xi_plus(1, n), t.xi_minus(1, k)), phi.scaled(k_inv), cols, 4, "[xi+,xi-] " + tag);
      if (n == 0) continue;
      const Field c = qnum(2 * n) * Field(n).inverse();
      expect_equal(linop::commutator(t.chi(1, n), t.xi_plus(1, k)), t.xi_plus(1, n + k).scaled(c), cols, 4,
                   "[chi,xi+] " + tag);
      expect_equal(linop::commutator(t.chi(1, n), t.xi_minus(1, k)), t.xi_minus(1, n + k).scaled(-c), cols, 4,
                   "[chi,xi-] " + tag);
      if (k != 0) expect_equal(linop::commutator(t.chi(1, n), t.chi(1, k)), Operator::zero(m), cols, 4, "[chi,chi] " + tag);
    }
  }
}

TEST(CartanWeyl, DrinfeldRelationsSl3) {
  const auto m = WeightModule::finite_gl3({2, 1, 0});
  RootVectorTable t(presentations::jimbo_sl3(m));
  const auto cols = all_columns(m);
  const Field k_inv = kappa().inverse();
  const RootLattice& L = t.lattice();
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const int b = L.form(L.simple(i), L.simple(j));
      for (int n = -2; n <= 2; ++n)
        for (int k = -2; k <= 2; ++k) {
          if (std::abs(n + k) > 2) continue;
          const std::string tag = std::to_string(i) + std::to_string(j) + " " + std::to_string(n) + "," + std::to_string(k);
          const Operator phi = i == j ? (t.phi_coefficient(true, i, n + k) - t.phi_coefficient(false, i, n + k)).scaled(k_inv)
                                      : Operator::zero(m);
          expect_equal(linop::commutator(t.xi_plus(i, n), t.xi_minus(j, k)), phi, cols, 8, "[xi+,xi-] " + tag);
          if (n == 0) continue;
          const Field c = qnum(n * b) * Field(n).inverse();
          expect_equal(linop::commutator(t.chi(i, n), t.xi_plus(j, k)), t.xi_plus(j, n + k).scaled(c), cols, 8,
                       "[chi,xi+] " + tag);
          expect_equal(linop::commutator(t.chi(i, n), t.xi_minus(j, k)), t.xi_minus(j, n + k).scaled(-c), cols, 8,
                       "[chi,xi-] " + tag);
          if (k != 0) expect_equal(linop::commutator(t.chi(i, n), t.chi(j, k)), Operator::zero(m), cols, 8, "[chi,chi] " + tag);
        }
    }
}

TEST(CartanWeyl, SwappedRecursionBreaksDrinfeldRelations) {
  const auto m = WeightModule::finite_gl2({3, 0});
  RootVectorTable t(presentations::jimbo_sl2(m), RecursionOrder::Swapped);
  RootVectorTable n(presentations::jimbo_sl2(m));
  const auto cols = all_columns(m);
  // The orders agree up to n = 1 and differ by a sign on e_{alpha + 2 delta}.
  expect_equal(t.e_prime({0, 1}, 2), n.e_prime({0, 1}, 2).scaled(Field(-1)), cols, 4, "e'_2delta");
  const Operator lhs = linop::commutator(t.chi(1, 1), t.xi_plus(1, 1));
  EXPECT_FALSE(linop::compare_on(lhs, t.xi_plus(1, 2).scaled(qnum(2)), cols).equal);
}

TEST(CartanWeyl, DrinfeldRelationSuite) {
  const auto m = WeightModule::verma_gl2(coeff::LambdaSpec::integers({3, 0, 0}), 8);
  RootVectorTable t(presentations::jimbo_sl2(m));
  const auto checks = check_drinfeld_relations(t, 2, all_columns(m));
  // 25 (n, k) pairs; the chi relations need n != 0, [chi, chi] also k != 0.
  EXPECT_EQ(checks.size(), 25u + 2 * 20u + 16u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.result.equal) << c.name << ": " << c.result.mismatch;
    EXPECT_GT(c.result.compared, 0u) << c.name;
  }
}

TEST(CartanWeyl, DrinfeldSuiteBoundsTheSum) {
  const auto m = WeightModule::verma_gl3(kSym, 4);
  RootVectorTable t(presentations::jimbo_sl3(m));
  const auto checks = check_drinfeld_relations(t, 1, m->positions_up_to_degree(1), 1);
  for (const auto& c : checks) EXPECT_TRUE(c.result.equal) << c.name << ": " << c.result.mismatch;
  for (const auto& c : checks) {
    EXPECT_EQ(c.name.find("; 1,1)"), std::string::npos) << c.name;
    EXPECT_EQ(c.name.find("; -1,-1)"), std::string::npos) << c.name;
  }
}

TEST(CartanWeyl, DrinfeldSuiteNeedsFImages) {
  RootVectorTable t(presentations::theta_sl2(1, 4));
  EXPECT_THROW(check_drinfeld_relations(t, 1, {0}), UsageError);
}
