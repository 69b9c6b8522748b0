#pragma once

#include <array>
#include <string>
#include <vector>

#include "linop/module.hpp"

namespace qloop::presentations {

using coeff::Field;
using coeff::Var;
using linop::Comparison;
using linop::ModulePtr;
using linop::Operator;

enum class Algebra { Sl2, Sl3 };
enum class Scope { Full, BorelPlus };

/// l for sl_{l+1}.
int rank(Algebra a);
/// Affine Cartan matrix entry a_ij, i, j in {0, ..., l}. Both algebras are
/// simply laced, so this is also the symmetric form (alpha_i|alpha_j).
int cartan(Algebra a, int i, int j);
std::string algebra_name(Algebra a);

/// A representation of U_q(L(sl_{l+1})) (or of its Borel subalgebra) given by
/// the images of the Drinfeld-Jimbo generators. Index i runs over 0..l.
struct GeneratorImages {
  Algebra algebra = Algebra::Sl2;
  Scope scope = Scope::Full;
  ModulePtr carrier;
  std::vector<Operator> e, f;          // f empty in Borel scope
  std::vector<Operator> qh, qh_inv;    // q^{h_i}, q^{-h_i}
  std::vector<int> o;                  // o_i for i = 1..l (o[0] unused)
  std::string name;

  int rank() const { return presentations::rank(algebra); }
  std::size_t nodes() const { return static_cast<std::size_t>(rank() + 1); }
  const Operator& f_image(int i) const;
};

/// Evaluation representations through the Jimbo homomorphism.
GeneratorImages jimbo_sl2(const ModulePtr& gl2_module);
GeneratorImages jimbo_sl3(const ModulePtr& gl3_module);

/// Drops the f images.
GeneratorImages borel(GeneratorImages g);

/// The oscillator homomorphism rho composed with chi^+ (plus = true) or chi^-.
/// sl2 acts on one oscillator module, sl3 on a tensor of two.
GeneratorImages osc_rho_sl2(const ModulePtr& osc);
GeneratorImages osc_rho_sl3(const ModulePtr& osc_pair);

/// Precomposition with sigma^power (sigma(e_i) = e_{i+1}) and with tau.
GeneratorImages twist_sigma(const GeneratorImages& g, int power);
GeneratorImages twist_tau(const GeneratorImages& g);

/// Precomposition with Gamma_zeta: e_i -> zeta^{s_i} e_i, f_i -> zeta^{-s_i} f_i.
/// `marker` is the field variable standing for zeta.
GeneratorImages spectral_twist(const GeneratorImages& g, const std::vector<int>& s, Var marker);

/// V[xi]: q^{h_i} scaled by q^{xi_i} for i = 1..l and q^{h_0} by
/// q^{-sum xi_i}. xi.size() == l. Borel scope only.
GeneratorImages shift(const GeneratorImages& g, const std::vector<coeff::QExponent>& xi,
                      const coeff::LambdaSpec& spec = coeff::LambdaSpec::symbolic_markers());

/// Oscillator representations theta_a (a = 1, 2 for sl2; 1, 2, 3 for sl3)
/// and the barred sl3 variants, on modules truncated at total degree M.
GeneratorImages theta_sl2(int a, int M);
GeneratorImages theta_sl3(int a, bool barred, int M);

/// Representation on the tensor product of the carriers through the
/// coproduct (e_i -> e_i x 1 + q^{h_i} x e_i, f_i -> f_i x q^{-h_i} + 1 x f_i).
/// The result has Full scope only if both inputs do.
GeneratorImages tensor(const GeneratorImages& a, const GeneratorImages& b, int bound);

struct RelationCheck {
  std::string name;
  Comparison result;
};

/// Checks the defining relations (Cartan relations, [e_i, f_j], Serre
/// relations for e and, in Full scope, for f) and the central relation
/// prod q^{h_i} = 1 on the given columns.
std::vector<RelationCheck> check_defining_relations(const GeneratorImages& g, const std::vector<std::size_t>& columns);

}  // namespace qloop::presentations
