#include "jobs/commands.hpp"

#include <functional>
#include <numeric>
#include <optional>

#include "gauss/gauss.hpp"
#include "lweights/catalog.hpp"

namespace qloop::jobs {

using coeff::Field;
using coeff::Var;
using lweights::BasisIndex;
using lweights::LWeight;
using lweights::LWeightVector;
using presentations::Algebra;
using presentations::GeneratorImages;

namespace {

std::vector<std::size_t> all_columns(const linop::ModulePtr& m) {
  std::vector<std::size_t> v(m->dim());
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

std::string render_rational(const lweights::RationalForm& r) {
  const auto f = lweights::factorize(r);
  return f ? f->render() : r.render();
}

std::string render_lweight(const LWeight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.plus.size(); ++i)
    out += (i ? "; " : "") + std::string("Psi+_") + std::to_string(i + 1) + " = " + render_rational(w.plus[i]);
  for (std::size_t i = 0; i < w.minus.size(); ++i)
    out += "; Psi-_" + std::to_string(i + 1) + " = " + render_rational(w.minus[i]);
  return out;
}

Field spectral_power(const std::vector<int>& s) {
  return Field::var(Var::zeta, std::accumulate(s.begin(), s.end(), 0));
}

// Psi_i(u) -> Psi_{l+1-i}(-u) on computed l-weights.
LWeight swap_negate(const LWeight& w) {
  const LWeight n = lweights::spectral_substitute(w, Field(-1));
  return {{n.plus.rbegin(), n.plus.rend()}, {n.minus.rbegin(), n.minus.rend()}};
}

struct Row {
  BasisIndex m;
  std::optional<LWeightVector> v;
  std::optional<LWeight> w;
  Status failure = Status::Fail;  // status when w is empty
  std::string error;
};

// Basis vectors of total degree <= `degree`, in module order.
std::vector<BasisIndex> row_indices(const linop::ModulePtr& m, int degree) {
  std::vector<BasisIndex> out;
  for (std::size_t p : m->positions_up_to_degree(degree)) out.push_back(m->index(p));
  return out;
}

Row compute_row(cartanweyl::RootVectorTable& t, const BasisIndex& m, int order, lweights::ReconstructionBounds b) {
  Row r{m, std::nullopt, std::nullopt, Status::Fail, {}};
  try {
    r.v = lweights::build_w_basis(t.images().carrier, m);
  } catch (const EscapeError&) {
    r.error = "w_m leaves the truncation window (raise M)";
    return r;
  } catch (const DomainError& e) {
    r.failure = Status::Skipped;
    r.error = std::string("w_m undefined: ") + e.what();
    return r;
  }
  try {
    r.w = lweights::compute_lweight(t, *r.v, order, b);
  } catch (const lweights::NotEigenvectorError& e) {
    r.error = "not an l-weight vector at order " + std::to_string(e.order()) + ": " + e.residual();
  } catch (const EscapeError&) {
    r.error = "phi images leave the truncation window (raise M)";
  } catch (const DomainError& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<Row> compute_rows(cartanweyl::RootVectorTable& t, const std::vector<BasisIndex>& idx, int order,
                              lweights::ReconstructionBounds b) {
  std::vector<Row> rows;
  for (const auto& m : idx) rows.push_back(compute_row(t, m, order, b));
  return rows;
}

std::string row_id(const linop::ModulePtr& module, const BasisIndex& m) { return "m=" + module->render_index(m); }

LWeight expected_lweight(const JobConfig& c, const BasisIndex& m, lweights::FormKind kind) {
  LWeight w = lweights::closed_form(c.catalog_id(), m, c.lambda, kind).as_lweight();
  if (!c.s.empty()) w = lweights::spectral_substitute(w, spectral_power(c.s));
  return w;
}

void add_relations(Report& r, const std::vector<presentations::RelationCheck>& checks, const std::string& ref) {
  for (const auto& rc : checks) {
    if (!rc.result.equal)
      r.add(rc.name, ref, Status::Fail, rc.result.mismatch);
    else if (rc.result.compared == 0)
      r.add(rc.name, ref, Status::Fail, "no column inside the window");
    else
      r.add(rc.name, ref, Status::Pass);
  }
}

bool same_images(const GeneratorImages& a, const GeneratorImages& b, const std::vector<std::size_t>& cols,
                 std::string* detail) {
  auto cmp = [&](const std::vector<linop::Operator>& x, const std::vector<linop::Operator>& y, const char* name) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto c = linop::compare_on(x[i], y[i], cols);
      if (!c.equal) {
        *detail = std::string(name) + "_" + std::to_string(i) + ": " + c.mismatch;
        return false;
      }
    }
    return true;
  };
  return cmp(a.e, b.e, "e") && cmp(a.qh, b.qh, "q^h") && (a.scope != presentations::Scope::Full || cmp(a.f, b.f, "f"));
}

void add_catalog_rows(Report& r, const JobConfig& c, const linop::ModulePtr& module, const std::vector<Row>& rows) {
  for (const auto& row : rows) {
    const std::string id = row_id(module, row.m);
    if (!row.w) {
      r.add(id, c.catalog_id(), row.failure, row.error);
      continue;
    }
    const LWeight expected = expected_lweight(c, row.m, lweights::FormKind::Computed);
    if (row.w->same_function(expected))
      r.add(id, c.catalog_id(), Status::Pass);
    else
      r.add(id, c.catalog_id(), Status::Fail,
            "computed " + render_lweight(*row.w) + " | catalog " + render_lweight(expected));
  }
}

// Ledger entries reported with this catalog id or command. Entries with a
// printed catalog form are confirmed against the computed rows.
void add_ledger_hits(Report& r, const std::string& concerns, const JobConfig* c, const std::vector<Row>* rows) {
  for (const auto& t : lweights::typo_ledger()) {
    if (t.concerns != concerns) continue;
    std::string detail = t.location + ": printed " + t.printed + "; computed " + t.computed;
    if (!t.catalog_id.empty() && c && rows) {
      std::size_t differs = 0, confirmed = 0;
      for (const auto& row : *rows) {
        if (!row.w) continue;
        const LWeight printed = expected_lweight(*c, row.m, lweights::FormKind::Printed);
        if (printed.same_function(expected_lweight(*c, row.m, lweights::FormKind::Computed))) continue;
        ++differs;
        if (!row.w->same_function(printed)) ++confirmed;
      }
      if (differs == 0) {
        r.add(t.id, t.id, Status::Skipped, detail + " (no row in the window where the forms differ)");
        continue;
      }
      if (confirmed != differs) {
        r.add(t.id, t.id, Status::Fail, detail + " (printed form matches the computation on some row)");
        continue;
      }
      detail += " (printed form refuted on " + std::to_string(confirmed) + " rows)";
    }
    r.add(t.id, t.id, Status::Documented, detail);
  }
}

void add_pair_rules(Report& r, const std::vector<Row>& rows, const linop::ModulePtr& module) {
  std::vector<std::string> bad_const, bad_sign;
  std::size_t n = 0;
  for (const auto& row : rows) {
    if (!row.w) continue;
    ++n;
    if (!row.w->constant_terms_inverse()) bad_const.push_back(module->render_index(row.m));
    if (!row.w->signs_consistent()) bad_sign.push_back(module->render_index(row.m));
  }
  auto add = [&](const std::string& id, const std::string& ref, const std::vector<std::string>& bad) {
    if (n == 0) {
      r.add(id, ref, Status::Fail, "no l-weight extracted");
      return;
    }
    std::string detail;
    for (const auto& b : bad) detail += (detail.empty() ? "fails at " : ", ") + b;
    r.add(id, ref, bad.empty() ? Status::Pass : Status::Fail,
          bad.empty() ? std::to_string(n) + " pairs" : detail);
  };
  add("Psi+_0 Psi-_0 = 1", "constant-term-rule", bad_const);
  add("Psi+ and Psi- expand one function", "plus-minus-consistency", bad_sign);
}

void add_two_path(Report& r, const JobConfig& c, cartanweyl::RootVectorTable& t) {
  const auto& m = t.images().carrier;
  const bool sl3 = c.algebra == Algebra::Sl3;
  const int order = std::min(c.N, sl3 ? 3 : 4);
  const auto cols = c.finite ? all_columns(m) : m->positions_up_to_degree(sl3 ? 1 : c.degree);
  for (int i = 1; i <= t.images().rank(); ++i)
    for (bool plus : {true, false}) {
      const linop::OpSeries a = plus ? gauss::gauss_phi_plus(m, i, order) : gauss::gauss_phi_minus(m, i, order);
      const linop::OpSeries b = plus ? t.phi_plus(i, order) : t.phi_minus(i, order);
      std::string detail;
      std::size_t compared = 0;
      for (int n = 0; n <= order && detail.empty(); ++n) {
        const auto cmp = linop::compare_on(a[n], b[n], cols);
        compared += cmp.compared;
        if (!cmp.equal) detail = "coefficient " + std::to_string(n) + ": " + cmp.mismatch;
      }
      if (detail.empty() && compared == 0) detail = "no column inside the window";
      r.add(std::string(plus ? "phi+_" : "phi-_") + std::to_string(i) + " to order " + std::to_string(order),
            "two-path-phi", detail.empty() ? Status::Pass : Status::Fail, detail);
    }
}

// The partner representation, computed from scratch on the rows of degree
// <= 1, has l-weights rule(row l-weight).
void add_partner_rule(Report& r, const std::string& id, const std::string& ref, const std::vector<Row>& rows,
                      const linop::ModulePtr& module, GeneratorImages partner, const JobConfig& c,
                      const std::function<LWeight(const LWeight&)>& rule) {
  cartanweyl::RootVectorTable pt(std::move(partner));
  std::string detail;
  std::size_t n = 0;
  for (const auto& row : rows) {
    if (!row.w) continue;
    int deg = 0;
    for (int x : row.m) deg += x;
    if (deg > 1) continue;
    const Row p = compute_row(pt, row.m, c.reconstruction_order(), c.bounds());
    if (!p.w) {
      detail = "partner at " + module->render_index(row.m) + ": " + p.error;
      break;
    }
    ++n;
    const LWeight want = rule(*row.w);
    if (!p.w->same_function(want)) {
      detail = "differs at " + module->render_index(row.m) + ": " + render_lweight(*p.w) + " | rule gives " +
               render_lweight(want);
      break;
    }
  }
  if (detail.empty() && n == 0) detail = "no row of degree <= 1";
  r.add(id, ref, detail.empty() ? Status::Pass : Status::Fail, detail.empty() ? std::to_string(n) + " rows" : detail);
}

Report start(const std::string& command, const JobConfig& c) {
  Report r;
  r.command = command;
  r.config = c.describe();
  return r;
}

std::vector<int> default_twist(const JobConfig& c) {
  if (!c.s.empty()) return c.s;
  return c.algebra == Algebra::Sl3 ? std::vector<int>{1, 2, 0} : std::vector<int>{1, 2};
}

}  // namespace

Report cmd_verify(const JobConfig& c) {
  Report r = start("verify", c);
  const GeneratorImages g = build_images(c);
  const auto& module = g.carrier;
  const auto window = c.finite ? all_columns(module) : module->positions_up_to_degree(c.degree);
  add_relations(r, presentations::check_defining_relations(g, window), "defining-relations");

  cartanweyl::RootVectorTable t(g);
  const bool full = g.scope == presentations::Scope::Full;
  if (full) {
    const bool sl3 = c.algebra == Algebra::Sl3;
    const auto cols = c.finite ? window : module->positions_up_to_degree(sl3 ? 1 : c.degree);
    add_relations(r, cartanweyl::check_drinfeld_relations(t, sl3 ? 1 : 2, cols, sl3 ? 1 : -1), "drinfeld-relations");
  }
  if (c.rep == RepKind::Eval && c.s.empty()) add_two_path(r, c, t);

  const auto rows = compute_rows(t, row_indices(module, c.degree), c.reconstruction_order(), c.bounds());
  add_catalog_rows(r, c, module, rows);
  add_ledger_hits(r, c.catalog_id(), &c, &rows);
  if (full) add_pair_rules(r, rows, module);

  // Twists.
  const GeneratorImages base = build_images(c, false);
  {
    std::string detail;
    const bool ok = same_images(presentations::twist_sigma(base, base.rank() + 1), base, window, &detail);
    r.add("sigma^" + std::to_string(base.rank() + 1) + " = id", "sigma-order", ok ? Status::Pass : Status::Fail, detail);
  }
  if (c.algebra == Algebra::Sl3) {
    std::string detail;
    const bool ok = same_images(presentations::twist_tau(presentations::twist_tau(base)), base, window, &detail);
    r.add("tau^2 = id", "tau-order", ok ? Status::Pass : Status::Fail, detail);
  }
  {
    // u -> zeta^s u, recomputed on the twisted and untwisted images.
    const std::vector<int> s = default_twist(c);
    const Field power = spectral_power(s);
    const GeneratorImages twisted = presentations::spectral_twist(base, s, Var::zeta);
    std::vector<Row> plain_rows;
    if (c.s.empty()) {
      plain_rows = rows;
    } else {
      cartanweyl::RootVectorTable bt(base);
      std::vector<BasisIndex> idx;
      for (const auto& m : row_indices(module, std::min(c.degree, 1))) idx.push_back(m);
      plain_rows = compute_rows(bt, idx, c.reconstruction_order(), c.bounds());
    }
    std::string id = "u -> zeta^s u, s = ";
    for (std::size_t i = 0; i < s.size(); ++i) id += (i ? "," : "") + std::to_string(s[i]);
    add_partner_rule(r, id, "spectral-twist", plain_rows, module, twisted, c,
                     [&](const LWeight& w) { return lweights::spectral_substitute(w, power); });
  }
  if (c.rep == RepKind::EvalTau || c.barred) {
    JobConfig partner = c;
    if (c.rep == RepKind::EvalTau) {
      partner.rep = RepKind::Eval;
    } else {
      partner.barred = false;
      partner.theta = 4 - c.theta;
    }
    add_partner_rule(r, "Psi_i(u) -> Psi_{3-i}(-u)", c.barred ? "bar-rule" : "tau-rule", rows, module,
                     build_images(partner), c, swap_negate);
  }
  return r;
}

Report cmd_lweights(const JobConfig& c) {
  Report r = start("lweights", c);
  const GeneratorImages g = build_images(c);
  const auto& module = g.carrier;
  cartanweyl::RootVectorTable t(g);
  const auto rows = compute_rows(t, row_indices(module, c.degree), c.reconstruction_order(), c.bounds());
  add_catalog_rows(r, c, module, rows);
  Table tab;
  tab.name = "lweights";
  tab.columns = {"m", "vector", "node", "Psi+"};
  if (c.has_minus()) tab.columns.push_back("Psi-");
  tab.columns.insert(tab.columns.end(), {"catalog", "match"});
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& row = rows[k];
    const std::string m = module->render_index(row.m);
    const std::string vec = row.v ? row.v->render() : "";
    const bool match = r.checks[k].status == Status::Pass;
    if (!row.w) {
      std::vector<std::string> cells{m, vec, "", row.error};
      if (c.has_minus()) cells.push_back("");
      cells.insert(cells.end(), {c.catalog_id(), status_name(row.failure)});
      tab.rows.push_back(cells);
      continue;
    }
    for (std::size_t i = 0; i < row.w->plus.size(); ++i) {
      std::vector<std::string> cells{m, vec, std::to_string(i + 1), render_rational(row.w->plus[i])};
      if (c.has_minus()) cells.push_back(i < row.w->minus.size() ? render_rational(row.w->minus[i]) : "");
      cells.insert(cells.end(), {c.catalog_id(), match ? "yes" : "no"});
      tab.rows.push_back(cells);
    }
  }
  r.tables.push_back(std::move(tab));
  return r;
}

namespace {

lweights::FactoredRational map_fields(const lweights::FactoredRational& f, const std::function<Field(const Field&)>& fn) {
  lweights::FactoredRational out = f;
  out.constant = fn(f.constant);
  for (auto& x : out.factors) x.a = fn(x.a);
  return out.normalized();
}

Field specialize_lambda(const Field& f, const coeff::LambdaSpec& lambda) {
  if (lambda.symbolic) return f;
  Field out = f;
  const Var z[3] = {Var::z1, Var::z2, Var::z3};
  for (int i = 0; i < 3; ++i)
    out = out.substitute(z[i], coeff::Monomial::of(Var::q, lambda.values[static_cast<std::size_t>(i)]));
  return out;
}

lweights::FactoredRational inverse(const lweights::FactoredRational& f) {
  lweights::FactoredRational out = f;
  out.constant = f.constant.inverse();
  for (auto& x : out.factors) x.power = -x.power;
  return out;
}

// q^{c + sum k_i lambda_i} as text, from a monomial in q and the markers z_i.
std::optional<std::string> render_q_exponent(const Field& f) {
  if (!f.is_monomial()) return std::nullopt;
  const auto& terms = f.num().terms();
  if (terms.size() != 1 || terms.front().coef != 1) return std::nullopt;
  const coeff::Monomial& mono = terms.front().mono;
  std::string out;
  const Var z[3] = {Var::z1, Var::z2, Var::z3};
  for (int i = 0; i < 3; ++i) {
    const int k = mono[z[i]];
    if (k == 0) continue;
    out += k < 0 ? "-" : (out.empty() ? "" : "+");
    if (std::abs(k) != 1) out += std::to_string(std::abs(k)) + "*";
    out += "lambda" + std::to_string(i + 1);
  }
  for (std::size_t v = 0; v < coeff::kNumVars; ++v) {
    const Var var = static_cast<Var>(v);
    if (var != Var::q && var != Var::z1 && var != Var::z2 && var != Var::z3 && mono[var] != 0) return std::nullopt;
  }
  const int c = mono[Var::q];
  if (c != 0 || out.empty()) out += (c < 0 || out.empty() ? "" : "+") + std::to_string(c);
  return out;
}

}  // namespace

Report cmd_factorize(const JobConfig& c) {
  Report r = start("factorize", c);
  using lweights::FactoredRational;
  const lweights::ClosedForm triple = lweights::triple_tensor_highest();
  const std::vector<coeff::QExponent> xi{{-2, {-1, 1, 0}}, {-2, {0, -1, 1}}};
  const lweights::ClosedForm shifted = lweights::shifted_evaluation_highest(c.lambda, xi);
  const lweights::ClosedForm unshifted = lweights::shifted_evaluation_highest(c.lambda, {{}, {}});
  auto transform = [&](const FactoredRational& f) {
    const FactoredRational perturbed = map_fields(f, [&](const Field& x) {
      return x.substitute(Var::zeta2, coeff::Monomial::of(Var::zeta2) * coeff::Monomial::of(Var::q, c.zeta2_shift));
    });
    return map_fields(lweights::substitute_spectral(perturbed),
                      [&](const Field& x) { return specialize_lambda(x, c.lambda); });
  };
  std::vector<std::string> shifts;
  bool all = true;
  for (std::size_t i = 0; i < triple.plus.size(); ++i) {
    const FactoredRational got = transform(triple.plus[i]);
    const FactoredRational want = map_fields(shifted.plus[i], [&](const Field& x) { return specialize_lambda(x, c.lambda); });
    const std::string node = "node " + std::to_string(i + 1);
    if (!got.same_function(want)) {
      all = false;
      r.add(node, "factorization", Status::Fail,
            "mismatch at " + node + ": tensor gives " + got.render() + ", shifted evaluation gives " + want.render());
      continue;
    }
    const FactoredRational ratio =
        (got * inverse(map_fields(unshifted.plus[i], [&](const Field& x) { return specialize_lambda(x, c.lambda); })))
            .normalized();
    const auto e = ratio.factors.empty() ? render_q_exponent(ratio.constant) : std::nullopt;
    if (!e) {
      all = false;
      r.add(node, "factorization", Status::Fail, "ratio to the unshifted evaluation weight is not q^xi: " + ratio.render());
      continue;
    }
    shifts.push_back("xi(h" + std::to_string(i + 1) + ") = " + *e);
    r.add(node, "factorization", Status::Pass, got.render());
  }
  if (all) {
    std::string detail = "match:";
    for (std::size_t i = 0; i < shifts.size(); ++i) detail += (i ? ", " : " ") + shifts[i];
    r.add("shift values", "factorization", Status::Pass, detail);
  }
  add_ledger_hits(r, "factorize", nullptr, nullptr);

  // Pipeline on the truncated triple tensor product.
  const Var markers[3] = {Var::zeta1, Var::zeta2, Var::zeta3};
  GeneratorImages g;
  for (int a = 1; a <= 3; ++a) {
    const GeneratorImages ga = presentations::spectral_twist(presentations::theta_sl3(a, false, c.M), {1, 0, 0},
                                                              markers[a - 1]);
    g = a == 1 ? ga : presentations::tensor(g, ga, c.M);
  }
  cartanweyl::RootVectorTable t(g);
  const auto pos = g.carrier->find(BasisIndex(g.carrier->arity(), 0));
  LWeightVector v{g.carrier, linop::SparseVec::basis(*pos), -1};
  const LWeight expected = triple.as_lweight();
  lweights::ReconstructionBounds b{0, 0};
  for (const auto& f : triple.plus) {
    b.max_num = std::max(b.max_num, f.num_degree());
    b.max_den = std::max(b.max_den, f.den_degree());
  }
  const int order = std::max(c.N, lweights::required_order(b));
  std::string detail;
  for (int i = 1; i <= g.rank() && detail.empty(); ++i)
    for (int n = 0; n <= order && detail.empty(); ++n) {
      const linop::SparseVec x = t.xi_plus(i, n).apply(v.vec);
      if (x.escaped)
        detail = "xi+_" + std::to_string(i) + "," + std::to_string(n) + " v leaves the window (raise M)";
      else if (!x.entries.empty())
        detail = "xi+_" + std::to_string(i) + "," + std::to_string(n) + " v != 0";
    }
  r.add("xi+_{i,n} v = 0, n <= " + std::to_string(order), "highest-lweight-vector",
        detail.empty() ? Status::Pass : Status::Fail, detail);
  try {
    const LWeight w = lweights::compute_lweight(t, v, order, b);
    const bool ok = w.same_function(expected);
    r.add("Psi of v_0 in the truncated triple (M = " + std::to_string(c.M) + ", N = " + std::to_string(order) + ")",
          "factorization-pipeline", ok ? Status::Pass : Status::Fail,
          ok ? render_lweight(w) : "computed " + render_lweight(w) + " | closed form " + render_lweight(expected));
  } catch (const Error& e) {
    r.add("Psi of v_0 in the truncated triple", "factorization-pipeline", Status::Fail, e.what());
  }
  return r;
}

Report cmd_ledger(const JobConfig& c) {
  Report r = start("ledger", c);
  Table tab{"typo-ledger", {"id", "location", "printed", "computed", "catalog", "concerns"}, {}};
  for (const auto& t : lweights::typo_ledger())
    tab.rows.push_back({t.id, t.location, t.printed, t.computed, t.catalog_id, t.concerns});
  r.tables.push_back(std::move(tab));
  return r;
}

Report run_command(const std::string& command, const JobConfig& c) {
  if (command == "verify") return cmd_verify(c);
  if (command == "lweights") return cmd_lweights(c);
  if (command == "factorize") return cmd_factorize(c);
  if (command == "ledger") return cmd_ledger(c);
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace qloop::jobs
