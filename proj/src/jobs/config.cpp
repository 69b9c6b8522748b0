#include "jobs/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qloop::jobs {

using presentations::Algebra;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw UsageError(key + ": expected an integer, got '" + text + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
  if (out.empty()) throw UsageError(key + ": expected a comma-separated integer list");
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

const std::vector<std::string>& ConfigMap::keys() {
  static const std::vector<std::string> k{"algebra", "rep", "lambda", "module", "M", "N",
                                          "degree", "s", "format", "zeta2_shift"};
  return k;
}

void ConfigMap::set(const std::string& key, const std::string& value) {
  const auto& k = keys();
  if (std::find(k.begin(), k.end(), key) == k.end()) throw UsageError("unknown config key '" + key + "'");
  values_[key] = trim(value);
}

void ConfigMap::load_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    try {
      set(key, line.substr(eq + 1));
    } catch (const UsageError& e) {
      throw UsageError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
    ++count;
  }
  if (count == 0) throw UsageError(origin + ": no settings");
}

void ConfigMap::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

std::optional<std::string> ConfigMap::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    default:
      return "text";
  }
}

std::string JobConfig::rep_name() const {
  switch (rep) {
    case RepKind::Eval:
      return "eval";
    case RepKind::EvalTau:
      return "eval-tau";
    default:
      return "theta" + std::to_string(theta) + (barred ? "-bar" : "");
  }
}

std::string JobConfig::catalog_id() const { return presentations::algebra_name(algebra) + "-" + rep_name(); }

lweights::ReconstructionBounds JobConfig::bounds() const {
  if (rep != RepKind::Theta && algebra == Algebra::Sl3) return {4, 4};
  return {2, 2};
}

int JobConfig::reconstruction_order() const { return std::max(N, lweights::required_order(bounds())); }

std::vector<std::pair<std::string, std::string>> JobConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> out{
      {"algebra", presentations::algebra_name(algebra)},
      {"rep", rep_name()},
      {"lambda", lambda.symbolic ? "symbolic"
                                 : join(algebra == Algebra::Sl2 ? std::vector<int>{lambda.values[0], lambda.values[1]}
                                                                : std::vector<int>(lambda.values.begin(),
                                                                                   lambda.values.end()))},
      {"module", finite ? "finite" : "verma"},
      {"M", std::to_string(M)},
      {"N", std::to_string(N)},
      {"degree", std::to_string(degree)},
      {"s", s.empty() ? "none" : join(s)},
      {"format", format_name(format)},
      {"zeta2_shift", std::to_string(zeta2_shift)}};
  return out;
}

JobConfig resolve_config(const ConfigMap& raw, const std::string& command) {
  JobConfig c;
  const auto algebra = raw.get("algebra");
  if (!algebra)
    c.algebra = command == "factorize" ? Algebra::Sl3 : Algebra::Sl2;
  else if (*algebra == "sl2")
    c.algebra = Algebra::Sl2;
  else if (*algebra == "sl3")
    c.algebra = Algebra::Sl3;
  else
    throw UsageError("algebra: expected sl2 or sl3, got '" + *algebra + "'");
  const bool sl3 = c.algebra == Algebra::Sl3;
  const int l = sl3 ? 2 : 1;
  if (command == "factorize" && !sl3) throw UsageError("factorize needs algebra sl3");

  const std::string rep = raw.get("rep").value_or("eval");
  if (rep == "eval") {
    c.rep = RepKind::Eval;
  } else if (rep == "eval-tau") {
    if (!sl3) throw UsageError("rep eval-tau needs algebra sl3");
    c.rep = RepKind::EvalTau;
  } else if (rep.size() >= 6 && rep.compare(0, 5, "theta") == 0) {
    c.rep = RepKind::Theta;
    std::string rest = rep.substr(5);
    if (rest.size() > 4 && rest.compare(rest.size() - 4, 4, "-bar") == 0) {
      c.barred = true;
      rest.erase(rest.size() - 4);
    }
    c.theta = rest.size() == 1 && rest[0] >= '1' && rest[0] <= '3' ? rest[0] - '0' : 0;
    if (c.theta == 0 || c.theta > l + 1) throw UsageError("rep: no oscillator representation '" + rep + "' for " +
                                                          presentations::algebra_name(c.algebra));
    if (c.barred && !sl3) throw UsageError("barred oscillator representations need algebra sl3");
  } else {
    throw UsageError("rep: expected eval, eval-tau, thetaA or thetaA-bar, got '" + rep + "'");
  }

  const std::string lambda = raw.get("lambda").value_or("symbolic");
  if (lambda != "symbolic") {
    const auto v = parse_int_list("lambda", lambda);
    if (v.size() != static_cast<std::size_t>(l + 1))
      throw UsageError("lambda: " + presentations::algebra_name(c.algebra) + " needs " + std::to_string(l + 1) +
                       " integers");
    c.lambda = coeff::LambdaSpec::integers({v[0], v[1], sl3 ? v[2] : 0});
  }
  const std::string module = raw.get("module").value_or("verma");
  if (module == "finite") {
    if (c.rep == RepKind::Theta) throw UsageError("module finite applies to evaluation representations only");
    if (c.lambda.symbolic) throw UsageError("module finite needs an integer lambda");
    for (int i = 0; i < l; ++i)
      if (c.lambda.values[static_cast<std::size_t>(i)] < c.lambda.values[static_cast<std::size_t>(i + 1)])
        throw UsageError("module finite needs a dominant lambda (non-increasing entries)");
    c.finite = true;
  } else if (module != "verma") {
    throw UsageError("module: expected verma or finite, got '" + module + "'");
  }

  const bool big = sl3 && c.rep != RepKind::Theta;
  const bool fact = command == "factorize";
  c.M = raw.get("M") ? parse_int("M", *raw.get("M")) : fact ? 5 : big ? 9 : 8;
  c.N = raw.get("N") ? parse_int("N", *raw.get("N")) : fact ? 3 : big ? 9 : 5;
  c.degree = raw.get("degree") ? parse_int("degree", *raw.get("degree")) : big ? 3 : c.rep == RepKind::Theta ? 4 : 5;
  if (c.N < 1) throw UsageError("N must be at least 1");
  if (c.M < 1) throw UsageError("M must be at least 1");
  if (c.degree < 0) throw UsageError("degree must be non-negative");
  if (!c.finite && !fact && c.M < c.degree + 2)
    throw UsageError("M must be at least degree + 2 (M = " + std::to_string(c.M) +
                     ", degree = " + std::to_string(c.degree) + ")");

  if (const auto s = raw.get("s"); s && *s != "none") {
    c.s = parse_int_list("s", *s);
    if (c.s.size() != static_cast<std::size_t>(l + 1))
      throw UsageError("s: needs one exponent per node (" + std::to_string(l + 1) + ")");
  }
  const std::string format = raw.get("format").value_or("text");
  if (format == "json")
    c.format = Format::Json;
  else if (format == "csv")
    c.format = Format::Csv;
  else if (format == "text")
    c.format = Format::Text;
  else
    throw UsageError("format: expected json, csv or text, got '" + format + "'");
  if (const auto z = raw.get("zeta2_shift")) c.zeta2_shift = parse_int("zeta2_shift", *z);
  return c;
}

presentations::GeneratorImages build_images(const JobConfig& c, bool twisted) {
  using linop::WeightModule;
  presentations::GeneratorImages g;
  const bool sl3 = c.algebra == Algebra::Sl3;
  if (c.rep == RepKind::Theta) {
    g = sl3 ? presentations::theta_sl3(c.theta, c.barred, c.M) : presentations::theta_sl2(c.theta, c.M);
  } else {
    const auto& v = c.lambda.values;
    linop::ModulePtr m;
    if (sl3)
      m = c.finite ? WeightModule::finite_gl3({v[0], v[1], v[2]}) : WeightModule::verma_gl3(c.lambda, c.M);
    else
      m = c.finite ? WeightModule::finite_gl2({v[0], v[1]}) : WeightModule::verma_gl2(c.lambda, c.M);
    g = sl3 ? presentations::jimbo_sl3(m) : presentations::jimbo_sl2(m);
    if (c.rep == RepKind::EvalTau) g = presentations::twist_tau(g);
  }
  if (twisted && !c.s.empty()) g = presentations::spectral_twist(g, c.s, coeff::Var::zeta);
  return g;
}

}  // namespace qloop::jobs
