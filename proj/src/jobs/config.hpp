#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coeff/qnumbers.hpp"
#include "lweights/lweights.hpp"
#include "presentations/presentations.hpp"

namespace qloop::jobs {

enum class Format { Json, Csv, Text };

/// Raw settings as key/value strings. Later assignments override earlier ones.
/// Keys: algebra, rep, lambda, module, M, N, degree, s, format, zeta2_shift.
class ConfigMap {
 public:
  /// UsageError on an unknown key.
  void set(const std::string& key, const std::string& value);
  /// `key = value` lines; `#` starts a comment; blank lines are ignored.
  /// UsageError on a malformed line, an unknown key, or a file without keys.
  void load_text(const std::string& text, const std::string& origin = "config");
  void load_file(const std::string& path);
  std::optional<std::string> get(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return values_; }

  static const std::vector<std::string>& keys();

 private:
  std::map<std::string, std::string> values_;
};

enum class RepKind { Eval, EvalTau, Theta };

/// Validated job configuration with defaults filled in.
struct JobConfig {
  presentations::Algebra algebra = presentations::Algebra::Sl2;
  RepKind rep = RepKind::Eval;
  int theta = 0;  // 1..3 for RepKind::Theta
  bool barred = false;
  coeff::LambdaSpec lambda = coeff::LambdaSpec::symbolic_markers();
  bool finite = false;
  int M = 0;
  int N = 0;
  int degree = 0;
  std::vector<int> s;  // empty: no spectral twist
  Format format = Format::Text;
  int zeta2_shift = 0;

  /// Catalog id of the configured representation, e.g. "sl3-theta1-bar".
  std::string catalog_id() const;
  std::string rep_name() const;
  bool has_minus() const { return rep != RepKind::Theta; }
  lweights::ReconstructionBounds bounds() const;
  /// Series order used for reconstruction: max(N, bounds total + 1).
  int reconstruction_order() const;
  /// Ordered (key, value) pairs as reported.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

/// Parses and validates. `command` selects command-specific defaults
/// (factorize defaults to sl3). UsageError on any invalid value.
JobConfig resolve_config(const ConfigMap& raw, const std::string& command);

/// The configured representation; the spectral twist by s is applied when
/// s is set and `twisted` is true (marker variable zeta).
presentations::GeneratorImages build_images(const JobConfig& c, bool twisted = true);

std::string format_name(Format f);

}  // namespace qloop::jobs
