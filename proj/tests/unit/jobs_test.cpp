#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "jobs/commands.hpp"
#include "lweights/catalog.hpp"
#include "test_support.hpp"

using namespace qloop;
using namespace qloop::jobs;

namespace {

JobConfig config(std::initializer_list<std::pair<std::string, std::string>> kv, const std::string& command = "verify") {
  ConfigMap m;
  for (const auto& [k, v] : kv) m.set(k, v);
  return resolve_config(m, command);
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Minimal RFC 4180 reader for one line without embedded newlines.
std::vector<std::string> read_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

}  // namespace

TEST(Config, ParsesFileGrammar) {
  ConfigMap m;
  m.load_text("# sl3 run\nalgebra = sl3\n\n rep=theta2   # trailing comment\nM = 7\n");
  EXPECT_EQ(m.get("algebra"), "sl3");
  EXPECT_EQ(m.get("rep"), "theta2");
  EXPECT_EQ(m.get("M"), "7");
  EXPECT_FALSE(m.get("N"));
}

TEST(Config, RejectsBadFiles) {
  ConfigMap m;
  EXPECT_THROW(m.load_text(""), UsageError);
  EXPECT_THROW(m.load_text("# only a comment\n\n"), UsageError);
  EXPECT_THROW(m.load_text("algebra sl3\n"), UsageError);
  EXPECT_THROW(m.load_text("colour = red\n"), UsageError);
  EXPECT_THROW(m.load_file("/nonexistent/qloop.cfg"), UsageError);
}

TEST(Config, Defaults) {
  const JobConfig a = config({});
  EXPECT_EQ(a.catalog_id(), "sl2-eval");
  EXPECT_EQ(a.M, 8);
  EXPECT_EQ(a.N, 5);
  EXPECT_EQ(a.degree, 5);
  const JobConfig b = config({{"algebra", "sl3"}});
  EXPECT_EQ(b.M, 9);
  EXPECT_EQ(b.N, 9);
  EXPECT_EQ(b.degree, 3);
  EXPECT_EQ(b.reconstruction_order(), 9);
  const JobConfig c = config({{"algebra", "sl3"}, {"rep", "theta1-bar"}});
  EXPECT_EQ(c.catalog_id(), "sl3-theta1-bar");
  EXPECT_FALSE(c.has_minus());
  const JobConfig f = config({}, "factorize");
  EXPECT_EQ(f.algebra, presentations::Algebra::Sl3);
  EXPECT_EQ(f.M, 5);
  EXPECT_EQ(f.N, 3);
}

TEST(Config, ReconstructionOrderCoversTheBounds) {
  const JobConfig a = config({{"N", "2"}});
  EXPECT_EQ(a.N, 2);
  EXPECT_EQ(a.reconstruction_order(), 5);
}

TEST(Config, Validation) {
  EXPECT_THROW(config({{"algebra", "sl4"}}), UsageError);
  EXPECT_THROW(config({{"rep", "eval-tau"}}), UsageError);
  EXPECT_THROW(config({{"rep", "theta3"}}), UsageError);
  EXPECT_THROW(config({{"rep", "theta1-bar"}}), UsageError);
  EXPECT_THROW(config({{"algebra", "sl3"}, {"rep", "theta4"}}), UsageError);
  EXPECT_THROW(config({{"N", "0"}}), UsageError);
  EXPECT_THROW(config({{"N", "3x"}}), UsageError);
  EXPECT_THROW(config({{"M", "4"}, {"degree", "3"}}), UsageError);
  EXPECT_THROW(config({{"lambda", "1,2,3"}}), UsageError);
  EXPECT_THROW(config({{"module", "finite"}}), UsageError);
  EXPECT_THROW(config({{"module", "finite"}, {"lambda", "0,2"}}), UsageError);
  EXPECT_THROW(config({{"s", "1,2,3"}}), UsageError);
  EXPECT_THROW(config({{"format", "xml"}}), UsageError);
  EXPECT_THROW(config({{"algebra", "sl2"}}, "factorize"), UsageError);
  EXPECT_NO_THROW(config({{"module", "finite"}, {"lambda", "2,0"}, {"M", "1"}}));
}

TEST(Report, FormatsAgree) {
  Report r;
  r.command = "verify";
  r.config = {{"algebra", "sl2"}};
  r.add("a", "ref-a", Status::Pass);
  r.add("b, quoted \"x\"", "ref-b", Status::Documented, "printed 1; computed q");
  r.tables.push_back({"t", {"x", "y"}, {{"1", "(1 - q*u)"}}});
  EXPECT_TRUE(r.passed());

  const auto j = nlohmann::json::parse(render_json(r));
  EXPECT_EQ(j["schema"], Report::kSchemaVersion);
  EXPECT_EQ(j["checks"][1]["id"], "b, quoted \"x\"");
  EXPECT_EQ(j["checks"][1]["status"], "documented-discrepancy");
  EXPECT_EQ(j["tables"][0]["rows"][0][1], "(1 - q*u)");
  EXPECT_TRUE(j["passed"].get<bool>());

  const auto lines = split_lines(render_csv(r));
  const auto at = std::find(lines.begin(), lines.end(), "# table: checks");
  ASSERT_NE(at, lines.end());
  EXPECT_EQ(read_csv_line(*(at + 1)), (std::vector<std::string>{"id", "ref", "status", "detail"}));
  EXPECT_EQ(read_csv_line(*(at + 3))[0], "b, quoted \"x\"");
  EXPECT_NE(std::find(lines.begin(), lines.end(), "# table: t"), lines.end());

  const std::string text = render_text(r);
  EXPECT_NE(text.find("✓ ref-a a"), std::string::npos);
  EXPECT_NE(text.find("documented discrepancy"), std::string::npos);

  r.add("c", "ref-c", Status::Fail, "boom");
  EXPECT_FALSE(r.passed());
  EXPECT_NE(render_text(r).find("✗ ref-c c: boom"), std::string::npos);
}

TEST(Commands, VerifySl2Evaluation) {
  const Report r = cmd_verify(config({{"M", "8"}, {"N", "4"}}));
  EXPECT_TRUE(r.passed());
  std::size_t catalog = 0, twopath = 0, drinfeld = 0;
  for (const auto& c : r.checks) {
    catalog += c.ref == "sl2-eval" && c.status == Status::Pass;
    twopath += c.ref == "two-path-phi" && c.status == Status::Pass;
    drinfeld += c.ref == "drinfeld-relations";
  }
  EXPECT_EQ(catalog, 6u);
  EXPECT_EQ(twopath, 2u);
  EXPECT_GT(drinfeld, 0u);
}

TEST(Commands, VerifySl3Theta2) {
  const Report r = cmd_verify(config({{"algebra", "sl3"}, {"rep", "theta2"}}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count(Status::Fail), 0u);
  EXPECT_GE(r.count(Status::Pass), 15u);
}

TEST(Commands, Sl2Theta2PrefactorIsADocumentedDiscrepancy) {
  const Report r = cmd_verify(config({{"rep", "theta2"}}));
  EXPECT_TRUE(r.passed());
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [](const Check& c) { return c.id == "sl2-theta2-prefactor"; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_EQ(it->status, Status::Documented);
}

TEST(Commands, SpectralTwistConfig) {
  const Report r = cmd_verify(config({{"algebra", "sl3"}, {"rep", "theta1"}, {"s", "0,1,1"}, {"degree", "2"}}));
  EXPECT_TRUE(r.passed()) << render_text(r);
}

TEST(Commands, LweightsTableTheta3) {
  const Report r = cmd_lweights(config({{"algebra", "sl3"}, {"rep", "theta3"}, {"degree", "1"}}));
  ASSERT_EQ(r.tables.size(), 1u);
  const Table& t = r.tables[0];
  ASSERT_GE(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "(0,0)");
  EXPECT_EQ(t.rows[0][3], "1");
  EXPECT_EQ(t.rows[1][3], "(1 - q*u)");
  EXPECT_EQ(t.rows[0][4], "sl3-theta3");
}

// Psi strings in the tables parse back, through the field grammar, to the
// same rational function of u.
TEST(Commands, LweightsRoundTripThroughTheGrammar) {
  const JobConfig c = config({{"degree", "2"}});
  const Report r = cmd_lweights(c);
  const auto j = nlohmann::json::parse(render_json(r));
  const auto& rows = j["tables"][0]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const int m = static_cast<int>(k);
    const auto cf = lweights::closed_form("sl2-eval", {m});
    const coeff::Field u = coeff::Field::var(coeff::Var::u);
    auto as_field = [&](const lweights::FactoredRational& f, bool minus) {
      coeff::Field out = f.constant;
      for (const auto& x : f.factors) out *= (coeff::Field(1) - x.a * (minus ? u.inverse() : u)).pow(x.power);
      return out;
    };
    EXPECT_EQ(coeff::parse_field(rows[k][3].get<std::string>()), as_field(cf.plus[0], false)) << k;
    EXPECT_EQ(coeff::parse_field(rows[k][4].get<std::string>()), as_field(cf.minus[0], true)) << k;
  }
}

TEST(Commands, FactorizeDefault) {
  const Report r = cmd_factorize(config({}, "factorize"));
  EXPECT_TRUE(r.passed()) << render_text(r);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.id == "shift values"; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_EQ(it->detail, "match: xi(h1) = -lambda1+lambda2-2, xi(h2) = -lambda2+lambda3-2");
}

TEST(Commands, FactorizePerturbedZeta2Fails) {
  const Report r = cmd_factorize(config({{"zeta2_shift", "1"}}, "factorize"));
  EXPECT_FALSE(r.passed());
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.status == Status::Fail; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_EQ(it->detail.rfind("mismatch at node 1", 0), 0u) << it->detail;
}

TEST(Commands, FactorizeIntegerLambda) {
  const Report r = cmd_factorize(config({{"lambda", "5,2,1"}}, "factorize"));
  EXPECT_TRUE(r.passed());
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.id == "shift values"; });
  ASSERT_NE(it, r.checks.end());
  EXPECT_EQ(it->detail, "match: xi(h1) = -5, xi(h2) = -3");
}

TEST(Commands, Deterministic) {
  const JobConfig c = config({{"algebra", "sl3"}, {"rep", "theta1"}, {"format", "json"}});
  EXPECT_EQ(render_json(cmd_verify(c)), render_json(cmd_verify(c)));
  EXPECT_EQ(render_csv(cmd_lweights(c)), render_csv(cmd_lweights(c)));
}

TEST(Commands, LedgerAndDispatch) {
  const Report r = run_command("ledger", config({}));
  ASSERT_EQ(r.tables.size(), 1u);
  EXPECT_EQ(r.tables[0].rows.size(), lweights::typo_ledger().size());
  EXPECT_THROW(run_command("plot", config({})), UsageError);
}
