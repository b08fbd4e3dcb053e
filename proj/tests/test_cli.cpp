// End-to-end tests of the command-line tool: output formats, exit codes,
// determinism.  The binary path comes in via PMEANS_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "pmeans/format.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_file = "/tmp/pmeans_cli_test_out.txt";
  const std::string cmd =
      std::string(PMEANS_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

double field_value(const std::string& out, const std::string& key) {
  std::istringstream is(out);
  std::string name, value;
  while (is >> name >> value)
    if (name == key) return pmeans::parse_double(value);
  FAIL("missing field ", key, " in:\n", out);
  return 0.0;
}

}  // namespace

TEST_CASE("eval: values at 15 significant digits") {
  auto r = run("eval arcsin_p --p 2 --x 0.5");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "0.523598775598299");

  r = run("eval gamma --x 0.5");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(pmeans::parse_double(first_line(r.out)) - std::sqrt(M_PI)) <= 1e-14);

  r = run("eval hyp2f1 --a 1 --b 1 --c 2 --z 0.3");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(pmeans::parse_double(first_line(r.out)) + std::log(0.7) / 0.3) <= 1e-12);
}

TEST_CASE("eval --oracle prints cross-check and small discrepancy") {
  const auto oracle_discrepancy = [](const std::string& args) {
    const auto r = run(args + " --oracle");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line1, word, oracle_val, disc_label, disc;
    std::getline(is, line1);
    is >> word >> oracle_val >> disc_label >> disc;
    REQUIRE(word == "oracle");
    return std::fabs(pmeans::parse_double(disc));
  };
  CHECK(oracle_discrepancy("eval arctan_p --p 3 --x 0.8") <= 1e-10);
  CHECK(oracle_discrepancy("eval arcsin_p --p 4 --x 0.9") <= 1e-10);
  CHECK(oracle_discrepancy("eval arccos_p --p 3 --x 0.7") <= 1e-10);
  CHECK(oracle_discrepancy("eval arccosh_p --p 3 --x 1.5") <= 1e-10);
  CHECK(oracle_discrepancy("eval sin_p --p 3 --x 0.7") <= 1e-10);
  CHECK(oracle_discrepancy("eval gamma --x 1.25") <= 1e-10);
  CHECK(oracle_discrepancy("eval digamma --x 0.5") <= 1e-10);
  CHECK(oracle_discrepancy("eval beta --x 0.25 --y 1.75") <= 1e-10);
  CHECK(oracle_discrepancy("eval hyp2f1 --a 0.5 --b 0.25 --c 1.25 --z 0.7") <= 1e-10);
}

TEST_CASE("eval arctan_p at 1 matches the b_p constant") {
  const auto e = run("eval arctan_p --p 3 --x 1");
  const auto c = run("const --p 3");
  CHECK(e.exit_code == 0);
  CHECK(c.exit_code == 0);
  const double b3 = field_value(c.out, "b_p");
  CHECK(std::fabs(pmeans::parse_double(first_line(e.out)) - b3) <= 1e-12);
}

TEST_CASE("const: classical values, residuals, domain guard") {
  const auto r = run("const --p 2");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(field_value(r.out, "pi_p") - M_PI) <= 1e-13);
  CHECK(std::fabs(field_value(r.out, "b_p") - M_PI / 4) <= 1e-13);
  CHECK(std::fabs(field_value(r.out, "c_p") - std::log(1.0 + std::sqrt(2.0))) <= 1e-13);
  CHECK(field_value(r.out, "pi_residual") <= 1e-12);
  CHECK(field_value(r.out, "b_residual") <= 1e-12);
  CHECK(field_value(r.out, "c_residual") <= 1e-12);

  const auto r4 = run("const --p 4");
  CHECK(std::fabs(field_value(r4.out, "pi_p") - M_PI / std::sqrt(2.0)) <= 1e-12);

  CHECK(run("const --p 1.0").exit_code == 2);
}

TEST_CASE("means: table sorted ascending, a = b degenerate") {
  const auto r = run("means --p 2 --a 3 --b 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("TildeP_p 1.90985931710274") != std::string::npos);
  // ascending by value
  std::istringstream is(r.out);
  std::string line;
  double prev = -1.0;
  int rows = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string name, value;
    ls >> name >> value;
    const double v = pmeans::parse_double(value);
    CHECK(v >= prev);
    prev = v;
    ++rows;
  }
  CHECK(rows == 17);

  const auto req = run("means --p 2 --a 2 --b 2");
  std::istringstream eis(req.out);
  while (std::getline(eis, line)) {
    std::istringstream ls(line);
    std::string name, value;
    ls >> name >> value;
    CHECK(pmeans::parse_double(value) == 2.0);
  }

  // chain annotations appear in chain order
  const auto r3 = run("means --p 3 --a 4 --b 1");
  CHECK(r3.exit_code == 0);
  size_t pos = 0;
  for (const char* tag : {"chain[1]", "chain[2]", "chain[3]", "chain[4]", "chain[5]",
                          "chain[6]", "chain[7]"}) {
    const size_t found = r3.out.find(tag);
    CHECK(found != std::string::npos);
    CHECK(found >= pos);
    pos = found;
  }

  CHECK(run("means --p 2 --a 0 --b 1").exit_code == 2);
}

TEST_CASE("x0: value, residual, domain guard") {
  const auto r = run("x0 --p 2 --q 4");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(field_value(r.out, "x0") - std::sqrt(std::sqrt(2.0) - 1.0)) <= 1e-12);
  CHECK(field_value(r.out, "residual") <= 1e-12);

  const auto r23 = run("x0 --p 2 --q 3");
  CHECK(std::fabs(field_value(r23.out, "x0") - 0.5960716379833215) <= 1e-10);

  CHECK(run("x0 --p 4 --q 2").exit_code == 2);
}

TEST_CASE("verify: clean claim exits 0, 'none' is empty, T2b prints x0") {
  const auto r = run("verify --claims T1 --p 2:10:9 --x 0.01:0.99:99");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("total as-derived violations: 0") != std::string::npos);

  const auto rn = run("verify --claims none");
  CHECK(rn.exit_code == 0);

  const auto rb = run("verify --claims T2b --p 2 --q 4");
  CHECK(rb.exit_code == 0);
  CHECK(rb.out.find("0.643594252905") != std::string::npos);

  CHECK(run("verify --claims NOSUCH").exit_code == 2);
  CHECK(run("verify --claims T1 --p 2:bad:3").exit_code == 2);
}

TEST_CASE("verify: log-spaced ranges") {
  const auto r = run("verify --claims T1 --p 2:8:3 --log --x 0.5 --format csv "
                     "--out /tmp/pmeans_log.csv");
  CHECK(r.exit_code == 0);
  std::ifstream f("/tmp/pmeans_log.csv");
  std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(all.find("T1.1,as-derived,2,") != std::string::npos);
  CHECK(all.find("T1.1,as-derived,4,") != std::string::npos);  // log midpoint of 2..8
  CHECK(all.find("T1.1,as-derived,8,") != std::string::npos);
}

TEST_CASE("verify: as-printed violations warn but do not fail") {
  const auto r = run("verify --claims T4 --p 2:4:3 --x 0.1:0.9:5 --format csv "
                     "--out /tmp/pmeans_t4.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("warning:") != std::string::npos);
  std::ifstream f("/tmp/pmeans_t4.csv");
  std::string header;
  std::getline(f, header);
  CHECK(header == "claim_id,variant,p,q,a,b,x,lhs,rhs,margin,status");
}

TEST_CASE("verify: identical invocations produce byte-identical files") {
  const std::string args =
      "verify --claims T3,C6 --p 2:5:4 --x 0.05:0.95:7 --format json --out ";
  CHECK(run(args + "/tmp/pmeans_d1.json").exit_code == 0);
  CHECK(run(args + "/tmp/pmeans_d2.json").exit_code == 0);
  std::ifstream f1("/tmp/pmeans_d1.json"), f2("/tmp/pmeans_d2.json");
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(!s1.str().empty());
  CHECK(s1.str() == s2.str());
}

TEST_CASE("domain errors exit 2 with a message naming the precondition") {
  const auto r = run("eval arcsin_p --p 2 --x 1.5");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("requires x in [0,1]") != std::string::npos);

  const auto r2 = run("eval arctanh_p --p 3 --x 1.0");
  CHECK(r2.exit_code == 2);
  CHECK(r2.out.find("requires x in [0,1)") != std::string::npos);
}

TEST_CASE("PMEAN_TOL environment override is honored") {
  // with an absurdly large tolerance every margin collapses into the
  // equality band, so strict 'holds' rows disappear
  const std::string out_file = "/tmp/pmeans_tol.csv";
  const std::string cmd = std::string("PMEAN_TOL=1e9 ") + PMEANS_CLI_PATH +
                          " verify --claims T1 --p 3 --x 0.5 --format csv --out " +
                          out_file + " > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream f(out_file);
  std::string line;
  std::getline(f, line);  // header
  int rows = 0;
  while (std::getline(f, line)) {
    CHECK(line.find("holds-with-equality") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 6);
}
