// Exercises the command-line tool end to end through a subprocess, checking
// the exit-code contract: 0 success, 1 verification failure, 2 invalid input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qgl21/serialize.hpp"

using qgl21::Field;
using qgl21::json;
using qgl21::load_document;
using qgl21::store_document;

namespace {

std::string g_binary;
int g_failures = 0;

#define REQUIRE(cond, msg)                                                     \
  do {                                                                         \
    if (!(cond)) {                                                             \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)    \
                << "\n";                                                       \
      ++g_failures;                                                            \
    }                                                                          \
  } while (0)

int run(const std::string& args, std::string* out = nullptr) {
  std::string cmd = g_binary + " " + args + " >/tmp/qgl21_cli_out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  if (out) {
    std::ifstream in("/tmp/qgl21_cli_out.txt");
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(rc);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-qgl21>\n";
    return 2;
  }
  g_binary = argv[1];

  std::string out;

  // classify
  REQUIRE(run("classify --hw 2,1,0", &out) == 0, "classify typical exits 0");
  REQUIRE(out.find("Typical (3, 1)") != std::string::npos, "typical output format: " + out);
  REQUIRE(run("classify --hw 2,1,-3", &out) == 0, "classify class1 exits 0");
  REQUIRE(out.find("Class1") != std::string::npos, "class1 label");
  REQUIRE(run("classify --hw 2,1,-1", &out) == 0, "classify class2 exits 0");
  REQUIRE(out.find("Class2") != std::string::npos, "class2 label");
  REQUIRE(run("classify --hw 0,1,0") == 2, "non-dominant classify exits 2");

  // build + verify on a module where the whole suite is green
  REQUIRE(run("build --hw 2,1,-3 --p 2 --q 3 --out /tmp/qgl21_c1.json", &out) == 0,
          "build exits 0");
  REQUIRE(out.find("dim\t8") != std::string::npos, "dimension echoed: " + out);
  REQUIRE(run("verify /tmp/qgl21_c1.json", &out) == 0, "verify green module exits 0: " + out);

  // invalid inputs exit 2
  REQUIRE(run("build --hw 0,1,0 --p 2 --q 3 --out /tmp/x.json") == 2, "non-dominant build");
  REQUIRE(run("build --hw 1,0,0 --p 2 --q 0.5 --out /tmp/x.json") == 2, "pq = 1 rejected");
  REQUIRE(run("build --hw 1,0,0 --p 2 --q 3 --a 0,1,1 --out /tmp/x.json") == 2,
          "zero constant rejected");
  REQUIRE(run("build --hw 2,1,0 --p 2 --q 3 --quotient --out /tmp/x.json") == 2,
          "quotient of typical rejected");

  // quotient build: class 2 of [1,0,0] has dimension 3
  REQUIRE(run("build --hw 1,0,0 --p 2 --q 3 --quotient --out /tmp/qgl21_q.json", &out) == 0,
          "quotient build exits 0");
  REQUIRE(out.find("quotient-class2") != std::string::npos, "kind echoed");
  REQUIRE(out.find("dim\t3") != std::string::npos, "quotient dimension: " + out);
  REQUIRE(run("verify /tmp/qgl21_q.json") == 0, "class-2 quotient of l=1/2 verifies");

  // verification failure paths: perturb one stored matrix entry by 1e-3
  {
    json doc = load_document("/tmp/qgl21_c1.json");
    std::string cell = doc["generators"]["E21"][1][0].get<std::string>();
    double v = std::stod(cell);
    doc["generators"]["E21"][1][0] = Field<double>::to_decimal(v + 1e-3);
    store_document(doc, "/tmp/qgl21_bad.json");
  }
  REQUIRE(run("verify /tmp/qgl21_bad.json") == 1, "perturbed document exits 1");

  {
    std::ifstream in("/tmp/qgl21_c1.json");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string doc = ss.str();
    std::ofstream outf("/tmp/qgl21_trunc.json");
    outf << doc.substr(0, doc.size() / 3);
  }
  REQUIRE(run("verify /tmp/qgl21_trunc.json") == 2, "truncated document exits 2");
  REQUIRE(run("verify /tmp/qgl21_missing.json") == 2, "missing file exits 2");

  // scan: the one-column tower is fully green and reproducible
  std::string scan1, scan2;
  REQUIRE(run("scan --lmax 0 --m33-range -2,2 --samples 3", &scan1) == 0,
          "l=0 scan passes: " + scan1);
  REQUIRE(run("scan --lmax 0 --m33-range -2,2 --samples 3", &scan2) == 0, "scan rerun");
  REQUIRE(scan1 == scan2, "seeded scan is reproducible line for line");
  REQUIRE(scan1.find("Class2") != std::string::npos, "scan sweeps across classes");
  REQUIRE(run("scan --lmax 0 --m33-range 2,-2 --samples 3") == 2, "empty range exits 2");
  REQUIRE(run("scan --lmax 0 --m33-range -1,1 --samples 0") == 2, "zero samples exits 2");

  // environment precision override
  REQUIRE(std::system((std::string("QGL_PRECISION=53 ") + g_binary +
                       " build --hw 1,0,0 --p 2 --q 3 --out /tmp/qgl21_d.json >/dev/null 2>&1")
                          .c_str()) == 0,
          "double-mode build via environment");
  {
    std::string got;
    run("verify /tmp/qgl21_d.json --tol 1e-6", &got);
    REQUIRE(got.find("1.000e-06") != std::string::npos, "tolerance override echoed");
  }

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cerr << "test_cli: " << g_failures << " failures\n";
  return 1;
}
