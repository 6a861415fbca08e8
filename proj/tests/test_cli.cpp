#include "chern/cli.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = chern::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kTableZ =
    "monomial\tZ\tN\n"
    "c5\t6\t6\n"
    "c1^5\t4374\t-18\n"
    "c1^3c2\t2106\t-6\n"
    "c1^2c3\t594\t18\n"
    "c1c4\t90\t18\n"
    "c1c2^2\t1014\t-2\n"
    "c2c3\t286\t6\n";

constexpr const char* kTableQ =
    "monomial\tQ\tPTS6\tPTstarS6\tX\n"
    "c5\t6\t6\t6\t6\n"
    "c1^5\t6250\t-486\t486\t-2\n"
    "c1^3c2\t2750\t-162\t162\t2\n"
    "c1^2c3\t650\t18\t18\t2\n"
    "c1c4\t90\t18\t18\t-6\n"
    "c1c2^2\t1210\t-54\t54\t-2\n"
    "c2c3\t286\t6\t6\t-2\n";

constexpr const char* kRigidityTsv =
    "d\tverdict\tfail_reason\tpontryagin_lhs\ttodd_rhs\n"
    "1\tfail\ttodd_vs_pontryagin_mismatch\t90\t1530\n"
    "3\tpass\t-\t594\t594\n"
    "-1\tfail\ttodd_vs_pontryagin_mismatch\t90\t1530\n"
    "-3\tfail\ttodd_vs_pontryagin_mismatch\t-414\t2466\n"
    "-5\tfail\ttodd_vs_pontryagin_mismatch\t-6750\t14850\n"
    "-9\tfail\tmod27_obstruction\t-131670\t262890\n"
    "-15\tfail\tintegrality_failure\t-1703430\t3398490\n"
    "-45\tfail\tmod27_obstruction\t-415051470\t829831410\n";

}  // namespace

TEST_CASE("table z reproduces the first table byte for byte") {
  RunResult first = run_cli({"table", "z", "--format", "tsv"});
  CHECK(first.code == 0);
  CHECK(first.out == kTableZ);
  RunResult second = run_cli({"table", "z", "--format", "tsv"});
  CHECK(second.out == first.out);
}

TEST_CASE("table q reproduces the second table byte for byte") {
  RunResult r = run_cli({"table", "q", "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out == kTableQ);
}

TEST_CASE("rigidity table in tsv") {
  RunResult r = run_cli({"rigidity", "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out == kRigidityTsv);
}

TEST_CASE("rigidity text output names the survivor") {
  RunResult r = run_cli({"rigidity"});
  CHECK(r.code == 0);
  CHECK(r.out.find("survivors: 3") != std::string::npos);
  CHECK(r.out.find("index_bound_excluded") != std::string::npos);
  CHECK(r.out.find("note (d = -3)") != std::string::npos);
}

TEST_CASE("chern and numbers subcommands") {
  RunResult r = run_cli({"chern", "Z"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c(Z) = 1 + 3*L + 13/3*L^2 + 11/3*L^3 + 5/3*L^4 + 1/3*L^5") !=
        std::string::npos);
  RunResult n = run_cli({"numbers", "X", "--format", "tsv"});
  CHECK(n.code == 0);
  CHECK(n.out ==
        "monomial\tX\n"
        "c5\t6\n"
        "c1^5\t-2\n"
        "c1^3c2\t2\n"
        "c1^2c3\t2\n"
        "c1c4\t-6\n"
        "c1c2^2\t-2\n"
        "c2c3\t-2\n");
  RunResult bad = run_cli({"numbers", "S6"});
  CHECK(bad.code == 1);
}

TEST_CASE("eval subcommand") {
  RunResult r = run_cli({"eval", "c1^2*c3", "--space", "PTS6"});
  CHECK(r.code == 0);
  CHECK(r.out == "number: 18\n");
  RunResult e = run_cli({"eval", "c1^0", "--space", "X"});
  CHECK(e.code == 0);
  CHECK(e.out == "element: 1\n");
  RunResult bad = run_cli({"eval", "c1^2*(", "--space", "X"});
  CHECK(bad.code == 2);
}

TEST_CASE("flip subcommand") {
  RunResult r = run_cli({"flip", "Q", "--fiber", "1+3*h+3*h^2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("matches X") != std::string::npos);
  RunResult n = run_cli({"flip", "Z", "--fiber", "1+L"});
  CHECK(n.code == 0);
  CHECK(n.out.find("orientation -1") != std::string::npos);
  CHECK(n.out.find("matches N") != std::string::npos);
  RunResult bad = run_cli({"flip", "Q", "--fiber", "1+h+3*h^2"});
  CHECK(bad.code == 3);
}

TEST_CASE("square subcommand") {
  RunResult r = run_cli({"square"});
  CHECK(r.code == 0);
  CHECK(r.out.find("square commutes") != std::string::npos);
  CHECK(r.out.find("matches PTS6") != std::string::npos);
  CHECK(r.out.find("matches PTstarS6") != std::string::npos);
}

TEST_CASE("hilbert subcommand") {
  RunResult r = run_cli({"hilbert", "--samples", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3/20*r^5 + 9/8*r^4 + 10/3*r^3 + 39/8*r^2 + 211/60*r + 1") !=
        std::string::npos);
  CHECK(r.out.find("product form (r+2)(3r+5)(2r+3)(3r+4)(r+1)/120: equal") !=
        std::string::npos);
  CHECK(r.out.find("c1^5 from the r^5 coefficient: 4374") != std::string::npos);
  CHECK(r.out.find("c1^3c2 from the r^3 coefficient: 2106") != std::string::npos);
  CHECK(r.out.find(" 1 14 77") != std::string::npos);
}

TEST_CASE("audit subcommand") {
  RunResult r = run_cli({"audit"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ch2(Z) = 1/6*L^2") != std::string::npos);
  CHECK(r.out.find("refuted") != std::string::npos);
  CHECK(r.out.find("c1^5(Z) = 4374 = 18*3^5") != std::string::npos);
  CHECK(r.out.find("4373") != std::string::npos);
  CHECK(r.out.find("PTS6 Chern numbers are c3(S6) = 2 times (3, -243, -81, 9, 9, -27, 3)") !=
        std::string::npos);
  CHECK(r.out.find("PTstarS6 Chern numbers are c3(S6) = 2 times (3, 243, 81, 9, 9, 27, 3)") !=
        std::string::npos);
  CHECK(r.out.find("audit: ok") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"table", "w"}).code == 1);
  CHECK(run_cli({"eval", "1+", "--space", "Z"}).code == 2);

  // a defs file that contradicts the computed catalogue exits with 3
  const char* path = "bad_defs_for_test.spaces";
  {
    std::ofstream f(path);
    f << "space Z {\n"
         "  generator L : 2;\n"
         "  relation L^6 = 0;\n"
         "  lattice 4 : 1/3*L^2;\n"
         "  lattice 6 : 1/6*L^3;\n"
         "  lattice 8 : 1/18*L^4;\n"
         "  lattice 10 : 1/18*L^5;\n"
         "  fundamental L^5 = 18;\n"
         "  orientation +1;\n"
         "  chern 1 + 4*L;\n"
         "}\n";
  }
  RunResult bad = run_cli({"--defs", path, "chern", "Z"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("check_failed") != std::string::npos);
  std::remove(path);

  const char* garbled = "garbled_defs_for_test.spaces";
  {
    std::ofstream f(garbled);
    f << "space { oops\n";
  }
  RunResult parse_fail = run_cli({"--defs", garbled, "spaces"});
  CHECK(parse_fail.code == 2);
  std::remove(garbled);
}

TEST_CASE("custom definition files add usable spaces") {
  const char* path = "extra_defs_for_test.spaces";
  {
    std::ofstream f(path);
    // a five-fold with the projective-space classes
    f << "space P5 {\n"
         "  generator t : 2;\n"
         "  relation t^6 = 0;\n"
         "  fundamental t^5 = 1;\n"
         "  orientation +1;\n"
         "  chern (1 + t)^6;\n"
         "}\n";
  }
  RunResult chern = run_cli({"--defs", path, "chern", "P5"});
  CHECK(chern.code == 0);
  CHECK(chern.out.find("6*t + 15*t^2 + 20*t^3 + 15*t^4 + 6*t^5") != std::string::npos);
  RunResult numbers = run_cli({"--defs", path, "numbers", "P5", "--format", "tsv"});
  CHECK(numbers.code == 0);
  // c5 is the Euler characteristic of complex projective 5-space
  CHECK(numbers.out.find("c5\t6\n") != std::string::npos);
  CHECK(numbers.out.find("c1^5\t7776\n") != std::string::npos);
  RunResult eval = run_cli({"--defs", path, "eval", "c1*c4", "--space", "P5"});
  CHECK(eval.code == 0);
  CHECK(eval.out == "number: 90\n");
  std::remove(path);
}

TEST_CASE("spaces subcommand lists the catalogue") {
  RunResult r = run_cli({"spaces"});
  CHECK(r.code == 0);
  for (const char* name : {"CP6:", "S6:", "Q:", "PTS6:", "PTstarS6:", "X:", "Z:", "N:", "M:"})
    CHECK(r.out.find(name) != std::string::npos);
}
