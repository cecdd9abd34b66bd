#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cec/report_io.hpp"
#include "doctest.h"

#ifndef CEC_CLI_PATH
#error "CEC_CLI_PATH must be defined"
#endif
#ifndef CEC_FIXTURE_DIR
#error "CEC_FIXTURE_DIR must be defined"
#endif

namespace {

namespace fs = std::filesystem;

const std::string kCli = CEC_CLI_PATH;
const std::string kFixtures = CEC_FIXTURE_DIR;

struct Invocation {
  int exit_code = -1;
  std::string out_path;
};

Invocation invoke(const std::string& args, const std::string& tag) {
  fs::path out = fs::temp_directory_path() / ("cec_test_" + tag + ".json");
  std::string cmd = kCli + " " + args + " --out " + out.string() +
                    " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), out.string()};
}

std::string example(int i) {
  return kFixtures + "/example" + std::to_string(i) + ".json";
}

}  // namespace

TEST_CASE("plan emits the expected loads and times") {
  auto inv = invoke("plan --scenario " + example(1), "plan1");
  REQUIRE(inv.exit_code == 0);
  auto steps = cec::report_from_json(cec::read_file(inv.out_path));
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].c_hat == cec::Rational(1, 6));
  CHECK(steps[1].c_hat == cec::Rational(1, 5));
  CHECK(steps[2].c_hat == cec::Rational(2, 7));
  CHECK(steps[3].c_hat == cec::Rational(1, 2));

  auto inv2 = invoke("plan --scenario " + example(2), "plan2");
  REQUIRE(inv2.exit_code == 0);
  auto steps2 = cec::report_from_json(cec::read_file(inv2.out_path));
  CHECK(steps2[0].mu.mu == std::vector<cec::Rational>{{8, 11},
                                                      {12, 11},
                                                      {16, 11},
                                                      {8, 11},
                                                      1,
                                                      1});
}

TEST_CASE("run verifies decode on both fixtures") {
  for (int i : {1, 2}) {
    auto inv = invoke("run --scenario " + example(i), "run" + std::to_string(i));
    REQUIRE(inv.exit_code == 0);
    for (const auto& st : cec::report_from_json(cec::read_file(inv.out_path)))
      CHECK(st.decode_ok);
  }
}

TEST_CASE("fault injection exits with the verification code") {
  auto inv = invoke("run --fault-inject --scenario " + example(2), "fault");
  CHECK(inv.exit_code == 3);
  auto steps = cec::report_from_json(cec::read_file(inv.out_path));
  CHECK_FALSE(steps[0].decode_ok);
}

TEST_CASE("malformed scenario exits 1") {
  fs::path bad = fs::temp_directory_path() / "cec_test_bad.json";
  std::ofstream(bad) << "{\"machines\": []}";
  auto inv = invoke("plan --scenario " + bad.string(), "bad");
  CHECK(inv.exit_code == 1);
}

TEST_CASE("infeasible step exits 2") {
  fs::path infeasible = fs::temp_directory_path() / "cec_test_infeasible.json";
  std::ofstream(infeasible) << R"({
    "machines": [{"id": 1, "speed": 1}, {"id": 2, "speed": 1},
                 {"id": 3, "speed": 1}],
    "code": {"L": 3, "q": 3, "r": 1},
    "timeline": [{"t": 1, "available": [1, 2]}]
  })";
  auto inv = invoke("plan --scenario " + infeasible.string(), "infeasible");
  CHECK(inv.exit_code == 2);
}

TEST_CASE("oracle agrees on the fixtures") {
  for (int i : {1, 2}) {
    auto inv = invoke("oracle --scenario " + example(i),
                      "oracle" + std::to_string(i));
    CHECK(inv.exit_code == 0);
  }
}

TEST_CASE("repeated runs produce byte-identical reports") {
  auto a = invoke("run --scenario " + example(1), "det_a");
  auto b = invoke("run --scenario " + example(1), "det_b");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(cec::read_file(a.out_path) == cec::read_file(b.out_path));
}

TEST_CASE("explicit matrix file is used and validated") {
  fs::path mat = fs::temp_directory_path() / "cec_test_matrix.txt";
  {
    std::ofstream f(mat);
    f << "66 4\n";
    for (int i = 0; i < 66 * 4; ++i) f << (i % 97) << ' ';
  }
  auto ok = invoke("run --scenario " + example(2) + " --matrix " + mat.string(),
                   "matrix_ok");
  CHECK(ok.exit_code == 0);

  fs::path wrong = fs::temp_directory_path() / "cec_test_matrix_wrong.txt";
  std::ofstream(wrong) << "2 2\n1 2 3 4\n";
  auto bad = invoke(
      "run --scenario " + example(2) + " --matrix " + wrong.string(),
      "matrix_bad");
  CHECK(bad.exit_code == 1);
}
