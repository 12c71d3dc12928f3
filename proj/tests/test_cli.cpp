// Copyright 2026 The rqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "rqi/cli.hpp"
#include "rqi/json_io.hpp"

namespace rqi::cli {
namespace {

using io::json;
namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(testing::TempDir()) /
           ("rqi_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string write_matrix(const std::string& name, const ComplexMatrix& m) const {
    return write(name, io::dump(io::matrix_to_json(m)));
  }

  // Runs `make ...` and stores the spec in a file.
  std::string make_spec(const std::string& name, std::vector<std::string> args) const {
    args.insert(args.begin(), "make");
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, kOk) << r.err;
    return write(name, r.out);
  }

  fs::path dir_;
};

ComplexMatrix diag(double a, double b) {
  ComplexMatrix q = ComplexMatrix::Zero(2, 2);
  q(0, 0) = a;
  q(1, 1) = b;
  return q;
}

ComplexMatrix read_matrix(const std::string& text) {
  return io::matrix_from_json(json::parse(text));
}

TEST(ParseLists, Complex) {
  const auto v = parse_complex_list("i,1,-i,0.5-0.25i,-2,3e-1+1e1i, +i");
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v[0], Complex(0, 1));
  EXPECT_EQ(v[1], Complex(1, 0));
  EXPECT_EQ(v[2], Complex(0, -1));
  EXPECT_EQ(v[3], Complex(0.5, -0.25));
  EXPECT_EQ(v[4], Complex(-2, 0));
  EXPECT_EQ(v[5], Complex(0.3, 10));
  EXPECT_EQ(v[6], Complex(0, 1));
  EXPECT_THROW(parse_complex_list("1,x"), ParseError);
  EXPECT_THROW(parse_complex_list(""), ParseError);
  EXPECT_EQ(parse_real_list("0.7, 0.3"), (std::vector<double>{0.7, 0.3}));
}

TEST_F(CliTest, MakeSigmaXAtZeroIsIdentity) {
  const Result r = run_cli({"make", "sigmaxx", "--theta", "0", "--p1", "0.7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const ChannelSpec spec = io::spec_from_json(json::parse(r.out));
  EXPECT_EQ(spec.u(), ComplexMatrix::Identity(4, 4));
}

TEST_F(CliTest, MakeCirculantGolden) {
  const Result r = run_cli({"make", "circulant", "--n", "2", "--phases", "i,1,1,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const ChannelSpec spec = io::spec_from_json(json::parse(r.out));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 0) = Complex(0, 1);
  expected(2, 1) = 1.0;
  expected(3, 2) = 1.0;
  expected(0, 3) = 1.0;
  EXPECT_EQ(spec.u(), expected);
  EXPECT_EQ(*spec.beta_spectrum(), (std::vector<double>{0.7, 0.3}));
}

TEST_F(CliTest, MakeIsByteIdentical) {
  const Result a = run_cli({"make", "haar", "--n", "2", "--seed", "7"});
  const Result b = run_cli({"make", "haar", "--n", "2", "--seed", "7"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).at("seed"), 7);
  EXPECT_NE(a.out, run_cli({"make", "haar", "--n", "2", "--seed", "8"}).out);
  const Result c = run_cli({"make", "circulant", "--n", "3", "--seed", "4"});
  EXPECT_EQ(c.out, run_cli({"make", "circulant", "--n", "3", "--seed", "4"}).out);
  EXPECT_GE(json::parse(c.out).at("margin").get<double>(), 1e-3);
}

TEST_F(CliTest, MakeWritesOutFile) {
  const std::string out = path("spec.json");
  const Result r = run_cli({"make", "haar", "--n", "3", "--seed", "1", "--out", out});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(io::spec_from_json(io::read_json_file(out)).n(), 3);
}

TEST_F(CliTest, ApplyIdentity) {
  const std::string spec = make_spec("id.json", {"sigmaxx", "--theta", "0"});
  ComplexMatrix q = diag(0.6, 0.4);
  q(0, 1) = Complex(0.1, 0.2);
  q(1, 0) = Complex(0.1, -0.2);
  const Result r = run_cli({"apply", "--spec", spec, "--state", write_matrix("q.json", q)});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_LE(max_abs_diff(read_matrix(r.out), q), 1e-15);
}

TEST_F(CliTest, ApplySigmaXFixedFamily) {
  const std::string spec = make_spec("sx.json", {"sigmaxx", "--theta", "0.785398163397448", "--p1", "0.7"});
  ComplexMatrix q = diag(0.5, 0.5);
  q(0, 1) = q(1, 0) = 0.3;
  const Result r = run_cli({"apply", "--spec", spec, "--state", write_matrix("q.json", q)});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_LE(max_abs_diff(read_matrix(r.out), q), 1e-12);
}

TEST_F(CliTest, ApplyCirculantDiagonal) {
  const std::string spec = make_spec("c.json", {"circulant", "--n", "2", "--phases", "i,1,1,1"});
  const Result r = run_cli({"apply", "--spec", spec, "--state", write_matrix("q.json", diag(1, 0))});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_LE(max_abs_diff(read_matrix(r.out), diag(0.7, 0.3)), 1e-15);
}

TEST_F(CliTest, AnalyzeExamples) {
  const Result circ = run_cli({"analyze", "--spec", make_spec("c.json", {"circulant", "--n", "3", "--seed", "1"})});
  ASSERT_EQ(circ.code, kOk) << circ.err;
  const json jc = json::parse(circ.out);
  EXPECT_TRUE(jc.at("unique").get<bool>());
  EXPECT_LE(max_abs_diff(io::matrix_from_json(jc.at("fixed_density")),
                         ComplexMatrix::Identity(3, 3) / 3.0),
            1e-10);

  const Result sx = run_cli({"analyze", "--dim2", "--spec",
                             make_spec("sx.json", {"sigmaxx", "--theta", "0.785398163397448"})});
  ASSERT_EQ(sx.code, kOk) << sx.err;
  const json js = json::parse(sx.out);
  EXPECT_FALSE(js.at("unique").get<bool>());
  EXPECT_EQ(js.at("kernel_dim"), 2);
  EXPECT_FALSE(js.at("dim2").at("unique").get<bool>());
  EXPECT_TRUE(js.at("dim2").at("fixed_point").is_null());

  const Result id = run_cli({"analyze", "--spec", make_spec("id.json", {"sigmaxx", "--theta", "0"})});
  ASSERT_EQ(id.code, kOk);
  EXPECT_EQ(json::parse(id.out).at("kernel_dim"), 4);
}

TEST_F(CliTest, AnalyzeDim2Golden) {
  const Result r = run_cli({"analyze", "--dim2", "--spec",
                            make_spec("c.json", {"circulant", "--n", "2", "--phases", "i,1,1,1"})});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json d = json::parse(r.out).at("dim2");
  EXPECT_TRUE(d.at("unique").get<bool>());
  EXPECT_TRUE(d.at("z0").is_null());
  EXPECT_NEAR(d.at("detReal").get<double>(), 1.4, 1e-12);
  EXPECT_LE(max_abs_diff(io::matrix_from_json(d.at("fixed_point")), diag(0.5, 0.5)), 1e-12);
}

TEST_F(CliTest, SweepSummaryAndCsv) {
  const std::string csv = path("rows.csv");
  const Result r = run_cli({"sweep", "--n", "2", "--samples", "50", "--seed", "3", "--csv", csv});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json s = json::parse(r.out);
  EXPECT_EQ(s.at("samples"), 50);
  EXPECT_EQ(s.at("seed"), 3);
  EXPECT_DOUBLE_EQ(s.at("unique_fraction").get<double>(), 1.0);
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 51);
  EXPECT_EQ(r.out, run_cli({"sweep", "--n", "2", "--samples", "50", "--seed", "3", "--threads", "1"}).out);
}

TEST_F(CliTest, IterateExamples) {
  const std::string circ = make_spec("c.json", {"circulant", "--n", "2", "--seed", "2"});
  const Result a = run_cli({"iterate", "--spec", circ, "--state", write_matrix("q.json", diag(1, 0)),
                            "--steps", "10000"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_NE(a.err.find("converged=true"), std::string::npos);

  const std::string swap = make_spec("sx.json", {"sigmaxx", "--theta", "1.5707963267948966"});
  const Result b = run_cli({"iterate", "--spec", swap, "--state", path("q.json"), "--steps", "20"});
  ASSERT_EQ(b.code, kOk) << b.err;
  EXPECT_NE(b.err.find("converged=false steps=20"), std::string::npos);
  EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "step,delta,trace,min_eigenvalue");

  const Result fixed = run_cli({"iterate", "--spec", circ, "--state",
                                write_matrix("mixed.json", diag(0.5, 0.5))});
  EXPECT_NE(fixed.err.find("converged=true steps=1"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kParseError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kParseError);
  EXPECT_EQ(run_cli({"apply", "--spec", path("missing.json"), "--state", path("missing.json")}).code,
            kParseError);
  const std::string garbage = write("garbage.json", "{\"n\": 2,");
  EXPECT_EQ(run_cli({"analyze", "--spec", garbage}).code, kParseError);
  EXPECT_EQ(run_cli({"make", "circulant", "--n", "2", "--phases", "i,1,q,1"}).code, kParseError);

  json spec = json::parse(run_cli({"make", "haar", "--n", "2", "--seed", "1"}).out);
  spec["U"]["entries"][0] = {3, 0};
  const std::string bad_u = write("bad_u.json", spec.dump());
  EXPECT_EQ(run_cli({"analyze", "--spec", bad_u}).code, kValidationError);

  const std::string good = make_spec("good.json", {"haar", "--n", "2", "--seed", "1"});
  const std::string bad_q = write_matrix("bad_q.json", diag(1.2, -0.2));
  EXPECT_EQ(run_cli({"apply", "--spec", good, "--state", bad_q}).code, kValidationError);
  EXPECT_EQ(run_cli({"make", "sigmaxx", "--p1", "1.5"}).code, kValidationError);
  EXPECT_EQ(run_cli({"analyze", "--dim2", "--spec",
                     make_spec("n3.json", {"haar", "--n", "3", "--seed", "1"})}).code,
            kValidationError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, BinaryRerunsAreByteIdentical) {
  const std::string bin = RQI_CLI_PATH;
  const std::string a = path("a.json"), b = path("b.json");
  for (const std::string& out : {a, b}) {
    const std::string cmd = bin + " make circulant --n 4 --seed 11 --out " + out;
    ASSERT_EQ(std::system(cmd.c_str()), 0);
  }
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  const std::string bad = bin + " analyze --spec " + path("none.json") + " 2>/dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kParseError);
}

}  // namespace
}  // namespace rqi::cli
