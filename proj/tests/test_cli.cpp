#include <gtest/gtest.h>

#include <lrbt/adi.hpp>
#include <lrbt/io.hpp>
#include <lrbt/loewner.hpp>

#include <filesystem>
#include <sstream>

#include "check.hpp"
#include "cli.hpp"
#include "example_system.hpp"

using namespace lrbt;
using namespace lrbt::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kData = LRBT_DATA_DIR "/example8";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lrbt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string model() const { return (kData / "model.json").string(); }
  std::string shifts() const { return (kData / "shifts.json").string(); }
  std::string samples() {
    auto s = path("samples.json");
    if (!fs::exists(s)) EXPECT_EQ(run({"sample", "--model", model(), "--shifts", shifts(), "--out", s}).code, 0);
    return s;
  }
  std::size_t file_count() const {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir_), fs::directory_iterator()));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, HsvToStdout) {
  auto r = run({"hsv", "--model", model()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"hsv\""), std::string::npos);
  EXPECT_NE(r.out.find("24.40"), std::string::npos) << r.out;
}

TEST_F(Cli, HsvErrors) {
  auto missing = run({"hsv", "--model", path("nope.json"), "--out", path("h.json")});
  EXPECT_EQ(missing.code, cli::kExitValidation);
  EXPECT_NE(missing.err.find("nope.json"), std::string::npos);

  io::write_file_atomic(path("singular.json"), R"({"E": [[0, 0], [0, 0]], "A": [[-1, 0], [0, -1]], "B": [[1], [1]], "C": [[1, 1]]})");
  EXPECT_EQ(run({"hsv", "--model", path("singular.json"), "--out", path("h.json")}).code, cli::kExitValidation);

  io::write_file_atomic(path("unstable.json"), R"({"E": [[1]], "A": [[0.5]], "B": [[1]], "C": [[1]]})");
  EXPECT_EQ(run({"hsv", "--model", path("unstable.json"), "--out", path("h.json")}).code, cli::kExitNumerical);
  EXPECT_FALSE(fs::exists(path("h.json")));
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitValidation);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"reduce", "--method", "xx", "--out", path("r.json")}).code, cli::kExitValidation);
  EXPECT_EQ(run({"reduce", "--method", "dd", "--order", "3", "--out", path("r.json")}).code, cli::kExitValidation);
  EXPECT_EQ(file_count(), 0u);
}

TEST_F(Cli, SampleWritesFivePoints) {
  auto ds = io::load_samples(samples());
  EXPECT_EQ(ds.size(), 5u);
  EXPECT_EQ(ds.outputs(), 2);
  EXPECT_EQ(ds.inputs(), 3);
}

TEST_F(Cli, SampleWithCoincidentShifts) {
  io::write_file_atomic(path("sh.json"), R"({"alphas": [[-1, 0], [-2, 0]], "betas": [[-1, 0], [-2, 0], [-3, 0]]})");
  ASSERT_EQ(run({"sample", "--model", model(), "--shifts", path("sh.json"), "--out", path("s.json")}).code, 0);
  auto ds = io::load_samples(path("s.json"));
  EXPECT_EQ(ds.size(), 3u);
  EXPECT_TRUE(dataset_lookup(ds, 1.0, true).derivative);
  EXPECT_TRUE(dataset_lookup(ds, 2.0, true).derivative);
  EXPECT_FALSE(dataset_lookup(ds, 3.0).derivative);
}

TEST_F(Cli, SamplePoleHit) {
  io::write_file_atomic(path("m.json"), R"({"E": [[1]], "A": [[1]], "B": [[1]], "C": [[1]]})");
  io::write_file_atomic(path("sh.json"), R"({"alphas": [[-1, 0]], "betas": [[-2, 0]]})");
  auto r = run({"sample", "--model", path("m.json"), "--shifts", path("sh.json"), "--out", path("s.json")});
  EXPECT_EQ(r.code, cli::kExitNumerical) << r.err;
  EXPECT_FALSE(fs::exists(path("s.json")));
}

TEST_F(Cli, ReduceAllMethods) {
  auto s = samples();
  ASSERT_EQ(run({"reduce", "--method", "dd", "--samples", s, "--shifts", shifts(), "--order", "3",
                 "--out", path("dd.json"), "--interim-out", path("interim.json")}).code, 0);
  ASSERT_EQ(run({"reduce", "--method", "adi", "--model", model(), "--shifts", shifts(), "--order", "3",
                 "--out", path("adi.json")}).code, 0);
  ASSERT_EQ(run({"reduce", "--method", "bt", "--model", model(), "--order", "8", "--out", path("bt.json")}).code, 0);

  auto dd = io::load_model(path("dd.json"));
  auto adi = io::load_model(path("adi.json"));
  EXPECT_EQ(dd.order(), 3);
  auto grid = random_check_points(10, 1);
  EXPECT_LT(max_transfer_gap(dd, adi, grid), 1e-8);
  EXPECT_LT(max_transfer_gap(io::load_model(path("bt.json")), example_system(), grid), 1e-8);

  auto interim = io::parse_interim(io::read_file(path("interim.json")));
  EXPECT_EQ(interim.realization.order(), 6);

  auto cmp = run({"compare", "--a", path("dd.json"), "--b", path("adi.json"), "--out", path("cmp.json")});
  ASSERT_EQ(cmp.code, 0) << cmp.err;
  EXPECT_NE(io::read_file(path("cmp.json")).find("\"max_deviation\""), std::string::npos);
}

TEST_F(Cli, ReduceRankDeficientWritesNothing) {
  auto s = samples();
  auto before = file_count();
  auto r = run({"reduce", "--method", "dd", "--samples", s, "--shifts", shifts(), "--order", "7",
                "--out", path("dd.json"), "--interim-out", path("interim.json")});
  EXPECT_EQ(r.code, cli::kExitNumerical);
  EXPECT_NE(r.err.find("RankDeficient"), std::string::npos) << r.err;
  EXPECT_EQ(file_count(), before);
}

TEST_F(Cli, ReduceWithTolerance) {
  auto s = samples();
  ASSERT_EQ(run({"reduce", "--method", "dd", "--samples", s, "--shifts", shifts(), "--tol", "0.1",
                 "--out", path("dd.json")}).code, 0);
  EXPECT_EQ(io::load_model(path("dd.json")).order(), 3);
}

TEST_F(Cli, HsvEstimates) {
  auto s = samples();
  auto r = run({"hsv-est", "--samples", s, "--shifts", shifts(), "--out", path("est.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto text = io::read_file(path("est.json"));
  EXPECT_NE(text.find("\"hsv_estimates\""), std::string::npos);

  auto id = run({"hsv-est", "--samples", s, "--shifts", shifts(), "--identity-factors"});
  ASSERT_EQ(id.code, 0) << id.err;
  auto interim = build_block_loewner(io::load_samples(s), validate_shifts(kExampleAlphas, kExampleBetas, 3, 2));
  Eigen::JacobiSVD<CMatrix> svd(interim.realization.E);
  std::ostringstream first;
  first.precision(17);
  first << svd.singularValues()(0);
  EXPECT_NE(id.out.find(first.str().substr(0, 10)), std::string::npos) << id.out;

  io::write_file_atomic(path("partial.json"), R"({"p": 2, "m": 3, "points": []})");
  EXPECT_EQ(run({"hsv-est", "--samples", path("partial.json"), "--shifts", shifts()}).code, cli::kExitValidation);
}

TEST_F(Cli, CompareIdenticalAndMismatched) {
  auto r = run({"compare", "--a", model(), "--b", model(), "--grid", "log:1e-2:1e2:7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"max_deviation\": 0.0"), std::string::npos) << r.out;

  io::write_file_atomic(path("siso.json"), R"({"E": [[1]], "A": [[-1]], "B": [[1]], "C": [[1]]})");
  EXPECT_EQ(run({"compare", "--a", model(), "--b", path("siso.json")}).code, cli::kExitValidation);
  EXPECT_EQ(run({"compare", "--a", model(), "--b", model(), "--grid", "lin:1:2:3"}).code, cli::kExitValidation);
}

TEST_F(Cli, Deterministic) {
  auto s = samples();
  auto twice = [&](std::vector<std::string> args, const std::string& out) {
    auto a = args, b = args;
    a.insert(a.end(), {"--out", path(out + "1")});
    b.insert(b.end(), {"--out", path(out + "2")});
    ASSERT_EQ(run(a).code, 0);
    ASSERT_EQ(run(b).code, 0);
    EXPECT_EQ(io::read_file(path(out + "1")), io::read_file(path(out + "2"))) << out;
  };
  twice({"hsv", "--model", model()}, "hsv");
  twice({"sample", "--model", model(), "--shifts", shifts()}, "samples");
  twice({"reduce", "--method", "dd", "--samples", s, "--shifts", shifts(), "--order", "3"}, "dd");
  twice({"reduce", "--method", "adi", "--model", model(), "--shifts", shifts(), "--order", "3"}, "adi");
  twice({"reduce", "--method", "bt", "--model", model(), "--order", "3"}, "bt");
  twice({"hsv-est", "--samples", s, "--shifts", shifts()}, "est");
  twice({"compare", "--a", model(), "--b", (kData / "rom_reference.json").string()}, "cmp");
}
