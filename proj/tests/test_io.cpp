#include <gtest/gtest.h>

#include <lrbt/adi.hpp>
#include <lrbt/io.hpp>
#include <lrbt/loewner.hpp>
#include <lrbt/pipeline.hpp>

#include <filesystem>

#include "check.hpp"
#include "example_system.hpp"

using namespace lrbt;
using namespace lrbt::testing;

TEST(Io, ModelRoundTripBitExact) {
  auto sys = random_stable_system(5, 2, 3, 9);
  sys.A(0, 1) = Complex(0.1, -1.0 / 3.0);
  auto back = io::parse_model(io::format_model(sys));
  EXPECT_EQ(back.E, sys.E);
  EXPECT_EQ(back.A, sys.A);
  EXPECT_EQ(back.B, sys.B);
  EXPECT_EQ(back.C, sys.C);
  EXPECT_EQ(io::format_model(back), io::format_model(sys));
}

TEST(Io, ModelMixedEncodings) {
  auto sys = io::parse_model(R"({"E": [[1]], "A": [[[-1, 0.5]]], "B": [[2]], "C": [[3]], "note": "x"})");
  EXPECT_EQ(sys.A(0, 0), Complex(-1, 0.5));
  EXPECT_EQ(sys.B(0, 0), Complex(2));
}

TEST(Io, SeventeenDigits) {
  auto text = io::format_values("hsv", RVector::Constant(1, 0.1));
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos) << text;
  text = io::format_values("hsv", RVector::Constant(1, 2.0));
  EXPECT_NE(text.find("2.0"), std::string::npos) << text;
}

TEST(Io, ModelErrors) {
  EXPECT_EQ(code_of([] { io::parse_model("{", "m.json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_model(R"({"E": [[1]], "A": [[1]], "B": [[1]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_model(R"({"E": [[1]], "A": [[1]], "B": [[1]], "C": [["x"]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_model(R"({"E": [[1, 2], [3]], "A": [[1]], "B": [[1]], "C": [[1]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::parse_model(R"({"E": [[1]], "A": [[1]], "B": [[1], [1]], "C": [[1]]})"); }),
            ErrorCode::DimensionMismatch);
  try {
    io::parse_model(R"({"E": [[1]], "A": [[1]], "B": [[1]], "C": [[1, [2]]]})", "m.json");
    FAIL();
  } catch (const Error& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("m.json"), std::string::npos) << what;
    EXPECT_NE(what.find("C[0]"), std::string::npos) << what;
  }
}

TEST(Io, ShiftsRoundTrip) {
  io::ShiftLists sh{{Complex(-1, 0.25), -2.0}, {-0.5}};
  auto back = io::parse_shifts(io::format_shifts(sh));
  EXPECT_EQ(back.alphas, sh.alphas);
  EXPECT_EQ(back.betas, sh.betas);
  auto plain = io::parse_shifts(R"({"alphas": [-1, -2], "betas": [[-3, 0]]})");
  EXPECT_EQ(plain.alphas[1], Complex(-2));
  EXPECT_EQ(plain.betas[0], Complex(-3));
}

TEST(Io, InterimRoundTrip) {
  auto shifts = validate_shifts(kExampleAlphas, kExampleBetas, 3, 2);
  auto plan = required_samples(shifts);
  auto interim = build_block_loewner(sample_model(example_system(), plan.points), shifts);
  auto back = io::parse_interim(io::format_interim(interim));
  EXPECT_EQ(back.realization.E, interim.realization.E);
  EXPECT_EQ(back.realization.A, interim.realization.A);
  EXPECT_EQ(back.alphas, interim.alphas);
  EXPECT_EQ(back.betas, interim.betas);
  EXPECT_EQ(back.inputs, 3);
  EXPECT_EQ(back.outputs, 2);

  auto text = io::format_interim(interim);
  auto pos = text.find(kInterimOrdering);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 6, "column");
  EXPECT_EQ(code_of([&] { io::parse_interim(text); }), ErrorCode::ParseError);
}

TEST(Io, AtomicWriteAndMissingFile) {
  auto dir = std::filesystem::temp_directory_path() / "lrbt_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "out.json";
  io::write_file_atomic(path, "first");
  io::write_file_atomic(path, "second");
  EXPECT_EQ(io::read_file(path), "second");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  std::filesystem::remove_all(dir);

  try {
    io::load_model(dir / "nope.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
    EXPECT_NE(std::string(e.what()).find("nope.json"), std::string::npos);
  }
}

TEST(Io, ReportFields) {
  ComparisonReport r;
  r.grid = {Complex(0, 1)};
  r.deviation = {std::nullopt};
  r.max_deviation = 0;
  auto text = io::format_report(r);
  for (const char* key : {"\"grid\"", "\"deviation\"", "\"max_deviation\"", "\"hsv_a\"", "\"hsv_b\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}
