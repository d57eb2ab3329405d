#ifndef LRBT_IO_HPP
#define LRBT_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "lrbt/common.hpp"
#include "lrbt/loewner.hpp"
#include "lrbt/model.hpp"
#include "lrbt/pipeline.hpp"
#include "lrbt/sampling.hpp"

namespace lrbt::io {

// All formats are JSON text. Matrices are row-major nested arrays; complex
// scalars are [re, im]; real matrix entries may be plain numbers. Every
// double is written with 17 significant digits so reading back is exact.
// Parse failures throw Error(ParseError) naming the source and the field.

/// {"E": .., "A": .., "B": .., "C": ..}. Unknown keys are ignored.
DescriptorSystem parse_model(const std::string& text, const std::string& source = "<model>");
std::string format_model(const DescriptorSystem& sys);

/// {"p": int, "m": int, "points": [{"s": [re,im], "value": M, "derivative": M | null}]}
SampleDataset parse_samples(const std::string& text, const std::string& source = "<samples>");
std::string format_samples(const SampleDataset& ds);

struct ShiftLists {
  std::vector<Complex> alphas;
  std::vector<Complex> betas;
};

/// {"alphas": [[re,im], ..], "betas": [[re,im], ..]}; plain numbers accepted for real shifts.
ShiftLists parse_shifts(const std::string& text, const std::string& source = "<shifts>");
std::string format_shifts(const ShiftLists& shifts);

/// Model format plus {"interim": {"alphas", "betas", "ordering"}}.
InterimRom parse_interim(const std::string& text, const std::string& source = "<interim>");
std::string format_interim(const InterimRom& rom);

/// {"<key>": [values..]}
std::string format_values(const std::string& key, const RVector& values);

/// {"grid", "deviation", "max_deviation", "hsv_a", "hsv_b"}
std::string format_report(const ComparisonReport& report);

/// Reads a whole file; IoError names the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

DescriptorSystem load_model(const std::filesystem::path& path);
SampleDataset load_samples(const std::filesystem::path& path);
ShiftLists load_shifts(const std::filesystem::path& path);

}  // namespace lrbt::io

#endif  // LRBT_IO_HPP
