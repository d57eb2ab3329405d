#include "lrbt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lrbt::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& source, const std::string& field,
                             const std::string& msg) {
  throw Error(ErrorCode::ParseError, source + ": " + field + ": " + msg);
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
}

double read_number(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_number()) parse_fail(source, field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(source, field, "non-finite number");
  return v;
}

Complex read_scalar(const Json& j, const std::string& source, const std::string& field) {
  if (j.is_number()) return {read_number(j, source, field), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {read_number(j[0], source, field + "[0]"), read_number(j[1], source, field + "[1]")};
  }
  parse_fail(source, field, "expected a number or [re, im]");
}

CMatrix read_matrix(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_array() || j.empty()) parse_fail(source, field, "expected a nonempty array of rows");
  const auto rows = static_cast<Index>(j.size());
  Index cols = -1;
  CMatrix out;
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.empty()) parse_fail(source, rf, "expected a nonempty row array");
    if (cols < 0) {
      cols = static_cast<Index>(row.size());
      out.resize(rows, cols);
    } else if (static_cast<Index>(row.size()) != cols) {
      parse_fail(source, rf, "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c) {
      out(r, c) = read_scalar(row[c], source, rf + "[" + std::to_string(c) + "]");
    }
  }
  return out;
}

const Json& require(const Json& obj, const char* key, const std::string& source) {
  if (!obj.is_object()) parse_fail(source, "<root>", "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(source, key, "missing field");
  return *it;
}

std::vector<Complex> read_scalar_list(const Json& j, const std::string& source,
                                      const std::string& field) {
  if (!j.is_array()) parse_fail(source, field, "expected an array");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_scalar(j[i], source, field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Writing: build an ordered_json tree, then print it with fixed number formatting.

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CMatrix& m, bool force_complex) {
  const bool real = !force_complex && (m.imag().array() == 0.0).all();
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      if (real) {
        row.push_back(m(r, c).real());
      } else {
        row.push_back(complex_json(m(r, c)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double v) {
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep the token a JSON float so integers stay distinguishable from counts.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_array()) {
      for (const auto& x : e)
        if (x.is_structured()) return false;
    } else if (e.is_object()) {
      return false;
    }
  }
  return true;
}

void dump(const Json& j, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::null: out += "null"; return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); return;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); return;
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "cannot write non-finite value");
      out += format_double(v);
      return;
    }
    case Json::value_t::string: out += Json(j).dump(); return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (is_flat(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += inner;
        dump(j[i], out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += inner + Json(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    default: throw Error(ErrorCode::InvalidArgument, "unsupported JSON value");
  }
}

std::string to_text(const Json& j) {
  std::string out;
  dump(j, out, 0);
  out += "\n";
  return out;
}

Json model_json(const DescriptorSystem& sys) {
  Json j = Json::object();
  j["E"] = matrix_json(sys.E, false);
  j["A"] = matrix_json(sys.A, false);
  j["B"] = matrix_json(sys.B, false);
  j["C"] = matrix_json(sys.C, false);
  return j;
}

DescriptorSystem model_from_json(const Json& j, const std::string& source) {
  DescriptorSystem sys{read_matrix(require(j, "E", source), source, "E"),
                       read_matrix(require(j, "A", source), source, "A"),
                       read_matrix(require(j, "B", source), source, "B"),
                       read_matrix(require(j, "C", source), source, "C")};
  try {
    check_dimensions(sys);
  } catch (const Error& e) {
    throw Error(ErrorCode::DimensionMismatch, source + ": " + e.what());
  }
  return sys;
}

}  // namespace

DescriptorSystem parse_model(const std::string& text, const std::string& source) {
  return model_from_json(parse_text(text, source), source);
}

std::string format_model(const DescriptorSystem& sys) { return to_text(model_json(sys)); }

SampleDataset parse_samples(const std::string& text, const std::string& source) {
  const Json j = parse_text(text, source);
  const Json& pj = require(j, "p", source);
  const Json& mj = require(j, "m", source);
  if (!pj.is_number_integer() || pj.get<std::int64_t>() < 1) parse_fail(source, "p", "expected a positive integer");
  if (!mj.is_number_integer() || mj.get<std::int64_t>() < 1) parse_fail(source, "m", "expected a positive integer");
  const Index p = pj.get<Index>();
  const Index m = mj.get<Index>();
  const Json& pts = require(j, "points", source);
  if (!pts.is_array()) parse_fail(source, "points", "expected an array");
  std::vector<SamplePoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const Json& pt = pts[i];
    if (!pt.is_object()) parse_fail(source, field, "expected an object");
    SamplePoint sp;
    sp.s = read_scalar(require(pt, "s", source), source, field + ".s");
    sp.value = read_matrix(require(pt, "value", source), source, field + ".value");
    if (sp.value.rows() != p || sp.value.cols() != m) {
      parse_fail(source, field + ".value", "expected a " + std::to_string(p) + "x" +
                                               std::to_string(m) + " matrix");
    }
    const auto d = pt.find("derivative");
    if (d != pt.end() && !d->is_null()) {
      sp.derivative = read_matrix(*d, source, field + ".derivative");
      if (sp.derivative->rows() != p || sp.derivative->cols() != m) {
        parse_fail(source, field + ".derivative", "expected a " + std::to_string(p) + "x" +
                                                      std::to_string(m) + " matrix");
      }
    }
    points.push_back(std::move(sp));
  }
  try {
    return SampleDataset(p, m, std::move(points));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
}

std::string format_samples(const SampleDataset& ds) {
  Json j = Json::object();
  j["p"] = ds.outputs();
  j["m"] = ds.inputs();
  Json pts = Json::array();
  for (const auto& pt : ds.points()) {
    Json o = Json::object();
    o["s"] = complex_json(pt.s);
    o["value"] = matrix_json(pt.value, true);
    o["derivative"] = pt.derivative ? matrix_json(*pt.derivative, true) : Json(nullptr);
    pts.push_back(std::move(o));
  }
  j["points"] = std::move(pts);
  return to_text(j);
}

ShiftLists parse_shifts(const std::string& text, const std::string& source) {
  const Json j = parse_text(text, source);
  return ShiftLists{read_scalar_list(require(j, "alphas", source), source, "alphas"),
                    read_scalar_list(require(j, "betas", source), source, "betas")};
}

std::string format_shifts(const ShiftLists& shifts) {
  Json j = Json::object();
  Json a = Json::array();
  Json b = Json::array();
  for (Complex z : shifts.alphas) a.push_back(complex_json(z));
  for (Complex z : shifts.betas) b.push_back(complex_json(z));
  j["alphas"] = std::move(a);
  j["betas"] = std::move(b);
  return to_text(j);
}

InterimRom parse_interim(const std::string& text, const std::string& source) {
  const Json j = parse_text(text, source);
  InterimRom rom;
  rom.realization = model_from_json(j, source);
  const Json& meta = require(j, "interim", source);
  rom.alphas = read_scalar_list(require(meta, "alphas", source), source, "interim.alphas");
  rom.betas = read_scalar_list(require(meta, "betas", source), source, "interim.betas");
  const Json& ord = require(meta, "ordering", source);
  if (!ord.is_string() || ord.get<std::string>() != kInterimOrdering) {
    parse_fail(source, "interim.ordering", std::string("expected \"") + kInterimOrdering + "\"");
  }
  rom.inputs = rom.realization.inputs();
  rom.outputs = rom.realization.outputs();
  const auto k = static_cast<Index>(rom.alphas.size());
  const auto l = static_cast<Index>(rom.betas.size());
  if (k * rom.inputs != rom.realization.order() || l * rom.outputs != rom.realization.order()) {
    parse_fail(source, "interim", "shift counts do not match the realization layout");
  }
  return rom;
}

std::string format_interim(const InterimRom& rom) {
  Json j = model_json(rom.realization);
  Json meta = Json::object();
  Json a = Json::array();
  Json b = Json::array();
  for (Complex z : rom.alphas) a.push_back(complex_json(z));
  for (Complex z : rom.betas) b.push_back(complex_json(z));
  meta["alphas"] = std::move(a);
  meta["betas"] = std::move(b);
  meta["ordering"] = kInterimOrdering;
  j["interim"] = std::move(meta);
  return to_text(j);
}

std::string format_values(const std::string& key, const RVector& values) {
  Json j = Json::object();
  Json arr = Json::array();
  for (Index i = 0; i < values.size(); ++i) arr.push_back(values(i));
  j[key] = std::move(arr);
  return to_text(j);
}

std::string format_report(const ComparisonReport& report) {
  Json j = Json::object();
  Json grid = Json::array();
  for (Complex z : report.grid) grid.push_back(complex_json(z));
  Json dev = Json::array();
  for (const auto& d : report.deviation) dev.push_back(d ? Json(*d) : Json(nullptr));
  const auto hsv = [](const std::optional<RVector>& v) {
    if (!v) return Json(nullptr);
    Json arr = Json::array();
    for (Index i = 0; i < v->size(); ++i) arr.push_back((*v)(i));
    return arr;
  };
  j["grid"] = std::move(grid);
  j["deviation"] = std::move(dev);
  j["max_deviation"] = report.max_deviation;
  j["hsv_a"] = hsv(report.hsv_a);
  j["hsv_b"] = hsv(report.hsv_b);
  return to_text(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::IoError, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto '" + path.string() + "'");
  }
}

DescriptorSystem load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path), path.string());
}

SampleDataset load_samples(const std::filesystem::path& path) {
  return parse_samples(read_file(path), path.string());
}

ShiftLists load_shifts(const std::filesystem::path& path) {
  return parse_shifts(read_file(path), path.string());
}

}  // namespace lrbt::io
