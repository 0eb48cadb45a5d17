#include "maxspread/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace maxspread {

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // Keep the value typed as a float on re-parse.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void write(const Json& j, std::string& out, int indent, int level) {
  const std::string pad(static_cast<std::size_t>(indent) * (level + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * level, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += '\n' + pad;
        write(item, out, indent, level + 1);
        first = false;
      }
      if (!flat) out += '\n' + close_pad;
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        out += '\n' + pad + Json(it.key()).dump() + ": ";
        write(it.value(), out, indent, level + 1);
        first = false;
      }
      out += '\n' + close_pad + '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(j, out, indent, 0);
  out += '\n';
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << contents;
    if (!f.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace maxspread
