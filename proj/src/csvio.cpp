#include "csvio.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace vlx {

MetaItem meta_num(std::string key, double value) {
  MetaItem m;
  m.key = std::move(key);
  m.is_number = true;
  m.num = value;
  return m;
}

MetaItem meta_str(std::string key, std::string value) {
  MetaItem m;
  m.key = std::move(key);
  m.str = std::move(value);
  return m;
}

std::string format_double(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::scientific, 16);
  if (res.ec != std::errc())
    throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string doc_to_csv(const SeriesDoc& doc) {
  std::string out;
  out.reserve(64 + doc.rows.size() * doc.columns.size() * 25);
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += doc.columns[i];
  }
  out += '\n';
  for (const std::vector<double>& row : doc.rows) {
    if (row.size() != doc.columns.size())
      throw std::runtime_error("row width does not match header: " + doc.name);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv(const std::string& path, const SeriesDoc& doc) {
  write_text_file(path, doc_to_csv(doc));
}

}  // namespace vlx
