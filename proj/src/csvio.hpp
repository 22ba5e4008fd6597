#pragma once

#include <string>
#include <vector>

namespace vlx {

/// One metadata entry; numbers and strings are kept apart so the JSON
/// writer can emit proper types.
struct MetaItem {
  std::string key;
  bool is_number = false;
  double num = 0.0;
  std::string str;
};

MetaItem meta_num(std::string key, double value);
MetaItem meta_str(std::string key, std::string value);

/// One output table: named columns, numeric rows, attached metadata.
struct SeriesDoc {
  std::string name;  ///< file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<MetaItem> meta;
};

/// Scientific notation, 17 significant digits, '.' decimal point,
/// locale independent.  Round-trips any double exactly.
std::string format_double(double v);

/// Comma separated, header row, LF endings.
std::string doc_to_csv(const SeriesDoc& doc);

void write_text_file(const std::string& path, const std::string& content);

void write_csv(const std::string& path, const SeriesDoc& doc);

}  // namespace vlx
