#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blochgeom/rng.hpp"

namespace blochgeom {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Output of one experiment run. Everything here is a function of the
/// experiment name, parameters and seed; wall-clock data is added by the
/// CLI to the run metadata file, never to the record.
struct ExperimentRecord {
  std::string experiment;
  RngSeed seed;
  std::vector<std::pair<std::string, std::string>> parameters;
  Table rows;
  /// Secondary tables, e.g. "vectors_k4" or "moments", in insertion order.
  std::vector<std::pair<std::string, Table>> extra_tables;
  std::vector<std::pair<std::string, std::string>> metadata;
  bool passed = true;

  const Table* find_table(const std::string& name) const;
};

enum class Format { Csv, Json };

/// 17 significant digits, '.' decimal; parses back to the same double.
std::string format_double(double value);

/// RFC 4180 quoting (fields with ',', '"' or newlines are quoted); header
/// row first; rows end in "\n".
std::string to_csv(const Table& table);

/// One object: experiment, seed, parameters, metadata, passed, columns,
/// rows, tables, in that key order.
std::string to_json(const ExperimentRecord& record);

/// CSV of the main table, or the whole record as JSON.
std::string serialize_record(const ExperimentRecord& record, Format format);

}  // namespace blochgeom
