#include "blochgeom/record.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace blochgeom {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_double(v);
          return v;
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::ordered_json table_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      obj[table.columns[c]] = cell_json(row[c]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace

const Table* ExperimentRecord::find_table(const std::string& name) const {
  for (const auto& [key, table] : extra_tables) {
    if (key == name) return &table;
  }
  return nullptr;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += quote_csv(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += quote_csv(cell_text(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentRecord& record) {
  nlohmann::ordered_json j;
  j["experiment"] = record.experiment;
  j["seed"] = record.seed.value;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.metadata) meta[k] = v;
  j["metadata"] = std::move(meta);
  j["passed"] = record.passed;
  j["columns"] = record.rows.columns;
  j["rows"] = table_json(record.rows);
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& [name, table] : record.extra_tables) {
    tables[name] = {{"columns", table.columns}, {"rows", table_json(table)}};
  }
  j["tables"] = std::move(tables);
  return j.dump(2) + "\n";
}

std::string serialize_record(const ExperimentRecord& record, Format format) {
  return format == Format::Csv ? to_csv(record.rows) : to_json(record);
}

}  // namespace blochgeom
