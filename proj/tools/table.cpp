#include "table.hpp"

#include <cstdio>

#include "json.hpp"

namespace cli {

std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", v);
  return buffer;
}

namespace {

std::string cell_to_csv(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) return format_value(std::get<double>(cell));
  if (std::holds_alternative<long long>(cell)) return std::to_string(std::get<long long>(cell));
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out = "# szmklab " + table.command;
  for (const auto& [key, value] : table.config) out += " " + key + "=" + value;
  out += "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i == 0 ? "" : ",") + table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i == 0 ? "" : ",") + cell_to_csv(row[i]);
    }
    out += "\n";
  }
  if (!table.summary.empty()) {
    out += "#";
    for (const auto& [key, value] : table.summary) out += " " + key + "=" + value;
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json j;
  j["command"] = table.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.config) config[key] = value;
  j["config"] = config;
  j["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        jrow.push_back(std::get<double>(cell));
      } else if (std::holds_alternative<long long>(cell)) {
        jrow.push_back(std::get<long long>(cell));
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = value;
  j["summary"] = std::move(summary);
  return j.dump() + "\n";
}

Table from_json(const std::string& text) {
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  Table table;
  table.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.at("config").items()) {
    table.config.emplace_back(key, value.get<std::string>());
  }
  table.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& jrow : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& cell : jrow) {
      if (cell.is_number_float()) {
        row.emplace_back(cell.get<double>());
      } else if (cell.is_number_integer()) {
        row.emplace_back(cell.get<long long>());
      } else {
        row.emplace_back(cell.get<std::string>());
      }
    }
    table.rows.push_back(std::move(row));
  }
  for (const auto& [key, value] : j.at("summary").items()) {
    table.summary.emplace_back(key, value.get<std::string>());
  }
  return table;
}

}  // namespace cli
