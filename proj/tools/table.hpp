#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cli {

using Cell = std::variant<double, long long, std::string>;

/// Tabular command output.  The config pairs pin every parameter that shaped
/// the table so a run can be reproduced from its own header.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> summary;  // footer key=value
};

/// 17-significant-digit scientific form used for all CSV numbers.
std::string format_value(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Inverse of to_json; used to validate round-trips.
Table from_json(const std::string& text);

}  // namespace cli
