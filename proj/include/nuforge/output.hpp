#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace nuforge::output {

/// 17 significant digits ("null" for non-finite values).
std::string format_number(double v);

/// JSON text with every floating value written to 17 significant digits;
/// non-finite values become null.
std::string dump_json(const nlohmann::json& value, int indent = 2);

using Cell = std::variant<double, long long, std::string>;

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    std::string str() const;
};

}  // namespace nuforge::output
