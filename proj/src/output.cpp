#include "nuforge/output.hpp"

#include <cmath>

#include <fmt/format.h>

namespace nuforge::output {

namespace {

std::string float_text(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt::format("{:.17g}", v);
}

void write(const nlohmann::json& j, int indent, int depth, std::string& out) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    const char* sep = indent > 0 ? ": " : ":";
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad;
                out += nlohmann::json(it.key()).dump();
                out += sep;
                write(it.value(), indent, depth + 1, out);
            }
            out += nl;
            out += close_pad;
            out += "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[";
            out += nl;
            bool first = true;
            for (const auto& v : j) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad;
                write(v, indent, depth + 1, out);
            }
            out += nl;
            out += close_pad;
            out += "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += float_text(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_number(double v) { return float_text(v); }

std::string dump_json(const nlohmann::json& value, int indent) {
    std::string out;
    write(value, indent, 0, out);
    return out;
}

std::string CsvTable::str() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out += std::isfinite(v) ? fmt::format("{:.17g}", v) : std::string("nan");
                    else if constexpr (std::is_same_v<T, long long>)
                        out += std::to_string(v);
                    else
                        out += v;
                },
                row[i]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace nuforge::output
