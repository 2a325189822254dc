#ifndef QBOUND_TOOLS_RECORD_HPP
#define QBOUND_TOOLS_RECORD_HPP

// Byte-stable output records: flat JSON objects and CSV rows whose numbers
// are serialized with 17 significant digits via to_chars, so output is
// locale-independent, round-trip safe, and identical for identical inputs.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace record {

inline std::string formatDouble(double v) {
    if (!std::isfinite(v)) return v != v ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string boolText(bool v) { return v ? "true" : "false"; }

inline void appendEscaped(std::string& out, std::string_view s) {
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char hex[8];
                std::snprintf(hex, sizeof hex, "\\u%04x", static_cast<unsigned>(c));
                out += hex;
            } else {
                out += c;
            }
        }
    }
}

/// Flat JSON object, keys in insertion order, two-space indent.
class JsonObjectWriter {
public:
    JsonObjectWriter& textField(std::string_view key, std::string_view value) {
        std::string v = "\"";
        appendEscaped(v, value);
        v += '"';
        return raw(key, v);
    }

    JsonObjectWriter& numberField(std::string_view key, double value) {
        // Non-finite doubles have no JSON representation; null marks them.
        return raw(key, std::isfinite(value) ? formatDouble(value) : "null");
    }

    JsonObjectWriter& intField(std::string_view key, std::int64_t value) {
        return raw(key, std::to_string(value));
    }

    JsonObjectWriter& boolField(std::string_view key, bool value) {
        return raw(key, boolText(value));
    }

    JsonObjectWriter& nullField(std::string_view key) { return raw(key, "null"); }

    std::string str() const {
        if (entries_.empty()) return "{}";
        std::string out = "{\n";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            out += "  ";
            out += entries_[i];
            out += i + 1 < entries_.size() ? ",\n" : "\n";
        }
        out += "}";
        return out;
    }

private:
    JsonObjectWriter& raw(std::string_view key, std::string_view value) {
        std::string entry = "\"";
        appendEscaped(entry, key);
        entry += "\": ";
        entry += value;
        entries_.push_back(std::move(entry));
        return *this;
    }

    std::vector<std::string> entries_;
};

inline std::string csvCell(std::string_view cell) {
    if (cell.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csvRow(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csvCell(cells[i]);
    }
    return out;
}

} // namespace record

#endif
