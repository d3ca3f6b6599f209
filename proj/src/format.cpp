#include "freelog/format.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace freelog {

std::string render_double(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

std::string render_rational(const Rational& value) {
    std::ostringstream out;
    out << numerator(value) << '/' << denominator(value);
    return out.str();
}

namespace {

std::string render_big(const Int& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string render_json_cell(const Cell& cell, int precision) {
    // Small integers, doubles, and booleans are native JSON values; big
    // integers and rationals are strings so no reader silently rounds them.
    struct Visitor {
        int precision;
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(const Int& v) const { return '"' + render_big(v) + '"'; }
        std::string operator()(const Rational& v) const { return '"' + render_rational(v) + '"'; }
        std::string operator()(double v) const { return render_double(v, precision); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return '"' + json_escape(v) + '"'; }
    };
    return std::visit(Visitor{precision}, cell);
}

}  // namespace

std::string render_cell(const Cell& cell, int precision) {
    struct Visitor {
        int precision;
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(const Int& v) const { return render_big(v); }
        std::string operator()(const Rational& v) const { return render_rational(v); }
        std::string operator()(double v) const { return render_double(v, precision); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{precision}, cell);
}

OutputTable::OutputTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::domain_error("table needs at least one column");
}

void OutputTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw std::domain_error("row width does not match columns");
    rows_.push_back(std::move(row));
}

void OutputTable::add_meta(const std::string& key, Cell value) {
    meta_.emplace_back(key, std::move(value));
}

std::string OutputTable::to_csv(int precision) const {
    std::ostringstream out;
    for (size_t c = 0; c < columns_.size(); ++c) {
        if (c) out << ',';
        out << columns_[c];
    }
    out << '\n';
    for (const auto& row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << render_cell(row[c], precision);
        }
        out << '\n';
    }
    return out.str();
}

std::string OutputTable::to_json(int precision) const {
    std::ostringstream out;
    out << "{";
    for (const auto& [key, value] : meta_)
        out << '"' << json_escape(key) << "\": " << render_json_cell(value, precision) << ", ";
    out << "\"rows\": [";
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << ", ";
        out << '{';
        for (size_t c = 0; c < columns_.size(); ++c) {
            if (c) out << ", ";
            out << '"' << json_escape(columns_[c])
                << "\": " << render_json_cell(rows_[r][c], precision);
        }
        out << '}';
    }
    out << "]}";
    return out.str();
}

}  // namespace freelog
