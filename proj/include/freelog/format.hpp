#ifndef FREELOG_FORMAT_HPP
#define FREELOG_FORMAT_HPP

#include "freelog/numeric.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace freelog {

/// One table cell. Rationals always render as "p/q" pairs and big integers
/// as decimal strings (they exceed what JSON numbers can carry faithfully);
/// doubles honor the configured precision; machine output never contains
/// rounded rationals.
using Cell = std::variant<long long, Int, Rational, double, bool, std::string>;

std::string render_cell(const Cell& cell, int precision);

/// Doubles via %.{precision}g in the C locale, so output is byte-stable
/// across environments.
std::string render_double(double value, int precision);

std::string render_rational(const Rational& value);

/// A rectangular table with named columns, rendered as CSV (header row
/// first) or as a JSON document {"meta-keys"..., "rows": [{...}] } with the
/// same field names. Row order and field order are exactly as added.
class OutputTable {
public:
    explicit OutputTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    /// Named scalars placed before "rows" in the JSON document; CSV ignores
    /// them (the flags that produced the table carry the same information).
    void add_meta(const std::string& key, Cell value);

    std::string to_csv(int precision) const;
    std::string to_json(int precision) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, Cell>> meta_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace freelog

#endif
