#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clima::csv {

using Row = std::vector<std::string>;

/// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF row ends.
/// Throws std::invalid_argument on an unterminated quote.
std::vector<Row> parse(std::string_view text);

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string escape(std::string_view field);

std::string join(const Row& row);

}  // namespace clima::csv
