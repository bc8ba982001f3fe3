#pragma once

#include <string>

namespace ouk {

/// Shortest decimal representation that round-trips to the same double;
/// locale-independent, so emitted tables are byte-stable.
std::string format_double(double v);

/// RFC-4180-style CSV field: quoted (with doubled quotes) only when the field
/// contains a comma, quote, or newline.
std::string csv_field(const std::string& s);

}  // namespace ouk
