#pragma once

#include <string>
#include <string_view>

#include "ballotpath/count_table.hpp"

namespace ballot {

enum class OutputFormat { text_grid, csv, json };

// Accepts "grid", "csv", "json"; throws std::invalid_argument otherwise.
OutputFormat format_from_name(std::string_view name);

// Human-readable grid, rows m descending so the boundary sits at the lower
// right, matching the usual table layout.
std::string render_grid(const CountTable& t);

// `# key=value` metadata lines, a `n,m,value,region` header, then one record
// per cell.  parse_csv(render_csv(t)) == t.
std::string render_csv(const CountTable& t);
CountTable parse_csv(const std::string& text);

// Object with `meta` and `cells`; values serialized as decimal strings since
// they can exceed every fixed-width integer type.  parse_json(render_json(t)) == t.
std::string render_json(const CountTable& t);
CountTable parse_json(const std::string& text);

std::string render_table(const CountTable& t, OutputFormat format);

}  // namespace ballot
