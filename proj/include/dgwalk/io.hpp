#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "dgwalk/group.hpp"
#include "dgwalk/table.hpp"

namespace dgw {

// JSON object {n, q, entries, row_sums, col_sums}.
nlohmann::json table_to_json(const TableState& t);
TableState table_from_json(const nlohmann::json& j);

// JSON object {n, q, coords}.
nlohmann::json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

// FNV-1a 64 over n, q and the row-major residues, as 16 hex digits.
std::string state_digest(const TableState& t);
std::string state_digest(const GroupElement& g);

// Shortest round-trip decimal form ("%.17g"); byte-stable across runs.
std::string format_double(double x);

// '# key=value' comment lines echoing the run parameters, in the given order.
void write_csv_header(std::ostream& os,
                      const std::vector<std::pair<std::string, std::string>>& params);

}  // namespace dgw
