#include "dgwalk/io.hpp"

#include <cstdio>

namespace dgw {

namespace {

nlohmann::json grid_rows(const Grid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < g.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < g.cols; ++c) row.push_back(g.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

Grid grid_from_rows(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw std::invalid_argument("expected a non-empty array of rows");
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  Grid g(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("ragged rows");
    }
    for (int j = 0; j < c; ++j) g.at(i, j) = rows[i][j].get<int32_t>();
  }
  return g;
}

uint64_t fnv1a(uint64_t h, uint64_t x) {
  for (int b = 0; b < 8; ++b) {
    h ^= (x >> (8 * b)) & 0xFF;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string digest_of(int n, int q, const Grid& g) {
  uint64_t h = 0xCBF29CE484222325ull;
  h = fnv1a(h, static_cast<uint64_t>(n));
  h = fnv1a(h, static_cast<uint64_t>(q));
  for (int32_t e : g.v) h = fnv1a(h, static_cast<uint64_t>(static_cast<uint32_t>(e)));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

nlohmann::json table_to_json(const TableState& t) {
  return nlohmann::json{{"n", t.n},
                        {"q", t.q},
                        {"entries", grid_rows(t.entries)},
                        {"row_sums", t.row_sums},
                        {"col_sums", t.col_sums}};
}

TableState table_from_json(const nlohmann::json& j) {
  TableState t;
  t.n = j.at("n").get<int>();
  t.q = j.at("q").get<int>();
  t.entries = grid_from_rows(j.at("entries"));
  t.row_sums = j.at("row_sums").get<std::vector<int32_t>>();
  t.col_sums = j.at("col_sums").get<std::vector<int32_t>>();
  if (t.entries.rows != t.n) throw std::invalid_argument("entries do not match n");
  if (!validate_table(t.entries, t.row_sums, t.col_sums, t.q)) {
    throw std::invalid_argument("table violates its declared sums");
  }
  return t;
}

nlohmann::json group_element_to_json(const GroupElement& g) {
  return nlohmann::json{{"n", g.n}, {"q", g.q}, {"coords", grid_rows(g.coords)}};
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  GroupElement g;
  g.n = j.at("n").get<int>();
  g.q = j.at("q").get<int>();
  g.coords = grid_from_rows(j.at("coords"));
  if (g.coords.rows != g.n - 1 || g.coords.cols != g.n - 1) {
    throw std::invalid_argument("coords do not match n");
  }
  for (int32_t c : g.coords.v) {
    if (c < 0 || c >= g.q) throw std::invalid_argument("coordinate out of range");
  }
  return g;
}

std::string state_digest(const TableState& t) { return digest_of(t.n, t.q, t.entries); }

std::string state_digest(const GroupElement& g) { return digest_of(g.n, g.q, g.coords); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_header(std::ostream& os,
                      const std::vector<std::pair<std::string, std::string>>& params) {
  for (const auto& [key, value] : params) {
    os << "# " << key << "=" << value << "\n";
  }
}

}  // namespace dgw
