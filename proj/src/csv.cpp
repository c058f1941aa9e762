#include "cauchy/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cauchy {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size() && s.find_first_not_of(" \r\t", pos) != std::string::npos)
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataMismatch("'" + path + "': not a number: '" + s + "'");
  }
}

std::vector<std::vector<double>> read_rows(const std::string& path,
                                           std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw DataMismatch("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw DataMismatch("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  header = split(line, ',');
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto parts = split(line, ',');
    if (parts.size() != header.size())
      throw DataMismatch("'" + path + "': row has " + std::to_string(parts.size()) +
                         " fields, header has " + std::to_string(header.size()));
    std::vector<double> row;
    row.reserve(parts.size());
    for (const auto& p : parts) row.push_back(parse_double(p, path));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_field_csv(const std::string& path, const FieldD& field) {
  auto out = open_out(path);
  const Grid& g = field.grid();
  out << "x,t,value\n";
  for (int j = 0; j < g.nt; ++j) {
    const std::string t = format_number(g.t(j));
    for (int i = 0; i < g.nx; ++i)
      out << format_number(g.x(i)) << ',' << t << ',' << format_number(field(i, j)) << '\n';
  }
}

FieldD read_field_csv(const std::string& path) {
  std::vector<std::string> header;
  const auto rows = read_rows(path, header);
  if (header != std::vector<std::string>{"x", "t", "value"})
    throw DataMismatch("'" + path + "': expected header x,t,value");
  if (rows.empty()) throw DataMismatch("'" + path + "': no data rows");

  // nx = length of the first run of constant t
  std::size_t nx = 0;
  while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
  if (nx == 0 || rows.size() % nx != 0)
    throw DataMismatch("'" + path + "': row count is not a multiple of the spatial node count");
  const std::size_t nt = rows.size() / nx;
  const double t_half = -rows[0][1];

  Grid g;
  try {
    g = make_grid(static_cast<int>(nx), static_cast<int>(nt), t_half);
  } catch (const std::invalid_argument& e) {
    throw DataMismatch("'" + path + "': " + e.what());
  }
  FieldD f(g);
  for (std::size_t j = 0; j < nt; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const auto& r = rows[j * nx + i];
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      if (std::abs(r[0] - g.x(ii)) > 1e-12 || std::abs(r[1] - g.t(jj)) > 1e-12)
        throw DataMismatch("'" + path + "': node coordinates do not match a uniform grid at row " +
                           std::to_string(j * nx + i + 2));
      f(ii, jj) = r[2];
    }
  }
  if (!f.all_finite()) throw DataMismatch("'" + path + "': non-finite values");
  return f;
}

const std::vector<double>& Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw DataMismatch("missing column '" + name + "'");
  return columns[static_cast<std::size_t>(it - header.begin())];
}

void write_table_csv(const std::string& path, const Table& table) {
  if (table.header.size() != table.columns.size())
    throw std::invalid_argument("table header and column count differ");
  auto out = open_out(path);
  for (std::size_t c = 0; c < table.header.size(); ++c)
    out << (c ? "," : "") << table.header[c];
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << format_number(table.columns[c].at(r));
    out << '\n';
  }
}

Table read_table_csv(const std::string& path) {
  Table t;
  const auto rows = read_rows(path, t.header);
  t.columns.assign(t.header.size(), {});
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) t.columns[c].push_back(r[c]);
  return t;
}

}  // namespace cauchy
