// CSV input/output. Numbers are written with 17 significant digits so doubles
// round-trip exactly.
#pragma once

#include "cauchy/grid.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cauchy {

/// Malformed or inconsistent input data.
class DataMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_number(double v);

/// Header `x,t,value`; outer loop over j (time), inner over i (space).
void write_field_csv(const std::string& path, const FieldD& field);

/// Reads a field file and reconstructs its grid from the node coordinates.
/// Throws DataMismatch when the coordinates do not form a uniform grid.
FieldD read_field_csv(const std::string& path);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double>& column(const std::string& name) const;
};

void write_table_csv(const std::string& path, const Table& table);
Table read_table_csv(const std::string& path);

}  // namespace cauchy
