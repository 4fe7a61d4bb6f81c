#include "minsurf/serialize.hpp"

#include <ostream>
#include <sstream>

namespace minsurf {

real_t real_from_json(const json& j) {
  if (j.is_string()) return real_t(j.get<std::string>());
  if (j.is_number_integer()) return real_t(j.get<long long>());
  if (j.is_number_float()) return real_t(j.get<double>());
  throw ConfigError("expected a number or numeric string");
}

complex_t complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ConfigError("complex values are [re, im] pairs");
  return complex_t(real_from_json(j[0]), real_from_json(j[1]));
}

json real_to_json(const real_t& x) { return to_string(x); }

json complex_to_json(const complex_t& z) {
  return json::array({to_string(z.real()), to_string(z.imag())});
}

json intmat_to_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat intmat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ConfigError("integer matrix must be an array of rows");
  }
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw ConfigError("ragged integer matrix");
    for (int c = 0; c < cols; ++c) {
      const auto& cell = j[i][c];
      if (cell.is_string()) {
        m(i, c) = bigint_t(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        m(i, c) = bigint_t(cell.get<long long>());
      } else {
        throw ConfigError("integer matrix entries must be integers or integer strings");
      }
    }
  }
  return m;
}

json realmat_to_json(const RealMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json period_matrix_to_json(const PeriodMatrix& pm) {
  json out;
  out["schema"] = 1;
  out["row_labels"] = pm.row_labels;
  out["col_labels"] = pm.col_labels;
  out["entries"] = realmat_to_json(pm.entries);
  json cx = json::array();
  for (int i = 0; i < pm.complex_entries.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < pm.complex_entries.cols(); ++j) {
      row.push_back(complex_to_json(pm.complex_entries(i, j)));
    }
    cx.push_back(std::move(row));
  }
  out["complex_entries"] = std::move(cx);
  return out;
}

void write_period_matrix_csv(std::ostream& os, const PeriodMatrix& pm) {
  os << "differential";
  for (const auto& c : pm.col_labels) os << "," << c;
  os << "\n";
  for (int i = 0; i < pm.entries.rows(); ++i) {
    os << pm.row_labels[i];
    for (int j = 0; j < pm.entries.cols(); ++j) os << "," << to_string(pm.entries(i, j));
    os << "\n";
  }
}

}  // namespace minsurf
