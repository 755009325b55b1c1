#pragma once

// Loader for tests/data/reference_coefficients.csv.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixture {

struct CoefficientRow {
  double lambda;
  int n;
  bool trusted;
  std::vector<double> coefficients; // without the implied leading 1
};

inline std::vector<CoefficientRow> load_reference_coefficients() {
  const std::string path =
      std::string(QSIX_TEST_DATA_DIR) + "/reference_coefficients.csv";
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path);
  std::vector<CoefficientRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    if (!header_seen) { // column header
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string item;
    CoefficientRow row;
    std::getline(ss, item, ',');
    row.lambda = std::stod(item);
    std::getline(ss, item, ',');
    row.n = std::stoi(item);
    std::getline(ss, item, ',');
    row.trusted = std::stoi(item) != 0;
    while (std::getline(ss, item, ','))
      row.coefficients.push_back(std::stod(item));
    // drop zero padding from the tail
    while (!row.coefficients.empty() && row.coefficients.back() == 0.0)
      row.coefficients.pop_back();
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace fixture
