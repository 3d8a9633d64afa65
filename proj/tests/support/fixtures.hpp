#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ampdyn/core/matrix.hpp"
#include "ampdyn/exactpoly/int_poly.hpp"
#include "oracles.hpp"

namespace fixture {

using ampdyn::IntMatrix;
using ampdyn::exactpoly::IntPoly;

inline IntPoly lehmer() { return IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

inline IntPoly from_oracle(const oracle::LPoly& p) {
  std::vector<mpz_class> c;
  for (long long v : p) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

inline oracle::LPoly to_oracle(const IntPoly& p) {
  oracle::LPoly out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

inline IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline std::vector<std::vector<long long>> to_ll(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

// Problem text for the companion matrix of a monic polynomial (last column -a_0..-a_{n-1}).
inline std::string companion_problem(const IntPoly& monic) {
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  std::string text = "kind abelian\n";
  for (std::size_t i = 0; i < n; ++i) {
    text += "row";
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class v = j + 1 == n ? mpz_class(-monic.coeff(i)) : mpz_class(i == j + 1 ? 1 : 0);
      text += " " + v.get_str();
    }
    text += "\n";
  }
  return text;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("ampdyn_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixture
