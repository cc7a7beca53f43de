#pragma once

#include <random>
#include <string>

#include "solvcohom/exact/matrix.hpp"
#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/weight.hpp"

namespace fixtures {

using namespace solvcohom;

inline std::string instance_path(const std::string& name) {
  return std::string(SOLVCOHOM_INSTANCE_DIR) + "/" + name + ".json";
}

inline GaussianRational q(long p, long d = 1) { return GaussianRational(mpq_class(p, d)); }

inline LieAlgebraData heisenberg() {
  LieAlgebraData g;
  g.basis_names = {"X", "Y", "Z"};
  g.brackets = {{0, 1, 2, 1}};
  g.nilradical = {0, 1, 2};
  return g;
}

inline LieAlgebraData abelian(std::size_t n, GroundMode mode = GroundMode::complex) {
  LieAlgebraData g;
  for (std::size_t i = 0; i < n; ++i) {
    g.basis_names.push_back("E" + std::to_string(i + 1));
    g.nilradical.push_back(i);
  }
  g.mode = mode;
  return g;
}

// [v5,v1]=v1, [v6,v2]=v2, [v5,v3]=-v3, [v6,v4]=-v4; v1..v4 abelian nilradical
inline LieAlgebraData real_six() {
  LieAlgebraData g;
  g.basis_names = {"v1", "v2", "v3", "v4", "v5", "v6"};
  g.brackets = {{4, 0, 0, 1}, {5, 1, 1, 1}, {4, 2, 2, -1}, {5, 3, 3, -1}};
  g.nilradical = {0, 1, 2, 3};
  g.complement = {4, 5};
  g.conjugation = std::vector<std::size_t>{1, 0, 3, 2, 5, 4};
  return g;
}

// [E1,E2]=E2, [E1,E3]=-E3
inline LieAlgebraData complex_three() {
  LieAlgebraData g;
  g.basis_names = {"E1", "E2", "E3"};
  g.brackets = {{0, 1, 1, 1}, {0, 2, 2, -1}};
  g.nilradical = {1, 2};
  g.complement = {0};
  g.mode = GroundMode::complex;
  return g;
}

inline Weight weight(std::initializer_list<long> coords) {
  std::vector<GaussianRational> c;
  for (auto x : coords) c.emplace_back(x);
  return Weight(std::move(c));
}

inline GaussianRational random_scalar(std::mt19937& rng, int range = 3, bool gaussian = true) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  mpq_class im(gaussian ? num(rng) : 0, den(rng));
  im.canonicalize();
  return {re, im};
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution fill(density);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (fill(rng)) m(r, c) = random_scalar(rng);
  return m;
}

inline Weight random_weight(std::mt19937& rng, std::size_t rank) {
  std::vector<GaussianRational> c;
  for (std::size_t j = 0; j < rank; ++j) c.push_back(random_scalar(rng, 2, true));
  return Weight(std::move(c));
}

}  // namespace fixtures
