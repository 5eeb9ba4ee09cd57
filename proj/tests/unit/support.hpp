#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>

#include "oracle.hpp"
#include "stabkit/eisenstein.hpp"
#include "stabkit/laurent.hpp"
#include "stabkit/matrix.hpp"

namespace testing_support {

using namespace stabkit;

/// Property-test seed; STABKIT_SEED overrides it for replay.
inline std::uint32_t seed() {
  if (const char* env = std::getenv("STABKIT_SEED")) return static_cast<std::uint32_t>(std::strtoul(env, nullptr, 10));
  return 20240611u;
}

inline std::mt19937& rng() {
  static std::mt19937 g(seed());
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Integer random_integer(int bound) { return Integer(uniform(-bound, bound)); }

/// Integer coefficients in [-bound, bound], exponents in [low, low + span].
inline IntLaurentPoly random_int_laurent(int span, int bound, int low = 0) {
  std::vector<Integer> c;
  for (int i = 0; i <= span; ++i) c.push_back(random_integer(bound));
  return IntLaurentPoly(low, c);
}

inline LaurentPolyQ random_laurent(int span, int bound, int low = 0) {
  std::vector<Rational> c;
  for (int i = 0; i <= span; ++i) c.push_back(Rational(uniform(-bound, bound), uniform(1, 3)));
  for (auto& x : c) x.canonicalize();
  return LaurentPolyQ(low, c);
}

inline EisensteinInt random_eisenstein(int bound) {
  return EisensteinInt(random_integer(bound), random_integer(bound));
}

template <class R, class Gen>
Matrix<R> random_matrix(std::size_t rows, std::size_t cols, Gen gen) {
  Matrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen();
  return m;
}

template <class R>
std::vector<std::vector<R>> to_rows(const Matrix<R>& m) {
  std::vector<std::vector<R>> out(m.rows(), std::vector<R>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::IntMatrix to_oracle(const Matrix<Integer>& m) {
  oracle::IntMatrix out(m.rows(), oracle::IntVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

/// Z-presentation of a Z[w]-module: generator k becomes (k, wk); each
/// relation column c contributes c and w c. Returns the matrix and the
/// Z-matrix of multiplication by w.
struct ZPresentation {
  oracle::IntMatrix relations;
  oracle::IntMatrix w_action;
};

inline ZPresentation eisenstein_to_z(const Matrix<EisensteinInt>& m) {
  const std::size_t n = m.rows();
  ZPresentation out;
  out.relations.assign(2 * n, oracle::IntVector{});
  auto push = [&](const std::vector<EisensteinInt>& col) {
    for (std::size_t i = 0; i < n; ++i) {
      out.relations[2 * i].push_back(col[i].a().get_si());
      out.relations[2 * i + 1].push_back(col[i].b().get_si());
    }
  };
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<EisensteinInt> col = m.column(j), wcol;
    for (const auto& x : col) wcol.push_back(EisensteinInt::w() * x);
    push(col);
    push(wcol);
  }
  // w (a + b w) = -b + (a - b) w
  out.w_action.assign(2 * n, oracle::IntVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    out.w_action[2 * i][2 * i + 1] = -1;
    out.w_action[2 * i + 1][2 * i] = 1;
    out.w_action[2 * i + 1][2 * i + 1] = -1;
  }
  return out;
}

}  // namespace testing_support
