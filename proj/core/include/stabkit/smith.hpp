#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>
#include <vector>

#include "stabkit/error.hpp"
#include "stabkit/matrix.hpp"
#include "stabkit/ring.hpp"

namespace stabkit {

struct SmithOptions {
  bool track_left = true;
  bool track_right = true;
  /// Checked between elimination steps; a stop request raises ErrorKind::Cancelled.
  std::stop_token stop;
};

/// U * M * V == D with U, V invertible and D diagonal, d_1 | d_2 | ...
template <class R>
struct SmithDecomposition {
  Matrix<R> U;  // empty when not tracked
  Matrix<R> D;
  Matrix<R> V;  // empty when not tracked
  /// Nonunit diagonal entries of D (zeros included), in divisibility order.
  std::vector<R> invariant_factors;
  std::size_t rank = 0;

  std::vector<R> diagonal() const {
    std::vector<R> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

inline void check_stop(const std::stop_token& stop) {
  if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "elimination cancelled");
}

// Position of a nonzero entry of minimal Euclidean size in D[k.., k..].
template <EuclideanRing R>
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const Matrix<R>& d, std::size_t k) {
  using T = RingTraits<R>;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::optional<typename T::Size> best_size;
  for (std::size_t i = k; i < d.rows(); ++i)
    for (std::size_t j = k; j < d.cols(); ++j) {
      const R& x = d(i, j);
      if (T::is_zero(x)) continue;
      auto s = T::size(x);
      if (!best_size || s < *best_size) {
        best = {i, j};
        best_size = std::move(s);
        if (*best_size == 0) return best;
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form over a Euclidean domain.
///
/// Pivot: the nonzero entry of smallest Euclidean size in the remaining block.
/// Rows then columns are reduced by Euclidean division; any nonzero remainder
/// triggers a re-pivot. Once the pivot row and column are clear, an entry not
/// divisible by the pivot has its row added to the pivot row, which restarts
/// the reduction. Pivots are finally replaced by their canonical associates.
template <EuclideanRing R>
SmithDecomposition<R> smith_normal_form(const Matrix<R>& m, const SmithOptions& opts = {}) {
  using T = RingTraits<R>;
  SmithDecomposition<R> out;
  Matrix<R>& d = out.D;
  d = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (opts.track_left) out.U = Matrix<R>::identity(rows);
  if (opts.track_right) out.V = Matrix<R>::identity(cols);

  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (opts.track_left) out.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (opts.track_right) out.V.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const R& c) {
    d.add_row_multiple(dst, src, c);
    if (opts.track_left) out.U.add_row_multiple(dst, src, c);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const R& c) {
    d.add_col_multiple(dst, src, c);
    if (opts.track_right) out.V.add_col_multiple(dst, src, c);
  };

  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    bool have_pivot = false;
    while (true) {
      detail::check_stop(opts.stop);
      auto pivot = detail::min_pivot(d, k);
      if (!pivot) break;
      have_pivot = true;
      row_swap(k, pivot->first);
      col_swap(k, pivot->second);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (T::is_zero(d(i, k))) continue;
        auto [q, r] = T::divmod(d(i, k), d(k, k));
        row_add(i, k, -q);
        if (!T::is_zero(r)) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (T::is_zero(d(k, j))) continue;
        auto [q, r] = T::divmod(d(k, j), d(k, k));
        col_add(j, k, -q);
        if (!T::is_zero(r)) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = k + 1; i < rows && !offender; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!T::is_zero(d(i, j)) && !divides(d(k, k), d(i, j))) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_add(k, *offender, T::one());
    }
    if (!have_pivot) break;
    auto n = T::normalize(d(k, k));
    d(k, k) = n.value;
    if (opts.track_left) out.U.scale_row(k, n.unit);
  }
  out.rank = k;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (!T::is_unit(d(i, i))) out.invariant_factors.push_back(d(i, i));
  return out;
}

/// Lower column echelon form A * V == H: column c < rank has its first nonzero
/// entry in pivot_rows[c] (strictly increasing), columns >= rank are zero.
template <class R>
struct ColumnEchelon {
  Matrix<R> H;
  Matrix<R> V;  // empty when not tracked
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

template <EuclideanRing R>
ColumnEchelon<R> column_echelon(const Matrix<R>& a, bool track = true,
                                const std::stop_token& stop = {}) {
  using T = RingTraits<R>;
  ColumnEchelon<R> out;
  Matrix<R>& h = out.H;
  h = a;
  if (track) out.V = Matrix<R>::identity(a.cols());
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    while (true) {
      detail::check_stop(stop);
      std::optional<std::size_t> best;
      std::optional<typename T::Size> best_size;
      std::size_t nonzero = 0;
      for (std::size_t j = c; j < h.cols(); ++j) {
        if (T::is_zero(h(r, j))) continue;
        ++nonzero;
        auto s = T::size(h(r, j));
        if (!best_size || s < *best_size) {
          best = j;
          best_size = std::move(s);
        }
      }
      if (!best) break;
      h.swap_cols(c, *best);
      if (track) out.V.swap_cols(c, *best);
      if (nonzero == 1) {
        auto n = T::normalize(h(r, c));
        h.scale_col(c, n.unit);
        if (track) out.V.scale_col(c, n.unit);
        out.pivot_rows.push_back(r);
        ++c;
        break;
      }
      for (std::size_t j = c + 1; j < h.cols(); ++j) {
        if (T::is_zero(h(r, j))) continue;
        R q = T::divmod(h(r, j), h(r, c)).first;
        h.add_col_multiple(j, c, -q);
        if (track) out.V.add_col_multiple(j, c, -q);
      }
    }
  }
  out.rank = c;
  return out;
}

/// Basis (as columns) of the kernel { x : A x = 0 } of the free module map.
template <EuclideanRing R>
Matrix<R> kernel_basis(const Matrix<R>& a, const std::stop_token& stop = {}) {
  auto e = column_echelon(a, true, stop);
  std::vector<std::size_t> keep;
  for (std::size_t j = e.rank; j < a.cols(); ++j) keep.push_back(j);
  return e.V.select_columns(keep);
}

/// Drops redundant columns: a matrix with at most rows() columns and the same span.
template <EuclideanRing R>
Matrix<R> span_basis(const Matrix<R>& a) {
  auto e = column_echelon(a, false);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < e.rank; ++j) keep.push_back(j);
  return e.H.select_columns(keep);
}

/// Coefficients x with A x == v, if the system is solvable over R.
/// `e` must be the tracked echelon form of A.
template <EuclideanRing R>
std::optional<std::vector<R>> solve(const ColumnEchelon<R>& e, std::vector<R> v) {
  if (e.V.empty() && e.H.cols() > 0)
    throw Error(ErrorKind::Internal, "solve needs a tracked echelon transform");
  using T = RingTraits<R>;
  const auto& h = e.H;
  std::vector<R> y(h.cols(), T::zero());
  std::size_t next = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (next < e.rank && e.pivot_rows[next] == r) {
      if (!T::is_zero(v[r])) {
        auto [q, rem] = T::divmod(v[r], h(r, next));
        if (!T::is_zero(rem)) return std::nullopt;
        for (std::size_t i = r; i < h.rows(); ++i)
          if (!T::is_zero(h(i, next))) v[i] -= q * h(i, next);
        y[next] = std::move(q);
      }
      ++next;
    } else if (!T::is_zero(v[r])) {
      return std::nullopt;
    }
  }
  if (e.V.empty()) return y;
  return e.V * y;
}

template <EuclideanRing R>
bool in_column_span(const ColumnEchelon<R>& e, const std::vector<R>& v) {
  using T = RingTraits<R>;
  const auto& h = e.H;
  std::vector<R> w = v;
  std::size_t next = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (next < e.rank && e.pivot_rows[next] == r) {
      if (!T::is_zero(w[r])) {
        auto [q, rem] = T::divmod(w[r], h(r, next));
        if (!T::is_zero(rem)) return false;
        for (std::size_t i = r; i < h.rows(); ++i)
          if (!T::is_zero(h(i, next))) w[i] -= q * h(i, next);
      }
      ++next;
    } else if (!T::is_zero(w[r])) {
      return false;
    }
  }
  return true;
}

}  // namespace stabkit
