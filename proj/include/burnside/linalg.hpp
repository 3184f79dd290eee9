#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace burnside {

/// Exact Gaussian elimination over a field type F with +, -, *, / and is_zero(F).
template <class F>
class RowEchelon {
public:
  /// Row-reduces `rows` (all of equal length).
  explicit RowEchelon(std::vector<std::vector<F>> rows) : rows_(std::move(rows)) { reduce(); }

  std::size_t rank() const { return rank_; }
  /// Pivot column of each of the first rank() rows.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<F>>& rows() const { return rows_; }

private:
  void reduce() {
    if (rows_.empty())
      return;
    const std::size_t cols = rows_.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows_.size(); ++c) {
      std::size_t p = r;
      while (p < rows_.size() && is_zero(rows_[p][c]))
        ++p;
      if (p == rows_.size())
        continue;
      std::swap(rows_[r], rows_[p]);
      F inv_pivot = F(rows_[r][c]);
      for (std::size_t j = c; j < cols; ++j)
        rows_[r][j] = rows_[r][j] / inv_pivot;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == r || is_zero(rows_[i][c]))
          continue;
        F f = rows_[i][c];
        for (std::size_t j = c; j < cols; ++j)
          rows_[i][j] = rows_[i][j] - f * rows_[r][j];
      }
      pivots_.push_back(c);
      ++r;
    }
    rank_ = r;
  }

  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::size_t rank_ = 0;
};

template <class F>
std::size_t matrix_rank(std::vector<std::vector<F>> rows) {
  return RowEchelon<F>(std::move(rows)).rank();
}

}  // namespace burnside
