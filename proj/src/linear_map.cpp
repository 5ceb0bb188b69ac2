#include "qhopf/linear_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

void ColumnBuilder::add(int row, const Scalar& v) {
  if (v.is_zero()) return;
  if (!used_[row]) {
    used_[row] = true;
    touched_.push_back(row);
    vals_[row] = v;
  } else {
    vals_[row] += v;
  }
}

SparseVec ColumnBuilder::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  out.reserve(touched_.size());
  for (int r : touched_) {
    if (!vals_[r].is_zero()) out.emplace_back(r, std::move(vals_[r]));
    vals_[r] = Scalar();
    used_[r] = false;
  }
  touched_.clear();
  return out;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) m.cols_[j] = {{j, Scalar(1, 1)}};
  return m;
}

Matrix Matrix::permutation(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) m.cols_[j] = {{image[j], Scalar(1, 1)}};
  return m;
}

void Matrix::set_col(int j, SparseVec v) {
  std::map<int, Scalar> acc;
  for (auto& [r, s] : v) {
    if (r < 0 || r >= rows_) throw std::out_of_range("matrix row out of range");
    auto [it, inserted] = acc.try_emplace(r, s);
    if (!inserted) it->second += s;
  }
  SparseVec out;
  for (auto& [r, s] : acc) {
    if (!s.is_zero()) out.emplace_back(r, std::move(s));
  }
  cols_.at(j) = std::move(out);
}

Scalar Matrix::at(int i, int j) const {
  const auto& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const auto& e, int row) { return e.first < row; });
  return (it != c.end() && it->first == i) ? it->second : Scalar();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols());
  ColumnBuilder acc(a.rows_);
  for (int j = 0; j < b.cols(); ++j) {
    for (const auto& [k, bkj] : b.cols_[j]) {
      for (const auto& [i, aik] : a.cols_[k]) {
        if (bkj.is_one()) {
          acc.add(i, aik);
        } else {
          acc.add(i, aik * bkj);
        }
      }
    }
    out.cols_[j] = acc.take();
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_ * b.rows_, a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja) {
    for (int jb = 0; jb < b.cols(); ++jb) {
      SparseVec col;
      col.reserve(a.cols_[ja].size() * b.cols_[jb].size());
      for (const auto& [ia, va] : a.cols_[ja]) {
        for (const auto& [ib, vb] : b.cols_[jb]) {
          col.emplace_back(ia * b.rows_ + ib, va * vb);
        }
      }
      out.cols_[ja * b.cols() + jb] = std::move(col);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> first_difference(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix comparison: shape mismatch");
  }
  for (int j = 0; j < a.cols(); ++j) {
    if (a.cols_[j] == b.cols_[j]) continue;
    const auto& x = a.cols_[j];
    const auto& y = b.cols_[j];
    std::size_t p = 0, q = 0;
    while (p < x.size() || q < y.size()) {
      const int rx = p < x.size() ? x[p].first : a.rows_;
      const int ry = q < y.size() ? y[q].first : a.rows_;
      if (rx == ry) {
        if (!(x[p].second == y[q].second)) return std::make_pair(j, rx);
        ++p;
        ++q;
      } else {
        return std::make_pair(j, std::min(rx, ry));
      }
    }
  }
  return std::nullopt;
}

Matrix Matrix::inverse() const {
  const int n = rows_;
  if (cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  // Row-major dense working copy; desk-scale sizes only.
  std::vector<std::vector<Scalar>> work(n, std::vector<Scalar>(2 * n));
  for (int j = 0; j < n; ++j) {
    for (const auto& [i, v] : cols_[j]) work[i][j] = v;
    work[j][n + j] = Scalar(1, 1);
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!work[r][c].is_zero() && work[r][c].is_constant()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      for (int r = c; r < n; ++r) {
        if (!work[r][c].is_zero()) {
          throw SingularError("no constant pivot in column " + std::to_string(c) +
                              " (beta-dependent entries)");
        }
      }
      throw SingularError("matrix is singular");
    }
    std::swap(work[c], work[pivot]);
    const Scalar inv = work[c][c].inverse();
    for (auto& v : work[c]) {
      if (!v.is_zero()) v *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || work[r][c].is_zero()) continue;
      const Scalar f = work[r][c];
      for (int k = 0; k < 2 * n; ++k) {
        if (!work[c][k].is_zero()) work[r][k] -= f * work[c][k];
      }
    }
  }
  Matrix out(n, n);
  for (int j = 0; j < n; ++j) {
    SparseVec col;
    for (int i = 0; i < n; ++i) {
      if (!work[i][n + j].is_zero()) col.emplace_back(i, work[i][n + j]);
    }
    out.cols_[j] = std::move(col);
  }
  return out;
}

bool Matrix::is_identity() const { return *this == identity(rows_); }

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

}  // namespace qhopf
