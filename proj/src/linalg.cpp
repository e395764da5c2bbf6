#include "gfchordal/linalg.hpp"

#include <algorithm>

namespace gfc {

bool normalize(std::span<Elem> v, const Field& f) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Elem s = f.inv(v[i]);
    for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
    return true;
  }
  return false;
}

bool is_normalized(std::span<const Elem> v) {
  for (Elem x : v) {
    if (x != 0) return x == 1;
  }
  return false;
}

EchelonBasis::EchelonBasis(const Field& f, int dim) : f_(&f), dim_(dim) {}

bool EchelonBasis::reduce(std::span<Elem> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    const Elem c = v[p];
    if (c == 0) continue;
    const auto& row = rows_[i];
    for (int j = p; j < dim_; ++j) {
      if (row[j] != 0) v[j] = f_->sub(v[j], f_->mul(c, row[j]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool EchelonBasis::contains(std::span<const Elem> v) const {
  std::array<Elem, kMaxDim> buf{};
  std::copy(v.begin(), v.end(), buf.begin());
  return reduce(std::span<Elem>(buf.data(), dim_));
}

bool EchelonBasis::insert(std::span<const Elem> v) {
  if (rank() == dim_) return false;
  std::array<Elem, kMaxDim> buf{};
  std::copy(v.begin(), v.end(), buf.begin());
  std::span<Elem> w(buf.data(), dim_);
  if (reduce(w)) return false;
  int p = 0;
  while (w[p] == 0) ++p;
  const Elem s = f_->inv(w[p]);
  for (int j = p; j < dim_; ++j) w[j] = f_->mul(w[j], s);
  rows_.push_back(buf);
  pivots_.push_back(p);
  return true;
}

int column_rank(const Field& f, int dim, const std::vector<std::span<const Elem>>& cols) {
  EchelonBasis b(f, dim);
  for (const auto& c : cols) {
    b.insert(c);
    if (b.rank() == dim) break;
  }
  return b.rank();
}

std::vector<Coords> trim_to_row_space(const Field& f, int dim, const std::vector<Coords>& cols) {
  const int n = static_cast<int>(cols.size());
  // rows x columns working copy
  std::vector<Coords> a(dim, Coords(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i) a[i][j] = cols[j][i];

  int r = 0;
  for (int j = 0; j < n && r < dim; ++j) {
    int piv = -1;
    for (int i = r; i < dim; ++i) {
      if (a[i][j] != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    const Elem s = f.inv(a[r][j]);
    for (int k = 0; k < n; ++k) a[r][k] = f.mul(a[r][k], s);
    for (int i = 0; i < dim; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Elem c = a[i][j];
      for (int k = 0; k < n; ++k) a[i][k] = f.sub(a[i][k], f.mul(c, a[r][k]));
    }
    ++r;
  }

  std::vector<Coords> out(n, Coords(r, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < r; ++i) out[j][i] = a[i][j];
    normalize(out[j], f);
  }
  return out;
}

std::optional<Coords> solve(const Field& f, const std::vector<Coords>& basis_cols, std::span<const Elem> target) {
  const int n = static_cast<int>(basis_cols.size());
  std::vector<Coords> a(n, Coords(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = basis_cols[j][i];
    a[i][n] = target[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (a[i][c] != 0) { piv = i; break; }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    const Elem s = f.inv(a[c][c]);
    for (int k = 0; k <= n; ++k) a[c][k] = f.mul(a[c][k], s);
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Elem m = a[i][c];
      for (int k = 0; k <= n; ++k) a[i][k] = f.sub(a[i][k], f.mul(m, a[c][k]));
    }
  }
  Coords x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace gfc
