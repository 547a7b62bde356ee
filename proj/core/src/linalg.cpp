#include "stabset/linalg.hpp"

#include <stdexcept>

namespace stabset::linalg {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("shape mismatch");
  RationalMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) == 0) continue;
        z.at(i, j) += v * y.at(k, j);
      }
    }
  return z;
}

RationalMatrix mat_pow(const RationalMatrix& m, int n) {
  if (m.rows != m.cols) throw std::invalid_argument("power of non-square matrix");
  RationalMatrix acc = RationalMatrix::identity(m.rows);
  for (int i = 0; i < n; ++i) acc = mul(acc, m);
  return acc;
}

RationalMatrix rref(RationalMatrix m, int* rank_out) {
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    Rational inv = m.at(pivot_row, col);
    for (int c = col; c < m.cols; ++c) m.at(pivot_row, c) /= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row) continue;
      Rational factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(pivot_row, c);
    }
    ++pivot_row;
  }
  if (rank_out) *rank_out = pivot_row;
  return m;
}

SubspaceBasis row_space(const RationalMatrix& m) {
  int rank = 0;
  RationalMatrix r = rref(m, &rank);
  SubspaceBasis b;
  b.ambient = m.cols;
  for (int i = 0; i < rank; ++i) {
    std::vector<Rational> v(m.cols);
    for (int c = 0; c < m.cols; ++c) v[c] = r.at(i, c);
    b.vecs.push_back(std::move(v));
  }
  return b;
}

SubspaceBasis kernel_basis(const RationalMatrix& m) {
  int rank = 0;
  RationalMatrix r = rref(m, &rank);
  std::vector<int> pivot_col(rank);
  std::vector<char> is_pivot(m.cols, 0);
  for (int i = 0, col = 0; i < rank; ++i) {
    while (r.at(i, col) == 0) ++col;
    pivot_col[i] = col;
    is_pivot[col] = 1;
  }
  RationalMatrix gens(m.cols - rank, m.cols);
  int g = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    gens.at(g, free_col) = 1;
    for (int i = 0; i < rank; ++i) gens.at(g, pivot_col[i]) = -r.at(i, free_col);
    ++g;
  }
  return row_space(gens);
}

SubspaceBasis image_basis(const RationalMatrix& m) { return row_space(m.transpose()); }

SubspaceBasis apply_to_subspace(const RationalMatrix& m, const SubspaceBasis& b) {
  RationalMatrix gens(b.dim(), m.rows);
  for (int i = 0; i < b.dim(); ++i)
    for (int r = 0; r < m.rows; ++r) {
      Rational acc = 0;
      for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * b.vecs[i][c];
      gens.at(i, r) = acc;
    }
  return row_space(gens);
}

bool same_subspace(const SubspaceBasis& x, const SubspaceBasis& y) { return x == y; }

SubspaceBasis full_space(int n) { return row_space(RationalMatrix::identity(n)); }

ChainReport chain_report(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("chain of non-square matrix");
  const int d = m.rows;
  ChainReport rep;
  RationalMatrix p = RationalMatrix::identity(d);
  for (int n = 0; n <= d; ++n) {
    rep.ker_dims.push_back(kernel_basis(p).dim());
    rep.im_dims.push_back(image_basis(p).dim());
    if (n < d) p = mul(p, m);
  }
  rep.stab_index = d;
  for (int n = 0; n < d; ++n) {
    if (rep.ker_dims[n + 1] == rep.ker_dims[n]) {
      rep.stab_index = n;
      break;
    }
  }
  return rep;
}

SubspaceBasis stable_subspace(const RationalMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("stable subspace of non-square matrix");
  SubspaceBasis w = full_space(m.rows);
  while (true) {
    SubspaceBasis next = apply_to_subspace(m, w);
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

bool decomposition_check(const RationalMatrix& m) {
  ChainReport rep = chain_report(m);
  RationalMatrix p = mat_pow(m, rep.stab_index);
  SubspaceBasis ker = kernel_basis(p);
  SubspaceBasis im = image_basis(p);
  if (ker.dim() + im.dim() != m.rows) return false;
  RationalMatrix stacked(ker.dim() + im.dim(), m.rows);
  int r = 0;
  for (const auto& v : ker.vecs) {
    for (int c = 0; c < m.rows; ++c) stacked.at(r, c) = v[c];
    ++r;
  }
  for (const auto& v : im.vecs) {
    for (int c = 0; c < m.rows; ++c) stacked.at(r, c) = v[c];
    ++r;
  }
  int rank = 0;
  rref(stacked, &rank);
  return rank == m.rows;
}

}  // namespace stabset::linalg
