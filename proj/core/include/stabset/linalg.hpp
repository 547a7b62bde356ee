#ifndef STABSET_LINALG_HPP
#define STABSET_LINALG_HPP

#include <vector>

#include "stabset/rational.hpp"

namespace stabset::linalg {

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static RationalMatrix identity(int n);
  RationalMatrix transpose() const;
  bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix mul(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix mat_pow(const RationalMatrix& m, int n);

// Basis vectors are rows in reduced row echelon form, so equal subspaces have
// identical representations.
struct SubspaceBasis {
  int ambient = 0;
  std::vector<std::vector<Rational>> vecs;

  int dim() const { return static_cast<int>(vecs.size()); }
  bool operator==(const SubspaceBasis&) const = default;
};

// Gauss-Jordan with normalized pivots; rows processed top-down, first nonzero
// entry pivots. Exact, deterministic.
RationalMatrix rref(RationalMatrix m, int* rank_out = nullptr);

SubspaceBasis kernel_basis(const RationalMatrix& m);
SubspaceBasis image_basis(const RationalMatrix& m);
SubspaceBasis row_space(const RationalMatrix& m);

// Canonical basis of M(span(b)).
SubspaceBasis apply_to_subspace(const RationalMatrix& m, const SubspaceBasis& b);

bool same_subspace(const SubspaceBasis& x, const SubspaceBasis& y);
SubspaceBasis full_space(int n);

struct ChainReport {
  std::vector<int> ker_dims;  // n = 0..dim
  std::vector<int> im_dims;
  int stab_index = 0;  // least n with Ker(M^{n+1}) = Ker(M^n)
};

ChainReport chain_report(const RationalMatrix& m);

// Greatest subspace W with M(W) = W: iterate W <- M(W) from the full space
// until the dimension stops dropping. Nested, so equal dimension means equal
// space.
SubspaceBasis stable_subspace(const RationalMatrix& m);

// V = Ker(M^N) ⊕ Im(M^N) at N = stab_index: dimensions add up and the stacked
// bases have full rank.
bool decomposition_check(const RationalMatrix& m);

}  // namespace stabset::linalg

#endif
