#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cobcoh/multicob.hpp"

namespace cobcoh {

/// Arrow of 1Cob(+): entry (i, j) is a multiset from cols[j] to rows[i].
/// Entries are stored row-major.
class CobMatrix {
 public:
  CobMatrix() = default;
  /// All-zero matrix of the given type.
  CobMatrix(std::vector<Boundary> rows, std::vector<Boundary> cols);
  CobMatrix(std::vector<Boundary> rows, std::vector<Boundary> cols,
            std::vector<MultiCob> entries);

  const std::vector<Boundary>& rows() const { return rows_; }
  const std::vector<Boundary>& cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const MultiCob& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, MultiCob value);
  const std::vector<MultiCob>& entries() const { return entries_; }

  friend bool operator==(const CobMatrix&, const CobMatrix&) = default;

 private:
  std::vector<Boundary> rows_;
  std::vector<Boundary> cols_;
  std::vector<MultiCob> entries_;
};

CobMatrix identity_matrix(const std::vector<Boundary>& types);
CobMatrix zero_matrix(std::vector<Boundary> rows, std::vector<Boundary> cols);

/// Row-major Kronecker combination of two type sequences.
std::vector<Boundary> kronecker_types(const std::vector<Boundary>& a,
                                      const std::vector<Boundary>& b);
std::vector<Boundary> flip_types(const std::vector<Boundary>& a);

/// G after F.
CobMatrix mat_compose(const CobMatrix& g, const CobMatrix& f);
CobMatrix mat_add(const CobMatrix& f, const CobMatrix& g);
/// Kronecker: entry (i, j) = x[i / m2][j / n2] (x) y[i % m2][j % n2].
CobMatrix mat_tensor(const CobMatrix& x, const CobMatrix& y);
/// X -o Y: Kronecker over (X^T, Y) with entries dual(x) (x) y.
CobMatrix mat_hom(const CobMatrix& x, const CobMatrix& y);
/// Block diagonal.
CobMatrix mat_dsum(const CobMatrix& x, const CobMatrix& y);
/// Transpose with entrywise dagger.
CobMatrix mat_dagger(const CobMatrix& m);
/// Transpose with entrywise dual, the contravariant dual in compact modes.
CobMatrix mat_dual(const CobMatrix& m);

bool equal(const CobMatrix& a, const CobMatrix& b);

/// Matrix over the naturals, row-major.
struct NatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> values;

  NatMatrix() = default;
  NatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c) {}

  std::uint64_t& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return values[i * cols + j];
  }

  friend bool operator==(const NatMatrix&, const NatMatrix&) = default;
};

NatMatrix cardinality(const CobMatrix& m);

NatMatrix nat_identity(std::size_t n);
NatMatrix nat_compose(const NatMatrix& g, const NatMatrix& f);
NatMatrix nat_add(const NatMatrix& f, const NatMatrix& g);
NatMatrix nat_kronecker(const NatMatrix& x, const NatMatrix& y);
NatMatrix nat_transpose(const NatMatrix& m);
NatMatrix nat_dsum(const NatMatrix& x, const NatMatrix& y);

}  // namespace cobcoh
