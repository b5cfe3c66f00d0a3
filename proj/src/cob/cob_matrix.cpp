#include "cobcoh/cob_matrix.hpp"

#include <string>

#include "cobcoh/error.hpp"

namespace cobcoh {

CobMatrix::CobMatrix(std::vector<Boundary> rows, std::vector<Boundary> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  entries_.reserve(rows_.size() * cols_.size());
  for (const auto& r : rows_)
    for (const auto& c : cols_) entries_.emplace_back(c, r);
}

CobMatrix::CobMatrix(std::vector<Boundary> rows, std::vector<Boundary> cols,
                     std::vector<MultiCob> entries)
    : rows_(std::move(rows)),
      cols_(std::move(cols)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_.size() * cols_.size())
    throw CobError("matrix entry count does not match its shape");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const auto& e = entries_[i * cols_.size() + j];
      if (e.source() != cols_[j] || e.target() != rows_[i])
        throw CobError("matrix entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") has the wrong type");
    }
}

const MultiCob& CobMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= cols_.size())
    throw CobError("matrix index out of range");
  return entries_[i * cols_.size() + j];
}

void CobMatrix::set(std::size_t i, std::size_t j, MultiCob value) {
  if (i >= rows_.size() || j >= cols_.size())
    throw CobError("matrix index out of range");
  if (value.source() != cols_[j] || value.target() != rows_[i])
    throw CobError("matrix entry has the wrong type");
  entries_[i * cols_.size() + j] = std::move(value);
}

CobMatrix identity_matrix(const std::vector<Boundary>& types) {
  CobMatrix m(types, types);
  for (std::size_t i = 0; i < types.size(); ++i)
    m.set(i, i, MultiCob(Cobordism::identity(types[i])));
  return m;
}

CobMatrix zero_matrix(std::vector<Boundary> rows, std::vector<Boundary> cols) {
  return CobMatrix(std::move(rows), std::move(cols));
}

std::vector<Boundary> kronecker_types(const std::vector<Boundary>& a,
                                      const std::vector<Boundary>& b) {
  std::vector<Boundary> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(concat(x, y));
  return out;
}

std::vector<Boundary> flip_types(const std::vector<Boundary>& a) {
  std::vector<Boundary> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(flip(x));
  return out;
}

CobMatrix mat_compose(const CobMatrix& g, const CobMatrix& f) {
  if (g.cols() != f.rows())
    throw CobError("cannot compose matrices: inner types differ");
  CobMatrix out(g.rows(), f.cols());
  for (std::size_t i = 0; i < g.row_count(); ++i)
    for (std::size_t j = 0; j < f.col_count(); ++j) {
      MultiCob sum(f.cols()[j], g.rows()[i]);
      for (std::size_t k = 0; k < f.row_count(); ++k) {
        const auto& x = g.at(i, k);
        const auto& y = f.at(k, j);
        if (x.empty() || y.empty()) continue;
        sum += compose(x, y);
      }
      out.set(i, j, std::move(sum));
    }
  return out;
}

CobMatrix mat_add(const CobMatrix& f, const CobMatrix& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw CobError("cannot add matrices of different types");
  CobMatrix out = f;
  for (std::size_t i = 0; i < f.row_count(); ++i)
    for (std::size_t j = 0; j < f.col_count(); ++j)
      if (!g.at(i, j).empty()) out.set(i, j, f.at(i, j) + g.at(i, j));
  return out;
}

CobMatrix mat_tensor(const CobMatrix& x, const CobMatrix& y) {
  std::size_t m2 = y.row_count();
  std::size_t n2 = y.col_count();
  CobMatrix out(kronecker_types(x.rows(), y.rows()),
                kronecker_types(x.cols(), y.cols()));
  for (std::size_t i = 0; i < out.row_count(); ++i)
    for (std::size_t j = 0; j < out.col_count(); ++j) {
      const auto& a = x.at(i / m2, j / n2);
      const auto& b = y.at(i % m2, j % n2);
      if (a.empty() || b.empty()) continue;
      out.set(i, j, tensor(a, b));
    }
  return out;
}

CobMatrix mat_hom(const CobMatrix& x, const CobMatrix& y) {
  std::size_t m2 = y.row_count();
  std::size_t n2 = y.col_count();
  CobMatrix out(kronecker_types(flip_types(x.cols()), y.rows()),
                kronecker_types(flip_types(x.rows()), y.cols()));
  for (std::size_t i = 0; i < out.row_count(); ++i)
    for (std::size_t j = 0; j < out.col_count(); ++j) {
      const auto& a = x.at(j / n2, i / m2);
      const auto& b = y.at(i % m2, j % n2);
      if (a.empty() || b.empty()) continue;
      out.set(i, j, tensor(dual(a), b));
    }
  return out;
}

CobMatrix mat_dsum(const CobMatrix& x, const CobMatrix& y) {
  auto rows = x.rows();
  rows.insert(rows.end(), y.rows().begin(), y.rows().end());
  auto cols = x.cols();
  cols.insert(cols.end(), y.cols().begin(), y.cols().end());
  CobMatrix out(std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < x.row_count(); ++i)
    for (std::size_t j = 0; j < x.col_count(); ++j)
      out.set(i, j, x.at(i, j));
  for (std::size_t i = 0; i < y.row_count(); ++i)
    for (std::size_t j = 0; j < y.col_count(); ++j)
      out.set(x.row_count() + i, x.col_count() + j, y.at(i, j));
  return out;
}

CobMatrix mat_dagger(const CobMatrix& m) {
  CobMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j)
      out.set(j, i, dagger(m.at(i, j)));
  return out;
}

CobMatrix mat_dual(const CobMatrix& m) {
  CobMatrix out(flip_types(m.cols()), flip_types(m.rows()));
  for (std::size_t i = 0; i < m.row_count(); ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j)
      out.set(j, i, dual(m.at(i, j)));
  return out;
}

bool equal(const CobMatrix& a, const CobMatrix& b) { return a == b; }

NatMatrix cardinality(const CobMatrix& m) {
  NatMatrix out(m.row_count(), m.col_count());
  for (std::size_t k = 0; k < m.entries().size(); ++k)
    out.values[k] = m.entries()[k].size();
  return out;
}

NatMatrix nat_identity(std::size_t n) {
  NatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

NatMatrix nat_compose(const NatMatrix& g, const NatMatrix& f) {
  if (g.cols != f.rows) throw CobError("cannot compose natural matrices");
  NatMatrix out(g.rows, f.cols);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t k = 0; k < g.cols; ++k) {
      std::uint64_t x = g.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < f.cols; ++j) out.at(i, j) += x * f.at(k, j);
    }
  return out;
}

NatMatrix nat_add(const NatMatrix& f, const NatMatrix& g) {
  if (f.rows != g.rows || f.cols != g.cols)
    throw CobError("cannot add natural matrices of different shapes");
  NatMatrix out = f;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] += g.values[k];
  return out;
}

NatMatrix nat_kronecker(const NatMatrix& x, const NatMatrix& y) {
  NatMatrix out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < out.rows; ++i)
    for (std::size_t j = 0; j < out.cols; ++j)
      out.at(i, j) = x.at(i / y.rows, j / y.cols) * y.at(i % y.rows, j % y.cols);
  return out;
}

NatMatrix nat_transpose(const NatMatrix& m) {
  NatMatrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

NatMatrix nat_dsum(const NatMatrix& x, const NatMatrix& y) {
  NatMatrix out(x.rows + y.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
  for (std::size_t i = 0; i < y.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j)
      out.at(x.rows + i, x.cols + j) = y.at(i, j);
  return out;
}

}  // namespace cobcoh
