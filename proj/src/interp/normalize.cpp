#include "cobcoh/normalize.hpp"

#include <algorithm>

#include "cobcoh/biproduct.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/expand.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/tree.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

namespace {

using Sum = std::vector<Arrow>;

const std::vector<Object>& components(const Object& a) {
  return decompose(a)->components;
}

TermMatrix empty_matrix(std::vector<Object> rows, std::vector<Object> cols) {
  TermMatrix m;
  m.entries.resize(rows.size() * cols.size());
  m.rows = std::move(rows);
  m.cols = std::move(cols);
  return m;
}

Sum& cell(TermMatrix& m, std::size_t i, std::size_t j) {
  return m.entries[i * m.cols.size() + j];
}

void sort_sum(Sum& s) { std::sort(s.begin(), s.end()); }

Sum product(const Sum& xs, const Sum& ys, auto&& combine) {
  Sum out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) out.push_back(combine(x, y));
  sort_sum(out);
  return out;
}

TermMatrix base_case(const Arrow& t) {
  auto obj = [&](std::size_t i) -> const Object& { return t.object(i); };
  switch (t.kind()) {
    case ArrowKind::Id: {
      const auto& c = components(obj(0));
      TermMatrix m = empty_matrix(c, c);
      for (std::size_t i = 0; i < c.size(); ++i)
        cell(m, i, i) = {Arrow::id(c[i])};
      return m;
    }
    case ArrowKind::Alpha:
    case ArrowKind::AlphaInv: {
      const auto& a = components(obj(0));
      const auto& b = components(obj(1));
      const auto& c = components(obj(2));
      ArrowType ty = generator_type(t);
      TermMatrix m = empty_matrix(components(ty.target), components(ty.source));
      // Both endpoints enumerate (i1, i2, i3) in the same row-major order.
      std::size_t k = 0;
      for (const auto& x : a)
        for (const auto& y : b)
          for (const auto& z : c) {
            cell(m, k, k) = {t.kind() == ArrowKind::Alpha
                                 ? Arrow::alpha(x, y, z)
                                 : Arrow::alpha_inv(x, y, z)};
            ++k;
          }
      return m;
    }
    case ArrowKind::Lambda:
    case ArrowKind::LambdaInv: {
      const auto& a = components(obj(0));
      ArrowType ty = generator_type(t);
      TermMatrix m = empty_matrix(components(ty.target), components(ty.source));
      for (std::size_t i = 0; i < a.size(); ++i)
        cell(m, i, i) = {t.kind() == ArrowKind::Lambda
                             ? Arrow::lambda(a[i])
                             : Arrow::lambda_inv(a[i])};
      return m;
    }
    case ArrowKind::Sigma: {
      const auto& a = components(obj(0));
      const auto& b = components(obj(1));
      ArrowType ty = generator_type(t);
      TermMatrix m = empty_matrix(components(ty.target), components(ty.source));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          cell(m, j * a.size() + i, i * b.size() + j) = {
              Arrow::sigma(a[i], b[j])};
      return m;
    }
    case ArrowKind::EtaSmc:
    case ArrowKind::EpsSmc: {
      const auto& a = components(obj(0));
      const auto& b = components(obj(1));
      ArrowType ty = generator_type(t);
      TermMatrix m = empty_matrix(components(ty.target), components(ty.source));
      std::size_t na = a.size(), nb = b.size();
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
          std::size_t big = i * na * nb + i * nb + j;
          if (t.kind() == ArrowKind::EtaSmc) {
            cell(m, big, j) = {Arrow::eta_smc(a[i], b[j])};
          } else {
            cell(m, j, big) = {Arrow::eps_smc(a[i], b[j])};
          }
        }
      return m;
    }
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
    case ArrowKind::Proj1:
    case ArrowKind::Proj2: {
      ArrowType ty = generator_type(t);
      TermMatrix m = empty_matrix(components(ty.target), components(ty.source));
      bool inj = t.kind() == ArrowKind::Inj1 || t.kind() == ArrowKind::Inj2;
      bool first = t.kind() == ArrowKind::Inj1 || t.kind() == ArrowKind::Proj1;
      const auto& part = components(first ? obj(0) : obj(1));
      std::size_t offset = first ? 0 : components(obj(0)).size();
      for (std::size_t k = 0; k < part.size(); ++k) {
        if (inj) {
          cell(m, offset + k, k) = {Arrow::id(part[k])};
        } else {
          cell(m, k, offset + k) = {Arrow::id(part[k])};
        }
      }
      return m;
    }
    case ArrowKind::Zero:
      return empty_matrix(components(obj(1)), components(obj(0)));
    default:
      break;
  }
  throw ModeError("normalization is available in smcb mode only; found " +
                  std::string(to_string(t.kind())));
}

TermMatrix compose(const TermMatrix& g, const TermMatrix& f) {
  TermMatrix m = empty_matrix(g.rows, f.cols);
  for (std::size_t i = 0; i < g.rows.size(); ++i)
    for (std::size_t j = 0; j < f.cols.size(); ++j) {
      Sum& out = cell(m, i, j);
      for (std::size_t k = 0; k < f.rows.size(); ++k) {
        Sum part = product(g.at(i, k), f.at(k, j), [](const Arrow& x,
                                                      const Arrow& y) {
          return Arrow::compose(x, y);
        });
        out.insert(out.end(), part.begin(), part.end());
      }
      sort_sum(out);
    }
  return m;
}

TermMatrix add(const TermMatrix& f, const TermMatrix& g) {
  TermMatrix m = f;
  for (std::size_t k = 0; k < m.entries.size(); ++k) {
    m.entries[k].insert(m.entries[k].end(), g.entries[k].begin(),
                        g.entries[k].end());
    sort_sum(m.entries[k]);
  }
  return m;
}

std::vector<Object> kronecker_objects(const std::vector<Object>& a,
                                      const std::vector<Object>& b,
                                      bool lollipop) {
  std::vector<Object> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back(lollipop ? Object::lollipop(x, y) : Object::tensor(x, y));
  return out;
}

TermMatrix tensor(const TermMatrix& x, const TermMatrix& y) {
  TermMatrix m = empty_matrix(kronecker_objects(x.rows, y.rows, false),
                              kronecker_objects(x.cols, y.cols, false));
  std::size_t m2 = y.rows.size(), n2 = y.cols.size();
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      cell(m, i, j) = product(x.at(i / m2, j / n2), y.at(i % m2, j % n2),
                              [](const Arrow& a, const Arrow& b) {
                                return Arrow::tensor(a, b);
                              });
  return m;
}

TermMatrix dsum(const TermMatrix& x, const TermMatrix& y) {
  auto rows = x.rows;
  rows.insert(rows.end(), y.rows.begin(), y.rows.end());
  auto cols = x.cols;
  cols.insert(cols.end(), y.cols.begin(), y.cols.end());
  TermMatrix m = empty_matrix(std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < x.rows.size(); ++i)
    for (std::size_t j = 0; j < x.cols.size(); ++j) cell(m, i, j) = x.at(i, j);
  for (std::size_t i = 0; i < y.rows.size(); ++i)
    for (std::size_t j = 0; j < y.cols.size(); ++j)
      cell(m, x.rows.size() + i, x.cols.size() + j) = y.at(i, j);
  return m;
}

TermMatrix whisker(const Object& a, const TermMatrix& g) {
  const auto& c = components(a);
  TermMatrix m = empty_matrix(kronecker_objects(c, g.rows, true),
                              kronecker_objects(c, g.cols, true));
  std::size_t m2 = g.rows.size(), n2 = g.cols.size();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t k = 0; k < m2; ++k)
      for (std::size_t l = 0; l < n2; ++l) {
        Sum& out = cell(m, i * m2 + k, i * n2 + l);
        for (const auto& y : g.at(k, l)) out.push_back(Arrow::whisker(c[i], y));
        sort_sum(out);
      }
  return m;
}

}  // namespace

Arrow TermMatrix::entry_term(std::size_t i, std::size_t j) const {
  const auto& s = at(i, j);
  if (s.empty()) return Arrow::zero(cols[j], rows[i]);
  Arrow out = s.front();
  for (std::size_t k = 1; k < s.size(); ++k) out = Arrow::plus(out, s[k]);
  return out;
}

TermMatrix normalize_syntactic(const Arrow& t) {
  Arrow e = expand_derived(t, Mode::Smcb);
  infer_type(e, Mode::Smcb);
  return tree::fold<TermMatrix>(
      e, [](const Arrow& n, std::span<TermMatrix> k) -> TermMatrix {
        switch (n.kind()) {
          case ArrowKind::Compose: return compose(k[0], k[1]);
          case ArrowKind::Plus: return add(k[0], k[1]);
          case ArrowKind::Tensor: return tensor(k[0], k[1]);
          case ArrowKind::Oplus: return dsum(k[0], k[1]);
          case ArrowKind::Whisker: return whisker(n.object(0), k[0]);
          default: return base_case(n);
        }
      });
}

std::string render(const TermMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      if (j) out += ", ";
      const auto& s = m.at(i, j);
      if (s.empty()) out += "0";
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += " + ";
        out += render(s[k]);
      }
    }
  }
  return out + "]";
}

}  // namespace cobcoh
