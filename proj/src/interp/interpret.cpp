#include "cobcoh/interpret.hpp"

#include <algorithm>
#include <string>

#include "cobcoh/biproduct.hpp"
#include "cobcoh/error.hpp"
#include "cobcoh/tree.hpp"
#include "cobcoh/typecheck.hpp"

namespace cobcoh {

using Types = std::vector<Boundary>;

std::vector<Boundary> interpret_object(const Object& a) {
  return tree::fold<Types>(a, [](const Object& n, std::span<Types> k) {
    switch (n.kind()) {
      case ObjectKind::Generator: return Types{Boundary{Sign::Plus}};
      case ObjectKind::Unit: return Types{Boundary{}};
      case ObjectKind::Zero: return Types{};
      case ObjectKind::Tensor: return kronecker_types(k[0], k[1]);
      case ObjectKind::Lollipop:
        return kronecker_types(flip_types(k[0]), k[1]);
      case ObjectKind::Oplus: {
        Types out = std::move(k[0]);
        out.insert(out.end(), k[1].begin(), k[1].end());
        return out;
      }
      case ObjectKind::Dual: return flip_types(k[0]);
    }
    return Types{};
  });
}

std::vector<std::optional<std::size_t>> component_slots(const Object& a) {
  auto d = decompose(a);
  std::vector<std::optional<std::size_t>> out;
  out.reserve(d->size());
  std::size_t next = 0;
  for (const auto& c : d->components) {
    if (interpret_object(c).empty()) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(next++);
    }
  }
  return out;
}

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

/// b -> flip(a) ++ a ++ b: caps on the a-part, wires on b.
Cobordism cap_wires(const Boundary& a, const Boundary& b) {
  std::size_t s = b.size();
  std::size_t na = a.size();
  std::vector<Cobordism::Pair> pairs;
  for (std::size_t k = 0; k < na; ++k)
    pairs.emplace_back(u32(s + k), u32(s + na + k));
  for (std::size_t m = 0; m < b.size(); ++m)
    pairs.emplace_back(u32(m), u32(s + 2 * na + m));
  return Cobordism(b, concat(flip(a), concat(a, b)), std::move(pairs));
}

/// a ++ flip(a) ++ b -> b: cups on the a-part, wires on b.
Cobordism cup_wires(const Boundary& a, const Boundary& b) {
  std::size_t na = a.size();
  std::size_t s = 2 * na + b.size();
  std::vector<Cobordism::Pair> pairs;
  for (std::size_t k = 0; k < na; ++k) pairs.emplace_back(u32(k), u32(na + k));
  for (std::size_t m = 0; m < b.size(); ++m)
    pairs.emplace_back(u32(2 * na + m), u32(s + m));
  return Cobordism(concat(a, concat(flip(a), b)), b, std::move(pairs));
}

/// () -> flip(a) ++ a.
Cobordism cc_cap(const Boundary& a) {
  std::size_t na = a.size();
  std::vector<Cobordism::Pair> pairs;
  for (std::size_t k = 0; k < na; ++k) pairs.emplace_back(u32(k), u32(na + k));
  return Cobordism(Boundary{}, concat(flip(a), a), std::move(pairs));
}

/// a ++ flip(a) -> ().
Cobordism cc_cup(const Boundary& a) {
  std::size_t na = a.size();
  std::vector<Cobordism::Pair> pairs;
  for (std::size_t k = 0; k < na; ++k) pairs.emplace_back(u32(k), u32(na + k));
  return Cobordism(concat(a, flip(a)), Boundary{}, std::move(pairs));
}

Types tensor_types(const Object& a, const Object& b) {
  return kronecker_types(interpret_object(a), interpret_object(b));
}

CobMatrix block_injection(const Types& a, const Types& b, bool first) {
  Types rows = a;
  rows.insert(rows.end(), b.begin(), b.end());
  const Types& cols = first ? a : b;
  std::size_t offset = first ? 0 : a.size();
  CobMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols.size(); ++j)
    m.set(offset + j, j, MultiCob(Cobordism::identity(cols[j])));
  return m;
}

CobMatrix generator_matrix(const Arrow& t) {
  auto obj = [&](std::size_t i) -> const Object& { return t.object(i); };
  switch (t.kind()) {
    case ArrowKind::Id:
      return identity_matrix(interpret_object(obj(0)));
    case ArrowKind::Alpha:
    case ArrowKind::AlphaInv:
      return identity_matrix(
          kronecker_types(interpret_object(obj(0)), tensor_types(obj(1), obj(2))));
    case ArrowKind::Lambda:
    case ArrowKind::LambdaInv:
      return identity_matrix(interpret_object(obj(0)));
    case ArrowKind::Sigma: {
      Types a = interpret_object(obj(0));
      Types b = interpret_object(obj(1));
      CobMatrix m(kronecker_types(b, a), kronecker_types(a, b));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          m.set(j * a.size() + i, i * b.size() + j,
                MultiCob(Cobordism::braid(a[i], b[j])));
      return m;
    }
    case ArrowKind::EtaSmc: {
      Types a = interpret_object(obj(0));
      Types b = interpret_object(obj(1));
      CobMatrix m(kronecker_types(flip_types(a), kronecker_types(a, b)), b);
      std::size_t na = a.size(), nb = b.size();
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          m.set(i * na * nb + i * nb + j, j, MultiCob(cap_wires(a[i], b[j])));
      return m;
    }
    case ArrowKind::EpsSmc: {
      Types a = interpret_object(obj(0));
      Types b = interpret_object(obj(1));
      CobMatrix m(b, kronecker_types(a, kronecker_types(flip_types(a), b)));
      std::size_t na = a.size(), nb = b.size();
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          m.set(j, i * na * nb + i * nb + j, MultiCob(cup_wires(a[i], b[j])));
      return m;
    }
    case ArrowKind::EtaCc: {
      Types a = interpret_object(obj(0));
      std::size_t na = a.size();
      CobMatrix m(kronecker_types(flip_types(a), a), Types{Boundary{}});
      for (std::size_t i = 0; i < na; ++i)
        m.set(i * na + i, 0, MultiCob(cc_cap(a[i])));
      return m;
    }
    case ArrowKind::EpsCc: {
      Types a = interpret_object(obj(0));
      std::size_t na = a.size();
      CobMatrix m(Types{Boundary{}}, kronecker_types(a, flip_types(a)));
      for (std::size_t i = 0; i < na; ++i)
        m.set(0, i * na + i, MultiCob(cc_cup(a[i])));
      return m;
    }
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
      return block_injection(interpret_object(obj(0)), interpret_object(obj(1)),
                             t.kind() == ArrowKind::Inj1);
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
      return mat_dagger(block_injection(interpret_object(obj(0)),
                                        interpret_object(obj(1)),
                                        t.kind() == ArrowKind::Proj1));
    case ArrowKind::Zero:
      return zero_matrix(interpret_object(obj(1)), interpret_object(obj(0)));
    default:
      break;
  }
  throw Error("not a generator: " + std::string(to_string(t.kind())));
}

struct CobAlgebra {
  using Value = CobMatrix;
  static Value generator(const Arrow& t) { return generator_matrix(t); }
  static Value compose(const Value& g, const Value& f) { return mat_compose(g, f); }
  static Value add(const Value& f, const Value& g) { return mat_add(f, g); }
  static Value tensor(const Value& f, const Value& g) { return mat_tensor(f, g); }
  static Value dsum(const Value& f, const Value& g) { return mat_dsum(f, g); }
  static Value hom(const Value& f, const Value& g) { return mat_hom(f, g); }
  static Value whisker(const Object& a, const Value& g) {
    return mat_hom(identity_matrix(interpret_object(a)), g);
  }
  static Value dagger(const Value& f) { return mat_dagger(f); }
};

struct NatAlgebra {
  using Value = NatMatrix;
  static Value generator(const Arrow& t) {
    return cardinality(generator_matrix(t));
  }
  static Value compose(const Value& g, const Value& f) { return nat_compose(g, f); }
  static Value add(const Value& f, const Value& g) { return nat_add(f, g); }
  static Value tensor(const Value& f, const Value& g) {
    return nat_kronecker(f, g);
  }
  static Value dsum(const Value& f, const Value& g) { return nat_dsum(f, g); }
  static Value hom(const Value& f, const Value& g) {
    return nat_kronecker(nat_transpose(f), g);
  }
  static Value whisker(const Object& a, const Value& g) {
    return nat_kronecker(nat_identity(interpret_object(a).size()), g);
  }
  static Value dagger(const Value& f) { return nat_transpose(f); }
};

template <class Algebra>
typename Algebra::Value evaluate(const Arrow& t, Mode mode) {
  infer_type(t, mode);
  using V = typename Algebra::Value;
  return tree::fold<V>(t, [](const Arrow& n, std::span<V> k) -> V {
    switch (n.kind()) {
      case ArrowKind::Compose: return Algebra::compose(k[0], k[1]);
      case ArrowKind::Plus: return Algebra::add(k[0], k[1]);
      case ArrowKind::Tensor: return Algebra::tensor(k[0], k[1]);
      case ArrowKind::Oplus: return Algebra::dsum(k[0], k[1]);
      case ArrowKind::Whisker: return Algebra::whisker(n.object(0), k[0]);
      case ArrowKind::HomMap: return Algebra::hom(k[0], k[1]);
      case ArrowKind::Dagger: return Algebra::dagger(k[0]);
      default: return Algebra::generator(n);
    }
  });
}

}  // namespace

CobMatrix interpret_arrow(const Arrow& t, Mode mode) {
  return evaluate<CobAlgebra>(t, mode);
}

NatMatrix interpret_cardinality(const Arrow& t, Mode mode) {
  return evaluate<NatAlgebra>(t, mode);
}

std::optional<MultiCob> entry_oracle(const Arrow& t, std::size_t i,
                                     std::size_t j, Mode mode) {
  ArrowType ty = infer_type(t, mode);
  auto target = decompose(ty.target);
  auto source = decompose(ty.source);
  if (i >= target->size() || j >= source->size())
    throw CobError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                   ") out of range for a " + std::to_string(target->size()) +
                   "x" + std::to_string(source->size()) + " matrix");
  Arrow direct = Arrow::compose(Arrow::compose(target->projections[i], t),
                                source->injections[j]);
  CobMatrix m = interpret_arrow(direct, mode);
  if (m.row_count() == 0 || m.col_count() == 0) return std::nullopt;
  return m.at(0, 0);
}

}  // namespace cobcoh

namespace cobcoh {

std::size_t max_image_cells(const Arrow& t) {
  struct Dims {
    std::size_t rows;
    std::size_t cols;
    std::size_t peak;
  };
  return tree::fold<Dims>(t, [](const Arrow& n, std::span<Dims> k) -> Dims {
    auto make = [&](std::size_t r, std::size_t c) {
      std::size_t peak = r * c;
      for (const auto& d : k) peak = std::max(peak, d.peak);
      return Dims{r, c, peak};
    };
    switch (n.kind()) {
      case ArrowKind::Compose: return make(k[0].rows, k[1].cols);
      case ArrowKind::Plus: return make(k[0].rows, k[0].cols);
      case ArrowKind::Tensor:
        return make(k[0].rows * k[1].rows, k[0].cols * k[1].cols);
      case ArrowKind::Oplus:
        return make(k[0].rows + k[1].rows, k[0].cols + k[1].cols);
      case ArrowKind::Whisker: {
        std::size_t a = interpret_object(n.object(0)).size();
        return make(a * k[0].rows, a * k[0].cols);
      }
      case ArrowKind::HomMap:
        return make(k[0].cols * k[1].rows, k[0].rows * k[1].cols);
      case ArrowKind::Dagger: return make(k[0].cols, k[0].rows);
      default: {
        ArrowType ty = generator_type(n);
        return make(interpret_object(ty.target).size(),
                    interpret_object(ty.source).size());
      }
    }
  }).peak;
}

}  // namespace cobcoh
