#include "cobcoh/biproduct.hpp"

#include <mutex>
#include <unordered_map>

#include "cobcoh/expand.hpp"
#include "cobcoh/tree.hpp"

namespace cobcoh {

namespace {

class DecompositionCache {
 public:
  std::shared_ptr<const Decomposition> find(const Object& a) {
    std::lock_guard lock(mu_);
    auto it = table_.find(a);
    return it == table_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const Decomposition> insert(
      const Object& a, std::shared_ptr<const Decomposition> d) {
    std::lock_guard lock(mu_);
    return table_.emplace(a, std::move(d)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Object, std::shared_ptr<const Decomposition>, ObjectHash>
      table_;
};

DecompositionCache& cache() {
  static DecompositionCache instance;
  return instance;
}

Decomposition compute(const Object& a) {
  Decomposition d;
  if (is_oplus_free(a)) {
    d.components = {a};
    d.injections = {Arrow::id(a)};
    d.projections = {Arrow::id(a)};
    return d;
  }
  switch (a.kind()) {
    case ObjectKind::Tensor:
    case ObjectKind::Lollipop: {
      auto d1 = decompose(a.left());
      auto d2 = decompose(a.right());
      std::size_t n2 = d2->size();
      std::size_t n = d1->size() * n2;
      bool tensor = a.kind() == ObjectKind::Tensor;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t i1 = i / n2;
        std::size_t i2 = i % n2;
        if (tensor) {
          d.components.push_back(
              Object::tensor(d1->components[i1], d2->components[i2]));
          d.injections.push_back(
              Arrow::tensor(d1->injections[i1], d2->injections[i2]));
          d.projections.push_back(
              Arrow::tensor(d1->projections[i1], d2->projections[i2]));
        } else {
          d.components.push_back(
              Object::lollipop(d1->components[i1], d2->components[i2]));
          d.injections.push_back(
              Arrow::hom(d1->projections[i1], d2->injections[i2]));
          d.projections.push_back(
              Arrow::hom(d1->injections[i1], d2->projections[i2]));
        }
      }
      return d;
    }
    case ObjectKind::Oplus: {
      const Object& a1 = a.left();
      const Object& a2 = a.right();
      auto d1 = decompose(a1);
      auto d2 = decompose(a2);
      for (std::size_t i = 0; i < d1->size(); ++i) {
        d.components.push_back(d1->components[i]);
        d.injections.push_back(
            Arrow::compose(Arrow::inj1(a1, a2), d1->injections[i]));
        d.projections.push_back(
            Arrow::compose(d1->projections[i], Arrow::proj1(a1, a2)));
      }
      for (std::size_t i = 0; i < d2->size(); ++i) {
        d.components.push_back(d2->components[i]);
        d.injections.push_back(
            Arrow::compose(Arrow::inj2(a1, a2), d2->injections[i]));
        d.projections.push_back(
            Arrow::compose(d2->projections[i], Arrow::proj2(a1, a2)));
      }
      return d;
    }
    case ObjectKind::Dual: {
      const Object& inner = a.inner();
      auto d1 = decompose(inner);
      for (std::size_t i = 0; i < d1->size(); ++i) {
        const Object& c = d1->components[i];
        d.components.push_back(Object::dual(c));
        d.injections.push_back(dual_arrow(d1->projections[i], inner, c));
        d.projections.push_back(dual_arrow(d1->injections[i], c, inner));
      }
      return d;
    }
    default:
      break;
  }
  // Leaves are oplus-free and were handled above.
  return d;
}

}  // namespace

std::shared_ptr<const Decomposition> decompose(const Object& a) {
  if (auto hit = cache().find(a)) return hit;
  return cache().insert(a, std::make_shared<const Decomposition>(compute(a)));
}

Valuation valuation(const Object& a) {
  using V = Valuation;
  return tree::fold<V>(a, [](const Object& n, std::span<V> k) -> V {
    switch (n.kind()) {
      case ObjectKind::Unit: return V::IValued;
      case ObjectKind::Zero: return V::ZeroValued;
      case ObjectKind::Generator: return V::Neither;
      case ObjectKind::Oplus:
        if ((k[0] == V::IValued && k[1] == V::ZeroValued) ||
            (k[0] == V::ZeroValued && k[1] == V::IValued))
          return V::IValued;
        if (k[0] == V::ZeroValued && k[1] == V::ZeroValued)
          return V::ZeroValued;
        return V::Neither;
      case ObjectKind::Tensor:
      case ObjectKind::Lollipop:
        if (k[0] == V::IValued && k[1] == V::IValued) return V::IValued;
        if (k[0] == V::ZeroValued || k[1] == V::ZeroValued)
          return V::ZeroValued;
        return V::Neither;
      case ObjectKind::Dual:
        return k[0];
    }
    return V::Neither;
  });
}

std::optional<Object> find_improper_subformula(const Object& a) {
  std::optional<Object> found;
  tree::visit_preorder(a, [&](const Object& n) {
    if (found) return false;
    if (n.kind() == ObjectKind::Lollipop &&
        valuation(n.right()) == Valuation::IValued &&
        valuation(n.left()) == Valuation::Neither)
      found = n;
    return !found;
  });
  return found;
}

}  // namespace cobcoh
