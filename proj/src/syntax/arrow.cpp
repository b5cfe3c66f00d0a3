#include "cobcoh/arrow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cobcoh/tree.hpp"

namespace cobcoh {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct Arity {
  std::size_t objects;
  std::size_t kids;
};

Arity arity(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::Id:
    case ArrowKind::Lambda:
    case ArrowKind::LambdaInv:
    case ArrowKind::EtaCc:
    case ArrowKind::EpsCc:
      return {1, 0};
    case ArrowKind::Alpha:
    case ArrowKind::AlphaInv:
      return {3, 0};
    case ArrowKind::Sigma:
    case ArrowKind::EtaSmc:
    case ArrowKind::EpsSmc:
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
    case ArrowKind::Zero:
      return {2, 0};
    case ArrowKind::Compose:
    case ArrowKind::Plus:
    case ArrowKind::Tensor:
    case ArrowKind::Oplus:
    case ArrowKind::HomMap:
      return {0, 2};
    case ArrowKind::Whisker:
      return {1, 1};
    case ArrowKind::Dagger:
      return {0, 1};
  }
  return {0, 0};
}

}  // namespace

std::string_view to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::Id: return "id";
    case ArrowKind::Alpha: return "alpha";
    case ArrowKind::AlphaInv: return "alpha'";
    case ArrowKind::Lambda: return "lambda";
    case ArrowKind::LambdaInv: return "lambda'";
    case ArrowKind::Sigma: return "sigma";
    case ArrowKind::EtaSmc:
    case ArrowKind::EtaCc: return "eta";
    case ArrowKind::EpsSmc:
    case ArrowKind::EpsCc: return "eps";
    case ArrowKind::Inj1: return "inj1";
    case ArrowKind::Inj2: return "inj2";
    case ArrowKind::Proj1: return "proj1";
    case ArrowKind::Proj2: return "proj2";
    case ArrowKind::Zero: return "zero";
    case ArrowKind::Compose: return "compose";
    case ArrowKind::Plus: return "plus";
    case ArrowKind::Tensor: return "tensor";
    case ArrowKind::Oplus: return "oplus";
    case ArrowKind::Whisker: return "whisker";
    case ArrowKind::HomMap: return "hom";
    case ArrowKind::Dagger: return "dg";
  }
  return "?";
}

bool is_generator_kind(ArrowKind kind) { return arity(kind).kids == 0; }

Arrow::Node::~Node() {
  // Unlink uniquely owned descendants into a worklist so that releasing a
  // long chain does not recurse once per level.
  std::vector<std::shared_ptr<Node>> pending;
  auto steal = [&pending](std::vector<Arrow>& kids) {
    for (auto& k : kids)
      if (k.node_ && k.node_.use_count() == 1)
        pending.push_back(std::move(k.node_));
    kids.clear();
  };
  steal(kids);
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    steal(n->kids);
  }
}

Arrow Arrow::make(ArrowKind kind, std::vector<Object> objects,
                  std::vector<Arrow> kids) {
  Arity a = arity(kind);
  if (objects.size() != a.objects || kids.size() != a.kids)
    throw std::invalid_argument("wrong arity for arrow constructor " +
                                std::string(to_string(kind)));
  std::size_t h = mix(0xa11ce, static_cast<std::size_t>(kind));
  for (const auto& o : objects) {
    if (o.is_null()) throw std::invalid_argument("null object subscript");
    h = mix(h, o.hash());
  }
  for (const auto& k : kids) {
    if (k.is_null()) throw std::invalid_argument("null arrow operand");
    h = mix(h, k.hash());
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->objects = std::move(objects);
  node->kids = std::move(kids);
  node->hash = h;
  return Arrow(std::move(node));
}

Arrow Arrow::id(Object a) { return make(ArrowKind::Id, {std::move(a)}, {}); }
Arrow Arrow::alpha(Object a, Object b, Object c) {
  return make(ArrowKind::Alpha, {std::move(a), std::move(b), std::move(c)}, {});
}
Arrow Arrow::alpha_inv(Object a, Object b, Object c) {
  return make(ArrowKind::AlphaInv, {std::move(a), std::move(b), std::move(c)},
              {});
}
Arrow Arrow::lambda(Object a) {
  return make(ArrowKind::Lambda, {std::move(a)}, {});
}
Arrow Arrow::lambda_inv(Object a) {
  return make(ArrowKind::LambdaInv, {std::move(a)}, {});
}
Arrow Arrow::sigma(Object a, Object b) {
  return make(ArrowKind::Sigma, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::eta_smc(Object a, Object b) {
  return make(ArrowKind::EtaSmc, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::eps_smc(Object a, Object b) {
  return make(ArrowKind::EpsSmc, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::eta_cc(Object a) {
  return make(ArrowKind::EtaCc, {std::move(a)}, {});
}
Arrow Arrow::eps_cc(Object a) {
  return make(ArrowKind::EpsCc, {std::move(a)}, {});
}
Arrow Arrow::inj1(Object a, Object b) {
  return make(ArrowKind::Inj1, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::inj2(Object a, Object b) {
  return make(ArrowKind::Inj2, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::proj1(Object a, Object b) {
  return make(ArrowKind::Proj1, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::proj2(Object a, Object b) {
  return make(ArrowKind::Proj2, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::zero(Object a, Object b) {
  return make(ArrowKind::Zero, {std::move(a), std::move(b)}, {});
}
Arrow Arrow::compose(Arrow g, Arrow f) {
  return make(ArrowKind::Compose, {}, {std::move(g), std::move(f)});
}
Arrow Arrow::plus(Arrow f, Arrow g) {
  return make(ArrowKind::Plus, {}, {std::move(f), std::move(g)});
}
Arrow Arrow::tensor(Arrow f, Arrow g) {
  return make(ArrowKind::Tensor, {}, {std::move(f), std::move(g)});
}
Arrow Arrow::oplus(Arrow f, Arrow g) {
  return make(ArrowKind::Oplus, {}, {std::move(f), std::move(g)});
}
Arrow Arrow::whisker(Object a, Arrow g) {
  return make(ArrowKind::Whisker, {std::move(a)}, {std::move(g)});
}
Arrow Arrow::hom(Arrow f, Arrow g) {
  return make(ArrowKind::HomMap, {}, {std::move(f), std::move(g)});
}
Arrow Arrow::dagger(Arrow f) {
  return make(ArrowKind::Dagger, {}, {std::move(f)});
}

ArrowKind Arrow::kind() const { return node_->kind; }
std::span<const Object> Arrow::objects() const { return node_->objects; }
std::span<const Arrow> Arrow::children() const { return node_->kids; }
std::size_t Arrow::hash() const { return node_ ? node_->hash : 0; }

namespace {

int compare_local(const Arrow& x, const Arrow& y) {
  if (x.kind() != y.kind()) return x.kind() < y.kind() ? -1 : 1;
  auto xo = x.objects();
  auto yo = y.objects();
  for (std::size_t i = 0; i < xo.size(); ++i) {
    auto c = xo[i] <=> yo[i];
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool operator==(const Arrow& a, const Arrow& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.hash() != b.hash()) return false;
  return tree::compare(a, b, compare_local) == 0;
}

std::strong_ordering operator<=>(const Arrow& a, const Arrow& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  int c = tree::compare(a, b, compare_local);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

std::size_t depth(const Arrow& t) {
  return tree::fold<std::size_t>(
      t, [](const Arrow&, std::span<std::size_t> kids) {
        std::size_t d = 0;
        for (auto k : kids) d = std::max(d, k);
        return d + 1;
      });
}

std::size_t node_count(const Arrow& t) {
  std::size_t n = 0;
  tree::visit_preorder(t, [&n](const Arrow&) {
    ++n;
    return true;
  });
  return n;
}

Arrow compose_all(std::span<const Arrow> arrows) {
  if (arrows.empty()) throw std::invalid_argument("compose_all of nothing");
  Arrow acc = arrows[0];
  for (std::size_t i = 1; i < arrows.size(); ++i)
    acc = Arrow::compose(acc, arrows[i]);
  return acc;
}

}  // namespace cobcoh
