#include "cobcoh/object.hpp"

#include <cassert>

#include "cobcoh/error.hpp"
#include "cobcoh/tree.hpp"

namespace cobcoh {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Object Object::make(ObjectKind kind, std::string name,
                    std::vector<Object> kids) {
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::string>{}(name));
  for (const auto& k : kids) {
    assert(!k.is_null());
    h = mix(h, k.hash());
  }
  return Object(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(kids), h}));
}

Object Object::generator(std::string name) {
  return make(ObjectKind::Generator, std::move(name), {});
}

Object Object::unit() {
  static const Object instance = make(ObjectKind::Unit, "", {});
  return instance;
}

Object Object::zero() {
  static const Object instance = make(ObjectKind::Zero, "", {});
  return instance;
}

Object Object::tensor(Object left, Object right) {
  return make(ObjectKind::Tensor, "", {std::move(left), std::move(right)});
}

Object Object::oplus(Object left, Object right) {
  return make(ObjectKind::Oplus, "", {std::move(left), std::move(right)});
}

Object Object::lollipop(Object left, Object right) {
  return make(ObjectKind::Lollipop, "", {std::move(left), std::move(right)});
}

Object Object::dual(Object inner) {
  return make(ObjectKind::Dual, "", {std::move(inner)});
}

ObjectKind Object::kind() const { return node_->kind; }
const std::string& Object::name() const { return node_->name; }
std::span<const Object> Object::children() const { return node_->kids; }
const Object& Object::left() const { return node_->kids.at(0); }
const Object& Object::right() const { return node_->kids.at(1); }
std::size_t Object::hash() const { return node_ ? node_->hash : 0; }

namespace {

int compare_local(const Object& x, const Object& y) {
  if (x.kind() != y.kind()) return x.kind() < y.kind() ? -1 : 1;
  return x.name().compare(y.name());
}

}  // namespace

bool operator==(const Object& a, const Object& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_ || a.hash() != b.hash()) return false;
  return tree::compare(a, b, compare_local) == 0;
}

std::strong_ordering operator<=>(const Object& a, const Object& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  int c = tree::compare(a, b, compare_local);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

bool is_oplus_free(const Object& a) {
  bool free = true;
  tree::visit_preorder(a, [&](const Object& n) {
    if (n.kind() == ObjectKind::Oplus) free = false;
    return free;
  });
  return free;
}

void check_object_mode(const Object& a, Mode mode) {
  tree::visit_preorder(a, [&](const Object& n) {
    if (n.kind() == ObjectKind::Lollipop && mode != Mode::Smcb)
      throw ModeError("-o is not allowed in " + std::string(to_string(mode)));
    if (n.kind() == ObjectKind::Dual && mode == Mode::Smcb)
      throw ModeError("Dual not allowed in SMCB");
    return true;
  });
}

}  // namespace cobcoh
