#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cobcoh/mode.hpp"

namespace cobcoh {

enum class ObjectKind : std::uint8_t {
  Generator,
  Unit,
  Zero,
  Tensor,
  Oplus,
  Lollipop,
  Dual,
};

/// Immutable object formula over generators, I and 0. Equality is syntactic
/// tree identity; no monoidal isomorphisms are quotiented out.
class Object {
 public:
  Object() = default;

  static Object generator(std::string name);
  static Object unit();
  static Object zero();
  static Object tensor(Object left, Object right);
  static Object oplus(Object left, Object right);
  static Object lollipop(Object left, Object right);
  static Object dual(Object inner);

  bool is_null() const { return node_ == nullptr; }
  ObjectKind kind() const;
  const std::string& name() const;
  std::span<const Object> children() const;
  const Object& left() const;
  const Object& right() const;
  const Object& inner() const { return left(); }
  std::size_t hash() const;
  const void* node_id() const { return node_.get(); }

  bool is(ObjectKind k) const { return !is_null() && kind() == k; }

  friend bool operator==(const Object& a, const Object& b);
  friend std::strong_ordering operator<=>(const Object& a, const Object& b);

 private:
  struct Node;
  explicit Object(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Object make(ObjectKind kind, std::string name,
                     std::vector<Object> kids);

  std::shared_ptr<const Node> node_;
};

struct Object::Node {
  ObjectKind kind;
  std::string name;
  std::vector<Object> kids;
  std::size_t hash;
};

/// True when no Oplus node occurs.
bool is_oplus_free(const Object& a);

/// Throws ModeError if `a` uses a connective not available in `mode`.
void check_object_mode(const Object& a, Mode mode);

struct ObjectHash {
  std::size_t operator()(const Object& a) const { return a.hash(); }
};

}  // namespace cobcoh
