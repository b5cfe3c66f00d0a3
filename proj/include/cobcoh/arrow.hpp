#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "cobcoh/object.hpp"

namespace cobcoh {

enum class ArrowKind : std::uint8_t {
  Id,         // id[a]
  Alpha,      // alpha[a,b,c] : a (x) (b (x) c) -> (a (x) b) (x) c
  AlphaInv,   // alpha'[a,b,c]
  Lambda,     // lambda[a] : I (x) a -> a
  LambdaInv,  // lambda'[a]
  Sigma,      // sigma[a,b] : a (x) b -> b (x) a
  EtaSmc,     // eta[a,b] : b -> a -o (a (x) b)
  EpsSmc,     // eps[a,b] : a (x) (a -o b) -> b
  EtaCc,      // eta[a] : I -> a* (x) a
  EpsCc,      // eps[a] : a (x) a* -> I
  Inj1,
  Inj2,
  Proj1,
  Proj2,
  Zero,       // zero[a,b]
  Compose,    // children {g, f}: g after f
  Plus,
  Tensor,
  Oplus,
  Whisker,    // [a -o g]
  HomMap,     // hom(f,g) : a' -o b -> a -o b' for f : a -> a', g : b -> b'
  Dagger,
};

std::string_view to_string(ArrowKind kind);
bool is_generator_kind(ArrowKind kind);

/// Immutable arrow term. Object subscripts live in `objects()`, arrow
/// operands in `children()`. Destruction of deep terms is iterative.
class Arrow {
 public:
  Arrow() = default;

  static Arrow id(Object a);
  static Arrow alpha(Object a, Object b, Object c);
  static Arrow alpha_inv(Object a, Object b, Object c);
  static Arrow lambda(Object a);
  static Arrow lambda_inv(Object a);
  static Arrow sigma(Object a, Object b);
  static Arrow eta_smc(Object a, Object b);
  static Arrow eps_smc(Object a, Object b);
  static Arrow eta_cc(Object a);
  static Arrow eps_cc(Object a);
  static Arrow inj1(Object a, Object b);
  static Arrow inj2(Object a, Object b);
  static Arrow proj1(Object a, Object b);
  static Arrow proj2(Object a, Object b);
  static Arrow zero(Object a, Object b);
  static Arrow compose(Arrow g, Arrow f);
  static Arrow plus(Arrow f, Arrow g);
  static Arrow tensor(Arrow f, Arrow g);
  static Arrow oplus(Arrow f, Arrow g);
  static Arrow whisker(Object a, Arrow g);
  static Arrow hom(Arrow f, Arrow g);
  static Arrow dagger(Arrow f);

  /// Generic constructor; arity is checked against the kind.
  static Arrow make(ArrowKind kind, std::vector<Object> objects,
                    std::vector<Arrow> kids);

  bool is_null() const { return node_ == nullptr; }
  ArrowKind kind() const;
  std::span<const Object> objects() const;
  std::span<const Arrow> children() const;
  const Object& object(std::size_t i) const { return objects()[i]; }
  const Arrow& child(std::size_t i) const { return children()[i]; }
  std::size_t hash() const;
  const void* node_id() const { return node_.get(); }

  bool is(ArrowKind k) const { return !is_null() && kind() == k; }

  friend bool operator==(const Arrow& a, const Arrow& b);
  friend std::strong_ordering operator<=>(const Arrow& a, const Arrow& b);

 private:
  struct Node;
  explicit Arrow(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  std::shared_ptr<Node> node_;
};

struct Arrow::Node {
  ArrowKind kind;
  std::vector<Object> objects;
  std::vector<Arrow> kids;
  std::size_t hash;

  ~Node();
};

/// Number of arrow nodes on the longest root-to-leaf path (a leaf is 1).
std::size_t depth(const Arrow& t);
std::size_t node_count(const Arrow& t);

/// Left fold with Compose: compose_all({h, g, f}) = h . g . f, i.e.
/// Compose(Compose(h, g), f). Requires a non-empty list.
Arrow compose_all(std::span<const Arrow> arrows);

struct ArrowHash {
  std::size_t operator()(const Arrow& a) const { return a.hash(); }
};

}  // namespace cobcoh
