#include "cobcoh/typecheck.hpp"

#include <optional>
#include <string>

#include "cobcoh/error.hpp"
#include "cobcoh/render.hpp"
#include "cobcoh/tree.hpp"

namespace cobcoh {

bool kind_allowed(ArrowKind kind, Mode mode) {
  switch (kind) {
    case ArrowKind::EtaSmc:
    case ArrowKind::EpsSmc:
    case ArrowKind::Whisker:
    case ArrowKind::HomMap:
      return mode == Mode::Smcb;
    case ArrowKind::EtaCc:
    case ArrowKind::EpsCc:
      return mode != Mode::Smcb;
    case ArrowKind::Dagger:
      return mode == Mode::Dccb;
    default:
      return true;
  }
}

bool kind_primitive(ArrowKind kind, Mode mode) {
  if (!kind_allowed(kind, mode)) return false;
  if (kind == ArrowKind::HomMap) return false;
  if (mode == Mode::Dccb) {
    switch (kind) {
      case ArrowKind::AlphaInv:
      case ArrowKind::LambdaInv:
      case ArrowKind::EtaCc:
      case ArrowKind::Inj1:
      case ArrowKind::Inj2:
        return false;
      default:
        break;
    }
  }
  return true;
}

void check_arrow_mode(const Arrow& t, Mode mode) {
  tree::visit_preorder(t, [mode](const Arrow& n) {
    if (!kind_allowed(n.kind(), mode))
      throw ModeError(std::string(to_string(n.kind())) +
                      (n.objects().size() == 1 ? "[a]" : "") +
                      " is not allowed in " + std::string(to_string(mode)));
    for (const auto& o : n.objects()) check_object_mode(o, mode);
    return true;
  });
}

ArrowType generator_type(const Arrow& t) {
  auto o = t.objects();
  using O = Object;
  switch (t.kind()) {
    case ArrowKind::Id:
      return {o[0], o[0]};
    case ArrowKind::Alpha:
      return {O::tensor(o[0], O::tensor(o[1], o[2])),
              O::tensor(O::tensor(o[0], o[1]), o[2])};
    case ArrowKind::AlphaInv:
      return {O::tensor(O::tensor(o[0], o[1]), o[2]),
              O::tensor(o[0], O::tensor(o[1], o[2]))};
    case ArrowKind::Lambda:
      return {O::tensor(O::unit(), o[0]), o[0]};
    case ArrowKind::LambdaInv:
      return {o[0], O::tensor(O::unit(), o[0])};
    case ArrowKind::Sigma:
      return {O::tensor(o[0], o[1]), O::tensor(o[1], o[0])};
    case ArrowKind::EtaSmc:
      return {o[1], O::lollipop(o[0], O::tensor(o[0], o[1]))};
    case ArrowKind::EpsSmc:
      return {O::tensor(o[0], O::lollipop(o[0], o[1])), o[1]};
    case ArrowKind::EtaCc:
      return {O::unit(), O::tensor(O::dual(o[0]), o[0])};
    case ArrowKind::EpsCc:
      return {O::tensor(o[0], O::dual(o[0])), O::unit()};
    case ArrowKind::Inj1:
      return {o[0], O::oplus(o[0], o[1])};
    case ArrowKind::Inj2:
      return {o[1], O::oplus(o[0], o[1])};
    case ArrowKind::Proj1:
      return {O::oplus(o[0], o[1]), o[0]};
    case ArrowKind::Proj2:
      return {O::oplus(o[0], o[1]), o[1]};
    case ArrowKind::Zero:
      return {o[0], o[1]};
    default:
      throw std::invalid_argument("generator_type on a composite term");
  }
}

namespace {

std::string path_string(const Arrow& root, const Arrow& node) {
  std::string s = "root";
  if (auto p = tree::find_path(root, node.node_id()))
    for (auto i : *p) s += "." + std::to_string(i);
  return s;
}

std::string mismatch(const Object& x, const Object& y) {
  return render(x) + " vs " + render(y);
}

}  // namespace

ArrowType infer_type(const Arrow& t, Mode mode) {
  check_arrow_mode(t, mode);
  return tree::fold<ArrowType>(
      t, [&](const Arrow& n, std::span<ArrowType> kids) -> ArrowType {
        auto fail = [&](const std::string& msg) -> ArrowType {
          throw TypeError(path_string(t, n), msg);
        };
        switch (n.kind()) {
          case ArrowKind::Compose:
            // kids[0] = g, kids[1] = f
            if (kids[1].target != kids[0].source)
              return fail("composition: target of right operand " +
                          render(kids[1].target) +
                          " differs from source of left operand " +
                          render(kids[0].source));
            return {kids[1].source, kids[0].target};
          case ArrowKind::Plus:
            if (kids[0].source != kids[1].source)
              return fail("sum: sources differ: " +
                          mismatch(kids[0].source, kids[1].source));
            if (kids[0].target != kids[1].target)
              return fail("sum: targets differ: " +
                          mismatch(kids[0].target, kids[1].target));
            return kids[0];
          case ArrowKind::Tensor:
            return {Object::tensor(kids[0].source, kids[1].source),
                    Object::tensor(kids[0].target, kids[1].target)};
          case ArrowKind::Oplus:
            return {Object::oplus(kids[0].source, kids[1].source),
                    Object::oplus(kids[0].target, kids[1].target)};
          case ArrowKind::Whisker:
            return {Object::lollipop(n.object(0), kids[0].source),
                    Object::lollipop(n.object(0), kids[0].target)};
          case ArrowKind::HomMap:
            // f : a -> a', g : b -> b'  gives  a' -o b -> a -o b'
            return {Object::lollipop(kids[0].target, kids[1].source),
                    Object::lollipop(kids[0].source, kids[1].target)};
          case ArrowKind::Dagger:
            return {kids[0].target, kids[0].source};
          default:
            return generator_type(n);
        }
      });
}

}  // namespace cobcoh
