#include "cobcoh/render.hpp"

#include <span>
#include <string>

#include "cobcoh/tree.hpp"

namespace cobcoh {

namespace {

int precedence(const Object& a) {
  switch (a.kind()) {
    case ObjectKind::Lollipop: return 1;
    case ObjectKind::Oplus: return 2;
    case ObjectKind::Tensor: return 3;
    case ObjectKind::Dual: return 4;
    default: return 5;
  }
}

int precedence(const Arrow& t) {
  switch (t.kind()) {
    case ArrowKind::Plus: return 1;
    case ArrowKind::Compose: return 2;
    case ArrowKind::Oplus: return 3;
    case ArrowKind::Tensor: return 4;
    default: return 5;
  }
}

std::string wrap_if(bool cond, std::string s) {
  return cond ? "(" + s + ")" : s;
}

}  // namespace

std::string render(const Object& a) {
  return tree::fold<std::string>(
      a, [](const Object& n, std::span<std::string> kids) -> std::string {
        int p = precedence(n);
        auto binary = [&](const char* op, bool right_assoc) {
          const Object& l = n.left();
          const Object& r = n.right();
          bool wrap_l = right_assoc ? precedence(l) <= p : precedence(l) < p;
          bool wrap_r = right_assoc ? precedence(r) < p : precedence(r) <= p;
          return wrap_if(wrap_l, std::move(kids[0])) + op +
                 wrap_if(wrap_r, std::move(kids[1]));
        };
        switch (n.kind()) {
          case ObjectKind::Generator: return n.name();
          case ObjectKind::Unit: return "I";
          case ObjectKind::Zero: return "0";
          case ObjectKind::Tensor: return binary(" (x) ", false);
          case ObjectKind::Oplus: return binary(" (+) ", false);
          case ObjectKind::Lollipop: return binary(" -o ", true);
          case ObjectKind::Dual:
            return wrap_if(precedence(n.inner()) < p, std::move(kids[0])) +
                   "*";
        }
        return "?";
      });
}

std::string render(const Arrow& t) {
  return tree::fold<std::string>(
      t, [](const Arrow& n, std::span<std::string> kids) -> std::string {
        int p = precedence(n);
        auto binary = [&](const char* op) {
          bool wrap_l = precedence(n.child(0)) < p;
          bool wrap_r = precedence(n.child(1)) <= p;
          return wrap_if(wrap_l, std::move(kids[0])) + op +
                 wrap_if(wrap_r, std::move(kids[1]));
        };
        switch (n.kind()) {
          case ArrowKind::Compose: return binary(" . ");
          case ArrowKind::Plus: return binary(" + ");
          case ArrowKind::Tensor: return binary(" (x) ");
          case ArrowKind::Oplus: return binary(" (+) ");
          case ArrowKind::Whisker: {
            const Object& a = n.object(0);
            return "[" +
                   wrap_if(a.kind() == ObjectKind::Lollipop, render(a)) +
                   " -o " + kids[0] + "]";
          }
          case ArrowKind::HomMap:
            return "hom(" + kids[0] + ", " + kids[1] + ")";
          case ArrowKind::Dagger:
            return "dg(" + kids[0] + ")";
          default: {
            std::string s(to_string(n.kind()));
            s += '[';
            bool first = true;
            for (const auto& o : n.objects()) {
              if (!first) s += ',';
              first = false;
              s += render(o);
            }
            s += ']';
            return s;
          }
        }
      });
}

}  // namespace cobcoh
