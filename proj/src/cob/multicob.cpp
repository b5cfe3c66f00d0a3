#include "cobcoh/multicob.hpp"

#include <algorithm>
#include <iterator>

#include "cobcoh/error.hpp"

namespace cobcoh {

MultiCob::MultiCob(Boundary source, Boundary target)
    : source_(std::move(source)), target_(std::move(target)) {}

MultiCob::MultiCob(Boundary source, Boundary target,
                   std::vector<Cobordism> elements)
    : source_(std::move(source)),
      target_(std::move(target)),
      elements_(std::move(elements)) {
  for (const auto& e : elements_)
    if (e.source() != source_ || e.target() != target_)
      throw CobError("multiset element has the wrong type");
  std::sort(elements_.begin(), elements_.end());
}

MultiCob::MultiCob(Cobordism single)
    : source_(single.source()), target_(single.target()) {
  elements_.push_back(std::move(single));
}

std::strong_ordering operator<=>(const MultiCob& a, const MultiCob& b) {
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  if (auto c = a.target_ <=> b.target_; c != 0) return c;
  return a.elements_ <=> b.elements_;
}

MultiCob operator+(const MultiCob& f, const MultiCob& g) {
  MultiCob out = f;
  out += g;
  return out;
}

MultiCob& operator+=(MultiCob& f, const MultiCob& g) {
  if (f.source() != g.source() || f.target() != g.target())
    throw CobError("cannot add multisets of different types");
  if (g.empty()) return f;
  std::vector<Cobordism> merged;
  merged.reserve(f.size() + g.size());
  std::merge(f.elements().begin(), f.elements().end(), g.elements().begin(),
             g.elements().end(), std::back_inserter(merged));
  f = MultiCob(f.source(), f.target(), std::move(merged));
  return f;
}

MultiCob compose(const MultiCob& g, const MultiCob& f) {
  if (f.target() != g.source())
    throw CobError("cannot compose: boundary (" + to_string(f.target()) +
                   ") does not match (" + to_string(g.source()) + ")");
  std::vector<Cobordism> out;
  out.reserve(f.size() * g.size());
  for (const auto& x : f.elements())
    for (const auto& y : g.elements()) out.push_back(glue(y, x));
  return MultiCob(f.source(), g.target(), std::move(out));
}

MultiCob tensor(const MultiCob& f, const MultiCob& g) {
  std::vector<Cobordism> out;
  out.reserve(f.size() * g.size());
  for (const auto& x : f.elements())
    for (const auto& y : g.elements()) out.push_back(tensor_cob(x, y));
  return MultiCob(concat(f.source(), g.source()),
                  concat(f.target(), g.target()), std::move(out));
}

MultiCob dual(const MultiCob& f) {
  std::vector<Cobordism> out;
  out.reserve(f.size());
  for (const auto& x : f.elements()) out.push_back(dual_cob(x));
  return MultiCob(flip(f.target()), flip(f.source()), std::move(out));
}

MultiCob dagger(const MultiCob& f) {
  std::vector<Cobordism> out;
  out.reserve(f.size());
  for (const auto& x : f.elements()) out.push_back(dagger_cob(x));
  return MultiCob(f.target(), f.source(), std::move(out));
}

}  // namespace cobcoh
