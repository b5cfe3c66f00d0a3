#include "cobcoh/cobordism.hpp"

#include <algorithm>
#include <numeric>

#include "cobcoh/error.hpp"

namespace cobcoh {

Boundary flip(const Boundary& b) {
  Boundary out(b.size());
  std::transform(b.begin(), b.end(), out.begin(), [](Sign s) {
    return s == Sign::Plus ? Sign::Minus : Sign::Plus;
  });
  return out;
}

Boundary concat(const Boundary& a, const Boundary& b) {
  Boundary out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Boundary& b) {
  std::string out;
  out.reserve(b.size());
  for (Sign s : b) out.push_back(s == Sign::Plus ? '+' : '-');
  return out;
}

Boundary parse_boundary(std::string_view text) {
  Boundary out;
  for (char c : text) {
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else {
      throw CobError("invalid sign character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

namespace {

void canonicalize(std::vector<Cobordism::Pair>& pairs) {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
}

}  // namespace

Cobordism::Cobordism(Trusted, Boundary source, Boundary target,
                     std::vector<Pair> pairs, std::uint64_t circles)
    : source_(std::move(source)),
      target_(std::move(target)),
      pairs_(std::move(pairs)),
      circles_(circles) {
  canonicalize(pairs_);
}

Cobordism::Cobordism(Boundary source, Boundary target, std::vector<Pair> pairs,
                     std::uint64_t circles)
    : Cobordism(Trusted{}, std::move(source), std::move(target),
                std::move(pairs), circles) {
  std::size_t s = source_.size();
  std::size_t n = s + target_.size();
  if (pairs_.size() * 2 != n)
    throw CobError("matching does not cover every boundary point");
  std::vector<bool> seen(n, false);
  for (auto [a, b] : pairs_) {
    if (b >= n) throw CobError("matching refers to a missing point");
    if (a == b || seen[a] || seen[b])
      throw CobError("matching uses a point twice");
    seen[a] = seen[b] = true;
    bool same_side = (a < s) == (b < s);
    bool same_sign = sign_at(a) == sign_at(b);
    if (same_side == same_sign)
      throw CobError("matching joins incompatible orientations");
  }
}

Sign Cobordism::sign_at(std::size_t point) const {
  std::size_t s = source_.size();
  return point < s ? source_[point] : target_[point - s];
}

std::strong_ordering operator<=>(const Cobordism& a, const Cobordism& b) {
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  if (auto c = a.target_ <=> b.target_; c != 0) return c;
  if (auto c = a.pairs_ <=> b.pairs_; c != 0) return c;
  return a.circles_ <=> b.circles_;
}

Cobordism Cobordism::identity(const Boundary& b) {
  auto n = static_cast<std::uint32_t>(b.size());
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
  return Cobordism(Trusted{}, b, b, std::move(pairs), 0);
}

Cobordism Cobordism::braid(const Boundary& a, const Boundary& b) {
  auto na = static_cast<std::uint32_t>(a.size());
  auto nb = static_cast<std::uint32_t>(b.size());
  std::uint32_t s = na + nb;
  std::vector<Pair> pairs;
  pairs.reserve(s);
  for (std::uint32_t i = 0; i < na; ++i) pairs.emplace_back(i, s + nb + i);
  for (std::uint32_t k = 0; k < nb; ++k) pairs.emplace_back(na + k, s + k);
  return Cobordism(Trusted{}, concat(a, b), concat(b, a), std::move(pairs), 0);
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Cobordism glue(const Cobordism& g, const Cobordism& f) {
  if (f.target() != g.source())
    throw CobError("cannot glue: boundary (" + to_string(f.target()) +
                   ") does not match (" + to_string(g.source()) + ")");
  // Global numbering: outer source 0..a-1, middle a..a+b-1, outer target
  // a+b..a+b+c-1. f's own numbering already agrees; g's shifts by a.
  auto a = static_cast<std::uint32_t>(f.source().size());
  auto b = static_cast<std::uint32_t>(f.target().size());
  auto c = static_cast<std::uint32_t>(g.target().size());
  DisjointSets sets(a + b + c);
  for (auto [x, y] : f.pairs()) sets.unite(x, y);
  for (auto [x, y] : g.pairs()) sets.unite(a + x, a + y);

  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> first_outer(a + b + c, kNone);
  std::vector<Cobordism::Pair> pairs;
  pairs.reserve((a + c) / 2);
  auto outer_index = [&](std::uint32_t p) { return p < a ? p : p - b; };
  for (std::uint32_t p = 0; p < a + b + c; ++p) {
    if (p >= a && p < a + b) continue;
    std::uint32_t r = sets.find(p);
    if (first_outer[r] == kNone) {
      first_outer[r] = p;
    } else {
      pairs.emplace_back(outer_index(first_outer[r]), outer_index(p));
    }
  }
  std::uint64_t closed = 0;
  std::vector<bool> counted(a + b + c, false);
  for (std::uint32_t p = a; p < a + b; ++p) {
    std::uint32_t r = sets.find(p);
    if (first_outer[r] == kNone && !counted[r]) {
      counted[r] = true;
      ++closed;
    }
  }
  return Cobordism(Cobordism::Trusted{}, f.source(), g.target(),
                   std::move(pairs), f.circles() + g.circles() + closed);
}

Cobordism tensor_cob(const Cobordism& f, const Cobordism& g) {
  auto a = static_cast<std::uint32_t>(f.source().size());
  auto b = static_cast<std::uint32_t>(f.target().size());
  auto c = static_cast<std::uint32_t>(g.source().size());
  auto fmap = [&](std::uint32_t x) { return x < a ? x : c + x; };
  auto gmap = [&](std::uint32_t x) { return x < c ? a + x : a + b + x; };
  std::vector<Cobordism::Pair> pairs;
  pairs.reserve(f.pairs().size() + g.pairs().size());
  for (auto [x, y] : f.pairs()) pairs.emplace_back(fmap(x), fmap(y));
  for (auto [x, y] : g.pairs()) pairs.emplace_back(gmap(x), gmap(y));
  return Cobordism(Cobordism::Trusted{}, concat(f.source(), g.source()),
                   concat(f.target(), g.target()), std::move(pairs),
                   f.circles() + g.circles());
}

namespace {

std::vector<Cobordism::Pair> swap_roles(const Cobordism& f) {
  auto na = static_cast<std::uint32_t>(f.source().size());
  auto nb = static_cast<std::uint32_t>(f.target().size());
  auto remap = [&](std::uint32_t x) { return x < na ? nb + x : x - na; };
  std::vector<Cobordism::Pair> pairs;
  pairs.reserve(f.pairs().size());
  for (auto [x, y] : f.pairs()) pairs.emplace_back(remap(x), remap(y));
  return pairs;
}

}  // namespace

Cobordism dual_cob(const Cobordism& f) {
  return Cobordism(Cobordism::Trusted{}, flip(f.target()), flip(f.source()),
                   swap_roles(f), f.circles());
}

Cobordism dagger_cob(const Cobordism& f) {
  return Cobordism(Cobordism::Trusted{}, f.target(), f.source(),
                   swap_roles(f), f.circles());
}

}  // namespace cobcoh
