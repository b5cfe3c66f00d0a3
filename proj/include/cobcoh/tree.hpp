#pragma once

// Explicit-stack traversals shared by object formulas and arrow terms, so
// that deep terms never exhaust the call stack. `Handle` must expose
// `children()` returning a contiguous range of `Handle`, and `node_id()`
// returning a pointer identifying the underlying node.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cobcoh::tree {

/// Post-order fold: `combine(node, std::span<Result> child_results)`.
template <class Result, class Handle, class Combine>
Result fold(const Handle& root, Combine&& combine) {
  struct Frame {
    Handle node;
    std::size_t next;
    std::size_t base;
  };
  std::vector<Frame> stack;
  std::vector<Result> results;
  stack.push_back(Frame{root, 0, 0});
  while (!stack.empty()) {
    std::size_t top = stack.size() - 1;
    auto kids = stack[top].node.children();
    if (stack[top].next < kids.size()) {
      Handle child = kids[stack[top].next];
      ++stack[top].next;
      stack.push_back(Frame{std::move(child), 0, results.size()});
      continue;
    }
    std::size_t base = stack[top].base;
    Result r = combine(stack[top].node,
                       std::span<Result>(results.data() + base,
                                         results.size() - base));
    results.resize(base);
    results.push_back(std::move(r));
    stack.pop_back();
  }
  return std::move(results.back());
}

/// Pre-order visit of every node; `visit(node)` returning false prunes the
/// children of that node.
template <class Handle, class Visit>
void visit_preorder(const Handle& root, Visit&& visit) {
  std::vector<Handle> stack{root};
  while (!stack.empty()) {
    Handle node = std::move(stack.back());
    stack.pop_back();
    if (!visit(node)) continue;
    auto kids = node.children();
    for (std::size_t i = kids.size(); i-- > 0;) stack.push_back(kids[i]);
  }
}

/// Lexicographic three-way comparison. `local(a, b)` compares the node
/// labels only (kind, name, annotations) and returns <0, 0 or >0.
template <class Handle, class Local>
int compare(const Handle& a, const Handle& b, Local&& local) {
  std::vector<std::pair<Handle, Handle>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = std::move(stack.back());
    stack.pop_back();
    if (x.node_id() == y.node_id()) continue;
    if (int c = local(x, y); c != 0) return c;
    auto xs = x.children();
    auto ys = y.children();
    if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
    for (std::size_t i = xs.size(); i-- > 0;) stack.emplace_back(xs[i], ys[i]);
  }
  return 0;
}

/// Child-index path from `root` to the first node whose id is `target`.
template <class Handle>
std::optional<std::vector<std::size_t>> find_path(const Handle& root,
                                                  const void* target) {
  struct Frame {
    Handle node;
    std::size_t next;
  };
  std::vector<Frame> stack{Frame{root, 0}};
  if (root.node_id() == target) return std::vector<std::size_t>{};
  while (!stack.empty()) {
    auto& top = stack.back();
    auto kids = top.node.children();
    if (top.next >= kids.size()) {
      stack.pop_back();
      continue;
    }
    Handle child = kids[top.next++];
    if (child.node_id() == target) {
      std::vector<std::size_t> path;
      for (const auto& f : stack) path.push_back(f.next - 1);
      return path;
    }
    stack.push_back(Frame{std::move(child), 0});
  }
  return std::nullopt;
}

}  // namespace cobcoh::tree
