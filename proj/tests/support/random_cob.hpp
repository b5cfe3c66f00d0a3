#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "cobcoh/cob_matrix.hpp"

namespace cobcoh::testing {

inline Boundary random_boundary(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  Boundary b(len(rng));
  for (auto& s : b) s = coin(rng) ? Sign::Plus : Sign::Minus;
  return b;
}

/// Random cobordism with a prescribed target and a random source.
inline Cobordism random_cob_into(std::mt19937_64& rng, const Boundary& target) {
  std::vector<std::uint32_t> order(target.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> done(target.size(), false);
  std::bernoulli_distribution cap(0.35);
  // Strands are (source slot or -1, target point or -1) pairs; source slots
  // are permuted afterwards.
  struct Strand {
    int a;
    int b;
  };
  Boundary source;
  std::vector<Strand> strands;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> caps;
  for (std::uint32_t x : order) {
    if (done[x]) continue;
    done[x] = true;
    if (cap(rng)) {
      auto it = std::find_if(order.begin(), order.end(), [&](std::uint32_t y) {
        return !done[y] && target[y] != target[x];
      });
      if (it != order.end()) {
        done[*it] = true;
        caps.emplace_back(x, *it);
        continue;
      }
    }
    strands.push_back({static_cast<int>(source.size()), static_cast<int>(x)});
    source.push_back(target[x]);
  }
  std::uniform_int_distribution<int> cups(0, 2);
  std::vector<std::pair<int, int>> cup_slots;
  for (int k = cups(rng); k > 0; --k) {
    int s = static_cast<int>(source.size());
    source.push_back(Sign::Plus);
    source.push_back(Sign::Minus);
    cup_slots.emplace_back(s, s + 1);
  }
  std::vector<std::uint32_t> perm(source.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Boundary permuted(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) permuted[perm[i]] = source[i];
  auto s = static_cast<std::uint32_t>(source.size());
  std::vector<Cobordism::Pair> pairs;
  for (auto st : strands)
    pairs.emplace_back(perm[st.a], s + static_cast<std::uint32_t>(st.b));
  for (auto [x, y] : caps) pairs.emplace_back(s + x, s + y);
  for (auto [x, y] : cup_slots) pairs.emplace_back(perm[x], perm[y]);
  std::uniform_int_distribution<int> circles(0, 1);
  return Cobordism(permuted, target, pairs, circles(rng));
}

inline Cobordism random_cob_from(std::mt19937_64& rng, const Boundary& source) {
  return dagger_cob(random_cob_into(rng, source));
}

/// Uniformly shuffled matching between fixed ends; nullopt-like empty
/// vector when the ends admit no cobordism.
inline std::vector<Cobordism> random_parallel(std::mt19937_64& rng,
                                              const Boundary& source,
                                              const Boundary& target,
                                              int count) {
  // Effective sign: source points flipped, then every pair joins opposite
  // effective signs.
  std::vector<std::uint32_t> plus, minus;
  auto s = static_cast<std::uint32_t>(source.size());
  for (std::uint32_t i = 0; i < s; ++i)
    (source[i] == Sign::Minus ? plus : minus).push_back(i);
  for (std::uint32_t k = 0; k < target.size(); ++k)
    (target[k] == Sign::Plus ? plus : minus).push_back(s + k);
  std::vector<Cobordism> out;
  if (plus.size() != minus.size()) return out;
  std::uniform_int_distribution<int> circles(0, 1);
  for (int n = 0; n < count; ++n) {
    std::shuffle(minus.begin(), minus.end(), rng);
    std::vector<Cobordism::Pair> pairs;
    for (std::size_t i = 0; i < plus.size(); ++i)
      pairs.emplace_back(plus[i], minus[i]);
    out.emplace_back(source, target, pairs, circles(rng));
  }
  return out;
}

inline MultiCob random_multicob(std::mt19937_64& rng, const Boundary& source,
                                const Boundary& target) {
  std::uniform_int_distribution<int> count(0, 2);
  return MultiCob(source, target,
                  random_parallel(rng, source, target, count(rng)));
}

inline CobMatrix random_matrix(std::mt19937_64& rng,
                               const std::vector<Boundary>& rows,
                               const std::vector<Boundary>& cols) {
  CobMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.set(i, j, random_multicob(rng, cols[j], rows[i]));
  return m;
}

inline std::vector<Boundary> random_types(std::mt19937_64& rng,
                                          std::size_t max_count,
                                          std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> count(0, max_count);
  std::vector<Boundary> out(count(rng));
  for (auto& b : out) b = random_boundary(rng, max_len);
  return out;
}

}  // namespace cobcoh::testing
