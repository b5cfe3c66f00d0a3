#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cobcoh/arrow.hpp"
#include "cobcoh/mode.hpp"
#include "cobcoh/random_terms.hpp"
#include "cobcoh/serialize.hpp"

namespace cobcoh {

/// One instantiation of an axiom family: every listed equation must hold.
struct AxiomInstance {
  std::vector<Object> objects;
  std::vector<std::pair<Arrow, Arrow>> equations;
};

struct AxiomFamily {
  std::string name;
  /// Part of the defining presentation of the mode (as opposed to a
  /// derived consequence).
  bool primary = true;
  std::function<AxiomInstance(Rng&, const TermShape&)> make;
};

std::vector<AxiomFamily> axiom_families(Mode mode);

struct AxiomFailure {
  std::size_t instance = 0;
  std::vector<std::string> objects;
  std::string lhs;
  std::string rhs;
  Json lhs_image;
  Json rhs_image;
};

struct FamilyReport {
  std::string name;
  bool primary = true;
  std::size_t tried = 0;
  std::vector<AxiomFailure> failures;
};

struct SuiteReport {
  Mode mode = Mode::Smcb;
  std::vector<FamilyReport> families;

  std::size_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
  Json to_json() const;
  std::string to_text() const;
};

/// Upper bound on rows * cols of any intermediate image; instances above it
/// are redrawn.
inline constexpr std::size_t kInstanceCellBudget = 4096;

/// Instantiates each family `instance_count` times over objects of depth at
/// most `object_depth`, from a per-family stream derived from `seed`, and
/// compares the images of both sides of every equation.
SuiteReport axiom_suite(Mode mode, std::size_t object_depth,
                        std::size_t instance_count, std::uint64_t seed,
                        const std::vector<std::string>& generators = {"p", "q",
                                                                      "r"});

/// Draws an instance of `family` whose equations all fit the cell budget.
AxiomInstance draw_instance(const AxiomFamily& family, Rng& rng,
                            const TermShape& shape);

}  // namespace cobcoh
