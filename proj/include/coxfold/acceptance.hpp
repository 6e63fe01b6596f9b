#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxfold/linalg.hpp"

namespace coxfold {

struct CriterionResult {
  int number = 0;
  std::string tag;  // short name accepted by --only
  std::string title;
  bool passed = false;
  std::vector<std::string> detail;  // failures first, then a summary line
};

struct AcceptanceOptions {
  /// Tags to run; empty runs everything.
  std::vector<std::string> only;
  /// Replaces the stored beta of each affine catalog entry before the null-root checks.
  /// Used to confirm that a damaged catalog is caught.
  std::function<Vector(const std::string& family, const Vector& beta)> corrupt_beta;
};

/// Tags in criterion order: roots, folding, positive, negative, fmap, affine, properties,
/// reductions, crossval.
std::vector<std::string> acceptance_tags();

/// Throws Error on an unknown tag in `only`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace coxfold
