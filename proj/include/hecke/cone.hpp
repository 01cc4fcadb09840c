#pragma once

#include "hecke/rational.hpp"

#include <optional>
#include <vector>

namespace hecke {

// Exact feasibility of  sum_j x_j * gens[j] = target,  x >= 0.
// Phase-one simplex over the rationals with Bland's rule.
std::optional<Vec> cone_coefficients(const std::vector<Vec>& gens, const Vec& target);
bool in_cone(const std::vector<Vec>& gens, const Vec& target);

// Solves A x = b for square invertible A (rows given). Throws if singular.
Vec solve_linear(std::vector<Vec> rows, Vec b);

}  // namespace hecke
