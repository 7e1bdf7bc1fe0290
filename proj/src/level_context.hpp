#pragma once

#include <vector>

#include "z2pcf/ring.hpp"

namespace z2pcf::detail {

/// Read-shared per-level tables, built once on first use.
struct LevelContext {
    int level = 0;
    int dim = 1;  // 2^level
    std::vector<Int> fcoeffs;                 // f_n, constant first, monic, size dim+1
    std::vector<std::vector<Int>> red;        // red[i] = t^(dim+i) mod f_n, size dim each
    std::vector<std::vector<Int>> lift_pow;   // (t^2-2)^i padded to dim, i < dim/2
    std::vector<std::vector<Int>> split_pow;  // (u+2)^i padded to dim/2, i < dim/2
    std::vector<std::vector<Int>> sigma_basis;  // (t^3-3t)^i mod f_n, padded to dim
    std::vector<Int> traces;                  // Tr(X_n^k), k < 2*dim-1
};

const LevelContext& level_context(int level);

/// Reduce a rational coefficient vector of size <= 2*dim-1 modulo f_n in
/// place; result resized to dim.
void reduce_mod_f(const LevelContext& ctx, std::vector<Rat>& c);

}  // namespace z2pcf::detail
