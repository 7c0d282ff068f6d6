#pragma once

#include <cstddef>
#include <vector>

#include "ld/code.hpp"
#include "ld/graph.hpp"

namespace ld {

// Every minimum locating-dominating code of a graph, in canonical order.
struct minimum_code_census {
    int gamma = 0;
    std::vector<code> codes;
    std::size_t count() const { return codes.size(); }
};

// Smallest k with n <= 2^k - 1 + k: a code of size k can tell apart at most
// 2^k - 1 non-codewords, so no smaller code can handle n vertices.
int lower_bound_information(int n);

// gamma^LD(G). Requires 1 <= n <= 64.
int gamma_ld(const graph& g);

minimum_code_census enumerate_minimum_ld_codes(const graph& g);

// gamma^LD*(P_n) by formula, ceil(2(n-1)/5).
int gamma_ld_star(int n);

// gamma^LD*(P_n) by exhaustive search over all subsets (the empty set
// included). Guarded to n <= 25.
int gamma_ld_star_exact(int n);

}  // namespace ld
