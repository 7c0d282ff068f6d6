#pragma once

#include "ld/code.hpp"
#include "ld/graph.hpp"
#include "ld/solver.hpp"

namespace ld {

// Partition of V(G) by membership across all minimum LD-codes:
// forced = in every minimum code, min_void = in none, free = the rest.
struct vertex_classification {
    code forced;
    code min_void;
    code free_vertices;
};

vertex_classification classify_oracle(const graph& g);
vertex_classification classify_oracle(const graph& g, const minimum_code_census& census);

// Deletion-based test for "v lies in every minimum LD-code":
//   (i)   v is isolated, or
//   (ii)  gamma(G - v) > gamma(G), or
//   (iii) gamma(G - v) = gamma(G) and no minimum LD-code S of G - v, read in
//         the labels of G, both dominates v and separates it from every
//         vertex outside S + v.
bool is_min_forced_characterization(const graph& g, int v);

// Applies the deletion test to every vertex.
code classify_by_characterization(const graph& g);

// v in S is non-swappable if no single-vertex exchange S - v + u (removal
// alone included) yields an LD-code.
bool is_non_swappable(const graph& g, code s, int v);

}  // namespace ld
