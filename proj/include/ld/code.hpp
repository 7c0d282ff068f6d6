#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ld/graph.hpp"

namespace ld {

// Vertex subset of a graph on at most 64 vertices, stored as a bitmask
// (bit v-1 stands for vertex v).
class code {
  public:
    code() = default;
    explicit code(std::uint64_t mask) : mask_(mask) {}

    static code of(std::initializer_list<int> vertices);
    static code from_vertices(const std::vector<int>& vertices);

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int size() const;

    bool contains(int v) const;
    code with(int v) const;
    code without(int v) const;

    bool subset_of(code other) const { return (mask_ & ~other.mask_) == 0; }
    std::vector<int> vertices() const;  // ascending
    std::string to_string() const;      // "2,4,7,9"; empty set -> "-"

    friend bool operator==(code a, code b) { return a.mask_ == b.mask_; }
    friend bool operator!=(code a, code b) { return a.mask_ != b.mask_; }
    // Orders codes as ascending vertex lists compared lexicographically,
    // e.g. {1,4} < {2,3} and {2} < {2,5}.
    friend bool operator<(code a, code b);

  private:
    std::uint64_t mask_ = 0;
};

// An I-set is the trace of a code on a closed neighbourhood, itself a vertex set.
using iset = code;

// Throws unless s uses valid labels of g and g fits in mask width.
void check_code(const graph& g, code s);

// I_G(S; v) = S \cap N[v]. Empty s is allowed here.
iset i_set(const graph& g, code s, int v);

// Locating-dominating code: s nonempty and the I-sets of the non-codewords
// are nonempty and pairwise distinct. Empty s is an error.
bool is_ld_code(const graph& g, code s);

// Variant on the path P_n where the last vertex v_n is excused from both the
// domination and the distinctness requirement. The empty set is permitted
// (it is a valid LD*-code of P_1).
bool is_ld_star_code(int n, code s);

}  // namespace ld
