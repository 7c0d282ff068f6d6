#include "ld/code.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace ld {

code code::of(std::initializer_list<int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > 64)
            throw std::invalid_argument("code vertex out of 1..64");
        m |= std::uint64_t{1} << (v - 1);
    }
    return code(m);
}

code code::from_vertices(const std::vector<int>& vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > 64)
            throw std::invalid_argument("code vertex out of 1..64");
        m |= std::uint64_t{1} << (v - 1);
    }
    return code(m);
}

int code::size() const {
    return std::popcount(mask_);
}

bool code::contains(int v) const {
    return v >= 1 && v <= 64 && (mask_ >> (v - 1) & 1);
}

code code::with(int v) const {
    if (v < 1 || v > 64)
        throw std::invalid_argument("code vertex out of 1..64");
    return code(mask_ | std::uint64_t{1} << (v - 1));
}

code code::without(int v) const {
    if (v < 1 || v > 64)
        throw std::invalid_argument("code vertex out of 1..64");
    return code(mask_ & ~(std::uint64_t{1} << (v - 1)));
}

std::vector<int> code::vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string code::to_string() const {
    if (empty())
        return "-";
    std::string out;
    for (std::uint64_t m = mask_; m; m &= m - 1) {
        if (!out.empty())
            out += ',';
        out += std::to_string(std::countr_zero(m) + 1);
    }
    return out;
}

bool operator<(code a, code b) {
    std::uint64_t x = a.mask_, y = b.mask_;
    while (x && y) {
        int vx = std::countr_zero(x), vy = std::countr_zero(y);
        if (vx != vy)
            return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y;  // shorter list with equal prefix comes first
}

void check_code(const graph& g, code s) {
    if (!g.has_masks())
        throw std::invalid_argument("code operations need graph order <= 64");
    if (s.mask() & ~g.full_mask())
        throw std::invalid_argument("code contains labels outside the graph");
}

iset i_set(const graph& g, code s, int v) {
    check_code(g, s);
    g.check_vertex(v);
    return iset(s.mask() & g.closed_mask(v));
}

namespace {

// Hot path shared with the solver: assumes s is valid for g.
bool is_ld_mask(const graph& g, std::uint64_t s) {
    std::array<std::uint64_t, 64> isets;
    int c = 0;
    for (std::uint64_t rest = g.full_mask() & ~s; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest) + 1;
        std::uint64_t is = s & g.closed_mask(v);
        if (!is)
            return false;
        isets[c++] = is;
    }
    std::sort(isets.begin(), isets.begin() + c);
    return std::adjacent_find(isets.begin(), isets.begin() + c) == isets.begin() + c;
}

}  // namespace

bool is_ld_code(const graph& g, code s) {
    check_code(g, s);
    if (s.empty())
        throw std::invalid_argument("the empty set is not a candidate LD-code");
    return is_ld_mask(g, s.mask());
}

bool is_ld_star_code(int n, code s) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("LD* check needs 1 <= n <= 64");
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (s.mask() & ~full)
        throw std::invalid_argument("code contains labels outside the path");
    std::array<std::uint64_t, 64> isets;
    int c = 0;
    // non-codewords v_1..v_{n-1}; closed path neighbourhood is v-1, v, v+1
    for (std::uint64_t rest = (full >> 1) & ~s.mask(); rest; rest &= rest - 1) {
        int v = std::countr_zero(rest) + 1;
        std::uint64_t closed = (v == 1 ? 0b11ull : 0b111ull << (v - 2)) & full;
        std::uint64_t is = s.mask() & closed;
        if (!is)
            return false;
        isets[c++] = is;
    }
    std::sort(isets.begin(), isets.begin() + c);
    return std::adjacent_find(isets.begin(), isets.begin() + c) == isets.begin() + c;
}

namespace detail {
// exposed for the solver through this internal header-free hook
bool is_ld_mask_unchecked(const graph& g, std::uint64_t s) {
    return is_ld_mask(g, s);
}
}  // namespace detail

}  // namespace ld
