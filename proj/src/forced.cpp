#include "ld/forced.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ld {

vertex_classification classify_oracle(const graph& g, const minimum_code_census& census) {
    std::uint64_t everywhere = g.full_mask();
    std::uint64_t somewhere = 0;
    for (const auto& c : census.codes) {
        everywhere &= c.mask();
        somewhere |= c.mask();
    }
    vertex_classification out;
    out.forced = code(everywhere);
    out.min_void = code(g.full_mask() & ~somewhere);
    out.free_vertices = code(g.full_mask() & somewhere & ~everywhere);
    return out;
}

vertex_classification classify_oracle(const graph& g) {
    return classify_oracle(g, enumerate_minimum_ld_codes(g));
}

bool is_min_forced_characterization(const graph& g, int v) {
    g.check_vertex(v);
    if (g.degree(v) == 0)
        return true;
    int gamma = gamma_ld(g);
    auto del = delete_vertices(g, {v});
    int gamma_del = gamma_ld(del.g);
    if (gamma_del > gamma)
        return true;
    if (gamma_del < gamma)
        return false;
    // v is forced unless some minimum code of G - v already dominates v and
    // separates it from every vertex it leaves uncovered
    for (const auto& small : enumerate_minimum_ld_codes(del.g).codes) {
        std::uint64_t lifted = 0;
        for (int x : small.vertices())
            lifted |= std::uint64_t{1} << (del.new_to_old[x] - 1);
        code s(lifted);
        iset at_v = i_set(g, s, v);
        if (at_v.empty())
            continue;
        bool separated = true;
        for (std::uint64_t rest = g.full_mask() & ~lifted; rest; rest &= rest - 1) {
            int w = std::countr_zero(rest) + 1;
            if (w != v && i_set(g, s, w) == at_v) {
                separated = false;
                break;
            }
        }
        if (separated)
            return false;
    }
    return true;
}

code classify_by_characterization(const graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("classification needs at least one vertex");
    std::uint64_t forced = 0;
    for (int v = 1; v <= g.order(); ++v)
        if (is_min_forced_characterization(g, v))
            forced |= std::uint64_t{1} << (v - 1);
    return code(forced);
}

bool is_non_swappable(const graph& g, code s, int v) {
    if (!s.contains(v))
        throw std::invalid_argument("swap candidate must be a codeword");
    if (!is_ld_code(g, s))
        throw std::invalid_argument("non-swappability is asked of LD-codes");
    code base = s.without(v);
    if (!base.empty() && is_ld_code(g, base))
        return false;  // dropping v without replacement already works
    for (int u = 1; u <= g.order(); ++u) {
        if (s.contains(u))
            continue;
        if (is_ld_code(g, base.with(u)))
            return false;
    }
    return true;
}

}  // namespace ld
