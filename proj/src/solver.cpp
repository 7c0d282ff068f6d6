#include "ld/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "internal.hpp"

namespace ld {

int lower_bound_information(int n) {
    if (n < 1)
        throw std::invalid_argument("information bound needs n >= 1");
    int k = 0;
    while (k < 64 && static_cast<std::uint64_t>(n) > (std::uint64_t{1} << k) - 1 + k)
        ++k;
    return k;
}

namespace {

// Vertices in a set of t mutual twins collide pairwise once two of them are
// left out of a code, so every such set contributes t - 1 forced picks.
// Open-twin classes and closed-twin classes of size >= 2 never overlap.
int twin_lower_bound(const graph& g) {
    std::map<std::uint64_t, int> open_classes, closed_classes;
    for (int v = 1; v <= g.order(); ++v) {
        ++open_classes[g.open_mask(v)];
        ++closed_classes[g.closed_mask(v)];
    }
    int bound = 0;
    for (const auto& [mask, t] : open_classes)
        bound += t - 1;
    for (const auto& [mask, t] : closed_classes)
        bound += t - 1;
    return bound;
}

// Exhaustive k-subset search in position order with two prunes: not enough
// positions left, and a vertex whose whole closed neighbourhood lies before
// the next position can no longer be dominated.
struct subset_search {
    const graph& g;
    int n;
    int k;
    bool collect;                     // otherwise stop at the first hit
    std::vector<std::uint64_t> closed0;          // by 0-based position
    std::vector<std::uint64_t> deadline_before;  // vertices with max N[v] < position
    std::vector<code> found;
    bool hit = false;

    subset_search(const graph& gr, int size, bool all) : g(gr), n(gr.order()), k(size), collect(all) {
        closed0.resize(n);
        deadline_before.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) {
            closed0[v] = g.closed_mask(v + 1);
            int top = 63 - std::countl_zero(closed0[v]);
            deadline_before[top + 1] |= std::uint64_t{1} << v;
        }
        for (int i = 1; i <= n; ++i)
            deadline_before[i] |= deadline_before[i - 1];
        rec(0, k, 0, g.full_mask());
    }

    void rec(int start, int remaining, std::uint64_t s, std::uint64_t undominated) {
        if (remaining == 0) {
            if (undominated == 0 && detail::is_ld_mask_unchecked(g, s)) {
                hit = true;
                if (collect)
                    found.push_back(code(s));
            }
            return;
        }
        for (int j = start; j <= n - remaining; ++j) {
            if (undominated & deadline_before[j])
                break;
            rec(j + 1, remaining - 1, s | std::uint64_t{1} << j, undominated & ~closed0[j]);
            if (hit && !collect)
                return;
        }
    }
};

void check_solver_input(const graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("solver needs at least one vertex");
    if (!g.has_masks())
        throw std::invalid_argument("exact solver is limited to order <= 64");
}

int gamma_connected(const graph& g) {
    int lower = std::max({1, lower_bound_information(g.order()), twin_lower_bound(g)});
    for (int k = lower; k <= g.order(); ++k)
        if (subset_search(g, k, false).hit)
            return k;
    throw std::logic_error("no LD-code found; V(G) should always be one");
}

minimum_code_census census_connected(const graph& g) {
    minimum_code_census c;
    c.gamma = gamma_connected(g);
    subset_search search(g, c.gamma, true);
    c.codes = std::move(search.found);
    std::sort(c.codes.begin(), c.codes.end());
    return c;
}

}  // namespace

int gamma_ld(const graph& g) {
    check_solver_input(g);
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return gamma_connected(g);
    int total = 0;
    for (const auto& comp : comps)
        total += gamma_connected(induced_subgraph(g, comp).g);
    return total;
}

minimum_code_census enumerate_minimum_ld_codes(const graph& g) {
    check_solver_input(g);
    auto comps = connected_components(g);
    if (comps.size() == 1)
        return census_connected(g);

    // I-sets never cross components, so minimum codes are exactly the unions
    // of per-component minimum codes.
    minimum_code_census out;
    std::vector<std::uint64_t> partial{0};
    for (const auto& comp : comps) {
        auto sub = induced_subgraph(g, comp);
        auto part = census_connected(sub.g);
        out.gamma += part.gamma;
        std::vector<std::uint64_t> lifted;
        lifted.reserve(part.codes.size());
        for (const auto& c : part.codes) {
            std::uint64_t m = 0;
            for (int v : c.vertices())
                m |= std::uint64_t{1} << (sub.new_to_old[v] - 1);
            lifted.push_back(m);
        }
        std::vector<std::uint64_t> next;
        if (partial.size() * lifted.size() > 4'000'000)
            throw std::runtime_error("census of a disconnected graph grew too large");
        next.reserve(partial.size() * lifted.size());
        for (auto a : partial)
            for (auto b : lifted)
                next.push_back(a | b);
        partial = std::move(next);
    }
    out.codes.reserve(partial.size());
    for (auto m : partial)
        out.codes.push_back(code(m));
    std::sort(out.codes.begin(), out.codes.end());
    return out;
}

int gamma_ld_star(int n) {
    if (n < 1)
        throw std::invalid_argument("gamma_ld_star needs n >= 1");
    return (2 * (n - 1) + 4) / 5;
}

namespace {

bool any_ld_star_of_size(int n, int k, int start, std::uint64_t s) {
    if (k == 0)
        return is_ld_star_code(n, code(s));
    for (int j = start; j <= n - k; ++j)
        if (any_ld_star_of_size(n, k - 1, j + 1, s | std::uint64_t{1} << j))
            return true;
    return false;
}

}  // namespace

int gamma_ld_star_exact(int n) {
    if (n < 1 || n > 25)
        throw std::invalid_argument("exhaustive LD* search is limited to 1 <= n <= 25");
    for (int k = 0; k <= n; ++k)
        if (any_ld_star_of_size(n, k, 0, 0))
            return k;
    throw std::logic_error("the full vertex set is always an LD*-code");
}

}  // namespace ld
