#include "ld/colour_graph.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "ld/forced.hpp"
#include "ld/solver.hpp"

namespace ld {

bool colour_graph::contains_edge(int x, int y) const {
    return edge_colour(x, y).has_value();
}

std::optional<int> colour_graph::edge_colour(int x, int y) const {
    if (x > y)
        std::swap(x, y);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{x, y},
                               [](const colour_edge& e, const std::pair<int, int>& p) {
                                   return std::pair{e.x, e.y} < p;
                               });
    if (it == edges.end() || it->x != x || it->y != y)
        return std::nullopt;
    return it->colour;
}

std::vector<colour_edge> colour_graph::non_codeword_edges() const {
    std::vector<colour_edge> out;
    for (const auto& e : edges)
        if (!base_code.contains(e.x) && !base_code.contains(e.y))
            out.push_back(e);
    return out;
}

colour_graph build_colour_graph(const graph& g, code s) {
    if (!is_ld_code(g, s))
        throw std::invalid_argument("colour graph is defined for LD-codes only");
    colour_graph cg;
    cg.base_order = g.order();
    cg.base_code = s;

    std::map<std::pair<int, int>, int> by_pair;
    for (int u : s.vertices()) {
        code rest = s.without(u);
        // vertices outside S - u, grouped by their I-set under S - u; the
        // auxiliary vertex rides along with an always-empty I-set
        std::map<std::uint64_t, std::vector<int>> classes;
        classes[0].push_back(colour_graph::aux_vertex);
        for (int x = 1; x <= g.order(); ++x) {
            if (rest.contains(x))
                continue;
            classes[rest.mask() & g.closed_mask(x)].push_back(x);
        }
        for (const auto& [is, members] : classes) {
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    auto [it, fresh] = by_pair.emplace(std::pair{members[i], members[j]}, u);
                    if (!fresh && it->second != u)
                        throw std::logic_error("edge received two colours; code is not LD");
                }
            }
        }
    }
    cg.edges.reserve(by_pair.size());
    for (const auto& [xy, colour] : by_pair)
        cg.edges.push_back({xy.first, xy.second, colour});
    return cg;
}

bool structure_report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const property_check& c) { return c.passed; });
}

const property_check* structure_report::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

std::string edge_str(const colour_edge& e) {
    return std::to_string(e.x) + "-" + std::to_string(e.y) + " colour " +
           std::to_string(e.colour);
}

bool on_code(code s, int v) {
    return v != colour_graph::aux_vertex && s.contains(v);
}

// relabels CG - S onto 1..m so the plain graph routines apply
struct reduced_view {
    std::vector<int> labels;        // new -> colour-graph label
    std::vector<int> to_new;        // colour-graph label + 1 -> new label
    graph g;
    std::vector<colour_edge> edges;  // original labels

    reduced_view(const colour_graph& cg, code s) {
        to_new.assign(cg.base_order + 2, 0);
        labels.push_back(0);  // 1-based
        for (int v = 0; v <= cg.base_order; ++v) {
            if (on_code(s, v))
                continue;
            labels.push_back(v);
            to_new[v + 1] = static_cast<int>(labels.size()) - 1;
        }
        edges = cg.non_codeword_edges();
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edges.size());
        for (const auto& e : edges)
            pairs.emplace_back(to_new[e.x + 1], to_new[e.y + 1]);
        g = graph::from_edges(static_cast<int>(labels.size()) - 1, std::move(pairs));
    }
};

std::uint64_t colour_bit(int colour) {
    return std::uint64_t{1} << (colour - 1);
}

// fundamental-cycle colour parities: spanning forest first, then every
// non-tree edge closes one cycle whose parity signature must vanish
bool even_colour_cycles(const reduced_view& rv, const colour_graph& cg, std::string& why) {
    int m = rv.g.order();
    std::vector<int> parent(m + 1, -1);
    std::vector<std::uint64_t> parity(m + 1, 0);  // xor of colour bits up to the root
    std::vector<char> seen(m + 1, 0);
    std::vector<std::pair<int, int>> tree;  // edges used by the forest
    std::vector<int> order;
    for (int s = 1; s <= m; ++s) {
        if (seen[s])
            continue;
        seen[s] = 1;
        order.assign(1, s);
        while (!order.empty()) {
            int v = order.back();
            order.pop_back();
            for (int w : rv.g.neighbours(v)) {
                if (seen[w])
                    continue;
                seen[w] = 1;
                parent[w] = v;
                int cu = *cg.edge_colour(rv.labels[v], rv.labels[w]);
                parity[w] = parity[v] ^ colour_bit(cu);
                tree.emplace_back(std::min(v, w), std::max(v, w));
                order.push_back(w);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    for (auto [u, v] : rv.g.edges()) {
        if (std::binary_search(tree.begin(), tree.end(), std::pair{u, v}))
            continue;
        int cu = *cg.edge_colour(rv.labels[u], rv.labels[v]);
        if (parity[u] ^ parity[v] ^ colour_bit(cu)) {
            why = "cycle through " + std::to_string(rv.labels[u]) + "-" +
                  std::to_string(rv.labels[v]) + " has odd colour count";
            return false;
        }
    }
    return true;
}

// Bounded enumeration of edge-simple walks; a walk whose colours all appear
// an even number of times has to end where it started.
bool sampled_walks_closed(const reduced_view& rv, const colour_graph& cg, std::string& why) {
    constexpr int max_len = 8;
    constexpr long max_expansions = 500000;

    int m = rv.g.order();
    std::vector<std::vector<std::pair<int, int>>> adj(m + 1);  // (neighbour, edge id)
    for (std::size_t i = 0; i < rv.g.edges().size(); ++i) {
        auto [u, v] = rv.g.edges()[i];
        adj[u].emplace_back(v, static_cast<int>(i));
        adj[v].emplace_back(u, static_cast<int>(i));
    }
    std::vector<char> used(rv.g.edges().size(), 0);
    long budget = max_expansions;
    bool ok = true;

    auto colour_of = [&](int eid) {
        auto [u, v] = rv.g.edges()[eid];
        return *cg.edge_colour(rv.labels[u], rv.labels[v]);
    };

    // depth-first over walks from `start`, tracking colour parity as bits
    auto walk = [&](auto&& self, int start, int v, int len, std::uint64_t parity) -> void {
        if (!ok || budget <= 0)
            return;
        if (len > 0 && parity == 0 && v != start) {
            why = "open walk of length " + std::to_string(len) + " from " +
                  std::to_string(rv.labels[start]) + " to " + std::to_string(rv.labels[v]) +
                  " has all-even colours";
            ok = false;
            return;
        }
        if (len == max_len)
            return;
        for (auto [w, eid] : adj[v]) {
            if (used[eid])
                continue;
            --budget;
            used[eid] = 1;
            self(self, start, w, len + 1, parity ^ colour_bit(colour_of(eid)));
            used[eid] = 0;
            if (!ok)
                return;
        }
    };
    for (int s = 1; s <= m && ok && budget > 0; ++s)
        walk(walk, s, s, 0, 0);
    return ok;
}

}  // namespace

structure_report verify_structure(const colour_graph& cg, const graph& g, code s) {
    check_code(g, s);
    if (cg.base_order != g.order())
        throw std::invalid_argument("colour graph does not match the base graph");
    structure_report report;
    auto add = [&](std::string name, bool passed, std::string detail) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    {  // (i) codewords are never joined
        bool ok = true;
        std::string why;
        for (const auto& e : cg.edges)
            if (on_code(s, e.x) && on_code(s, e.y)) {
                ok = false;
                why = edge_str(e);
                break;
            }
        add("no-edge-between-codewords", ok, why);
    }
    {  // (ii) an edge at codeword u has colour u
        bool ok = true;
        std::string why;
        for (const auto& e : cg.edges) {
            if ((on_code(s, e.x) && e.colour != e.x) || (on_code(s, e.y) && e.colour != e.y)) {
                ok = false;
                why = edge_str(e);
                break;
            }
        }
        add("codeword-edges-carry-own-colour", ok, why);
    }
    {  // (iii) same colour never repeats at a non-codeword among non-codeword edges
        bool ok = true;
        std::string why;
        std::map<std::pair<int, int>, int> seen;  // (vertex, colour) -> count
        for (const auto& e : cg.edges) {
            if (on_code(s, e.x) || on_code(s, e.y))
                continue;
            for (int v : {e.x, e.y}) {
                if (++seen[{v, e.colour}] == 2 && ok) {
                    ok = false;
                    why = "colour " + std::to_string(e.colour) + " repeats at vertex " +
                          std::to_string(v);
                }
            }
        }
        add("colours-distinct-at-non-codewords", ok, why);
    }
    {  // (iv) u-coloured non-codeword edges straddle N(u)
        bool ok = true;
        std::string why;
        for (const auto& e : cg.edges) {
            if (on_code(s, e.x) || on_code(s, e.y))
                continue;
            bool nx = e.x != colour_graph::aux_vertex && g.adjacent(e.colour, e.x);
            bool ny = e.y != colour_graph::aux_vertex && g.adjacent(e.colour, e.y);
            if (nx == ny) {
                ok = false;
                why = edge_str(e);
                break;
            }
        }
        add("one-endpoint-next-to-colour", ok, why);
    }
    {  // (v) two u-coloured edges of a u-triangle force the third
        bool ok = true;
        std::string why;
        for (int u : s.vertices()) {
            std::vector<int> others;
            for (int v = 0; v <= cg.base_order && ok; ++v)
                if (v != u && !on_code(s, v))
                    others.push_back(v);
            for (std::size_t i = 0; i < others.size() && ok; ++i) {
                for (std::size_t j = i + 1; j < others.size() && ok; ++j) {
                    int x = others[i], y = others[j];
                    int present = 0;
                    for (auto [a, b] : {std::pair{u, x}, std::pair{u, y}, std::pair{x, y}})
                        if (cg.edge_colour(a, b) == u)
                            ++present;
                    if (present == 2) {
                        ok = false;
                        why = "triangle " + std::to_string(u) + "," + std::to_string(x) + "," +
                              std::to_string(y) + " misses one colour-" + std::to_string(u) +
                              " edge";
                    }
                }
            }
        }
        add("two-of-three-closes-triangle", ok, why);
    }
    {  // (vi) codewords have degree at most two
        bool ok = true;
        std::string why;
        std::map<int, int> deg;
        for (const auto& e : cg.edges) {
            for (int v : {e.x, e.y})
                if (on_code(s, v) && ++deg[v] == 3 && ok) {
                    ok = false;
                    why = "codeword " + std::to_string(v) + " has degree 3";
                }
        }
        add("codeword-degree-at-most-two", ok, why);
    }
    reduced_view rv(cg, s);
    {  // (vii) CG - S bipartite with even colour counts on every cycle
        bool bip = is_bipartite(rv.g);
        std::string why = bip ? "" : "odd cycle in CG - S";
        bool even = true;
        if (bip)
            even = even_colour_cycles(rv, cg, why);
        add("bipartite-even-colour-cycles", bip && even, why);
    }
    {  // (viii) spot-checked walks
        std::string why;
        bool ok = sampled_walks_closed(rv, cg, why);
        add("even-walks-are-closed", ok, why);
    }
    return report;
}

std::map<int, colour_edge_count> colour_edge_counts(const colour_graph& cg, code s) {
    std::map<int, colour_edge_count> out;
    for (int u : s.vertices())
        out[u] = {};
    for (const auto& e : cg.edges) {
        auto& slot = out[e.colour];
        ++slot.total;
        if (!on_code(s, e.x) && !on_code(s, e.y))
            ++slot.outside_code;
    }
    return out;
}

std::optional<int> swap_witness(const graph& g, code s, int v) {
    if (!s.contains(v))
        throw std::invalid_argument("swap witness is asked of a codeword");
    if (!is_ld_code(g, s))
        throw std::invalid_argument("swap witness needs an LD-code");
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("swap witness needs a connected nontrivial graph");
    for (int w : s.vertices()) {
        code rest = s.without(w);
        if (!rest.empty() && is_ld_code(g, rest))
            throw std::invalid_argument("swap witness needs a minimal code");
    }
    code base = s.without(v);
    for (int u = 1; u <= g.order(); ++u) {
        if (s.contains(u))
            continue;
        if (is_ld_code(g, base.with(u)))
            return u;
    }
    return std::nullopt;
}

namespace {

two_edge_subgraph_result assemble_two_edge(const colour_graph& cg,
                                           std::vector<colour_edge> chosen) {
    two_edge_subgraph_result r;
    std::sort(chosen.begin(), chosen.end(), [](const colour_edge& a, const colour_edge& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    r.chosen = std::move(chosen);

    std::vector<int> verts;
    for (const auto& e : r.chosen) {
        verts.push_back(e.x);
        verts.push_back(e.y);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<int> to_new(cg.base_order + 2, 0);
    r.labels.push_back(0);
    for (int v : verts) {
        r.labels.push_back(v);
        to_new[v + 1] = static_cast<int>(r.labels.size()) - 1;
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(r.chosen.size());
    for (const auto& e : r.chosen)
        pairs.emplace_back(to_new[e.x + 1], to_new[e.y + 1]);
    r.g = graph::from_edges(static_cast<int>(verts.size()), std::move(pairs));

    r.component_count = static_cast<int>(connected_components(r.g).size());
    r.bipartite = is_bipartite(r.g);
    r.components_cacti = is_cactus(r.g);
    int nv = r.g.order(), ne = r.g.edge_count();
    r.bound_applicable = nv >= 4;
    if (r.bound_applicable) {
        r.bound_holds = 4 * nv >= 3 * ne + 4 * r.component_count;
        r.bound_equality = 4 * nv == 3 * ne + 4 * r.component_count;
    }
    return r;
}

std::vector<std::vector<colour_edge>> edges_by_colour(const colour_graph& cg, code s,
                                                      code chosen_colours) {
    if (!chosen_colours.subset_of(s))
        throw std::invalid_argument("chosen colours must be codewords");
    std::vector<std::vector<colour_edge>> out;
    auto outside = cg.non_codeword_edges();
    for (int u : chosen_colours.vertices()) {
        std::vector<colour_edge> here;
        for (const auto& e : outside)
            if (e.colour == u)
                here.push_back(e);
        if (here.size() < 2)
            throw std::invalid_argument("colour " + std::to_string(u) +
                                        " has fewer than two edges outside the code");
        out.push_back(std::move(here));
    }
    return out;
}

}  // namespace

two_edge_subgraph_result two_edge_subgraph(const colour_graph& cg, code s, code chosen_colours) {
    std::vector<colour_edge> chosen;
    for (auto& pool : edges_by_colour(cg, s, chosen_colours)) {
        chosen.push_back(pool[0]);
        chosen.push_back(pool[1]);
    }
    return assemble_two_edge(cg, std::move(chosen));
}

two_edge_subgraph_result two_edge_subgraph_random(const colour_graph& cg, code s,
                                                  code chosen_colours, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::uint64_t k) {  // rejection keeps it unbiased
        std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % k;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= lim);
        return x % k;
    };
    std::vector<colour_edge> chosen;
    for (auto& pool : edges_by_colour(cg, s, chosen_colours)) {
        std::size_t i = pick(pool.size());
        std::size_t j = pick(pool.size() - 1);
        if (j >= i)
            ++j;
        chosen.push_back(pool[i]);
        chosen.push_back(pool[j]);
    }
    return assemble_two_edge(cg, std::move(chosen));
}

bool forced_bounds_report::all_ok() const {
    return !applicable || (two_thirds_holds && ratio_holds && order_bound_holds);
}

forced_bounds_report check_forced_bounds(const graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("forced-count bounds hold for connected graphs, n >= 2");
    auto census = enumerate_minimum_ld_codes(g);
    auto cls = classify_oracle(g, census);

    forced_bounds_report r;
    r.order = g.order();
    r.gamma = census.gamma;
    r.forced_count = cls.forced.size();
    r.applicable = r.forced_count >= 1;
    if (!r.applicable)
        return r;
    int n = r.order, k = r.forced_count;
    r.two_thirds_slack = 2 * (n - r.gamma) - 3 * k;
    r.ratio_slack = 2 * n - 5 * k;
    r.two_thirds_holds = r.two_thirds_slack >= 0;
    r.ratio_holds = r.ratio_slack >= 0;
    r.order_bound_holds = r.gamma <= n - 3;
    r.two_thirds_equality = r.two_thirds_slack == 0;
    r.ratio_equality = r.ratio_slack == 0;
    return r;
}

}  // namespace ld
