#include "ld/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ld {

graph graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, {});
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    g.edges_ = std::move(edges);
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    if (n <= 64) {
        g.closed_.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v) {
            std::uint64_t m = std::uint64_t{1} << (v - 1);
            for (int w : g.adj_[v])
                m |= std::uint64_t{1} << (w - 1);
            g.closed_[v] = m;
        }
    }
    return g;
}

void graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex label out of range");
}

bool graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t graph::closed_mask(int v) const {
    check_vertex(v);
    if (!has_masks())
        throw std::invalid_argument("bitmask view needs order <= 64");
    return closed_[v];
}

std::uint64_t graph::open_mask(int v) const {
    return closed_mask(v) & ~(std::uint64_t{1} << (v - 1));
}

std::uint64_t graph::full_mask() const {
    if (!has_masks())
        throw std::invalid_argument("bitmask view needs order <= 64");
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<int> closed_neighbourhood(const graph& g, int v) {
    std::vector<int> out = g.neighbours(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

twin_kind twins(const graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw std::invalid_argument("twin test needs two distinct vertices");
    if (g.adjacent(u, v)) {
        // closed twins are adjacent: compare N[u] and N[v]
        auto a = closed_neighbourhood(g, u), b = closed_neighbourhood(g, v);
        return a == b ? twin_kind::closed_twins : twin_kind::none;
    }
    return g.neighbours(u) == g.neighbours(v) ? twin_kind::open_twins : twin_kind::none;
}

std::vector<std::vector<int>> connected_components(const graph& g) {
    int n = g.order();
    std::vector<int> comp(n + 1, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (comp[s])
            continue;
        out.emplace_back();
        comp[s] = static_cast<int>(out.size());
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbours(v))
                if (!comp[w]) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const graph& g) {
    return connected_components(g).size() <= 1;
}

bool is_bipartite(const graph& g) {
    int n = g.order();
    std::vector<int> side(n + 1, -1);
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Tarjan block decomposition; a graph is a cactus iff no block has more
// edges than vertices.
struct block_scan {
    const graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    int counter = 1;
    bool cactus = true;

    explicit block_scan(const graph& gr) : g(gr), num(gr.order() + 1, 0), low(gr.order() + 1, 0) {}

    void pop_block(std::pair<int, int> top) {
        int nv = 0, ne = 0;
        std::vector<int> seen;
        for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            ++ne;
            for (int v : {e.first, e.second}) {
                if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
                    seen.push_back(v);
                    ++nv;
                }
            }
            if (e == top)
                break;
        }
        if (ne > nv)
            cactus = false;
    }

    void dfs(int root) {
        // iterative DFS to stay safe on long paths
        struct frame {
            int v, parent;
            std::size_t next = 0;
        };
        std::vector<frame> st{{root, 0}};
        num[root] = low[root] = counter++;
        while (!st.empty()) {
            auto& f = st.back();
            const auto& nb = g.neighbours(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (!num[w]) {
                    edge_stack.push_back({f.v, w});
                    num[w] = low[w] = counter++;
                    st.push_back({w, f.v});
                } else if (w != f.parent && num[w] < num[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                st.pop_back();
                if (!st.empty()) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= num[parent])
                        pop_block({parent, v});
                }
            }
        }
    }

    bool run() {
        for (int v = 1; v <= g.order() && cactus; ++v)
            if (!num[v])
                dfs(v);
        return cactus;
    }
};

}  // namespace

bool is_cactus(const graph& g) {
    return block_scan(g).run();
}

induced_subgraph_result induced_subgraph(const graph& g, const std::vector<int>& kept) {
    std::vector<int> ks = kept;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int v : ks)
        g.check_vertex(v);

    induced_subgraph_result r;
    r.old_to_new.assign(g.order() + 1, 0);
    r.new_to_old.assign(ks.size() + 1, 0);
    int next = 1;
    for (int v : ks) {
        r.old_to_new[v] = next;
        r.new_to_old[next] = v;
        ++next;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (r.old_to_new[u] && r.old_to_new[v])
            edges.emplace_back(r.old_to_new[u], r.old_to_new[v]);
    r.g = graph::from_edges(static_cast<int>(ks.size()), std::move(edges));
    return r;
}

induced_subgraph_result delete_vertices(const graph& g, const std::vector<int>& removed) {
    std::vector<char> drop(g.order() + 1, 0);
    for (int v : removed) {
        g.check_vertex(v);
        drop[v] = 1;
    }
    std::vector<int> kept;
    for (int v = 1; v <= g.order(); ++v)
        if (!drop[v])
            kept.push_back(v);
    return induced_subgraph(g, kept);
}

namespace {

// Strips comment lines and hands out whitespace-separated tokens.
struct token_reader {
    std::istream& in;
    std::istringstream line;
    int line_no = 0;

    explicit token_reader(std::istream& s) : in(s) {}

    bool next(std::string& tok) {
        for (;;) {
            if (line >> tok)
                return true;
            std::string raw;
            if (!std::getline(in, raw))
                return false;
            ++line_no;
            auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos || raw[first] == '#')
                continue;
            line.clear();
            line.str(raw);
        }
    }

    int next_int(const char* what) {
        std::string tok;
        if (!next(tok))
            throw parse_error(std::string("unexpected end of input, wanted ") + what);
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return value;
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
        }
    }
};

}  // namespace

graph read_graph(std::istream& in) {
    token_reader tr(in);
    int n = tr.next_int("vertex count");
    int m = tr.next_int("edge count");
    if (n < 1)
        throw parse_error("vertex count must be at least 1");
    if (m < 0)
        throw parse_error("edge count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = tr.next_int("edge endpoint");
        int v = tr.next_int("edge endpoint");
        if (u < 1 || v > n || u >= v)
            throw parse_error("edge " + std::to_string(u) + " " + std::to_string(v) +
                              " violates 1 <= u < v <= n");
        edges.emplace_back(u, v);
    }
    std::string extra;
    if (tr.next(extra))
        throw parse_error("trailing token '" + extra + "' after edge list");
    try {
        return graph::from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

}  // namespace ld
