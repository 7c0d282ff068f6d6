#include "ld/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "ld/solver.hpp"
#include "ld/forced.hpp"

namespace ld {

graph path_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return graph::from_edges(n, std::move(edges));
}

graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return graph::from_edges(n, std::move(edges));
}

graph star_graph(int leaves) {
    if (leaves < 1)
        throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i)
        edges.emplace_back(1, i);
    return graph::from_edges(leaves + 1, std::move(edges));
}

graph broom_graph(int s, int t) {
    if (s < 1 || t < 0)
        throw std::invalid_argument("broom needs s >= 1, t >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < s; ++i)
        edges.emplace_back(i, i + 1);
    for (int j = 1; j <= t; ++j)
        edges.emplace_back(s, s + j);
    return graph::from_edges(s + t, std::move(edges));
}

graph min_void_extremal(int h) {
    if (h < 2 || h > 6)
        throw std::invalid_argument("min-void extremal graph supports 2 <= h <= 6");
    int n = h + (1 << h) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int subset = 1; subset < (1 << h); ++subset) {
        int v = h + subset;
        for (int i = 1; i <= h; ++i)
            if (subset >> (i - 1) & 1)
                edges.emplace_back(i, v);
    }
    return graph::from_edges(n, std::move(edges));
}

namespace {

struct cnf_tokens {
    std::istream& in;
    std::istringstream line;

    bool next(std::string& tok) {
        for (;;) {
            if (line >> tok)
                return true;
            std::string raw;
            if (!std::getline(in, raw))
                return false;
            auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos || raw[first] == 'c')
                continue;
            line.clear();
            line.str(raw);
        }
    }

    int next_int(const char* what) {
        std::string tok;
        if (!next(tok))
            throw parse_error(std::string("unexpected end of CNF, wanted ") + what);
        try {
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return value;
        } catch (const std::exception&) {
            throw parse_error(std::string("bad ") + what + " '" + tok + "'");
        }
    }
};

}  // namespace

cnf_instance read_dimacs_cnf(std::istream& in) {
    cnf_tokens tr{in};
    std::string tok;
    if (!tr.next(tok) || tok != "p")
        throw parse_error("expected 'p cnf <vars> <clauses>' header");
    if (!tr.next(tok) || tok != "cnf")
        throw parse_error("expected 'cnf' format tag");
    cnf_instance f;
    f.variable_count = tr.next_int("variable count");
    int clause_count = tr.next_int("clause count");
    if (f.variable_count < 1 || clause_count < 1)
        throw parse_error("CNF needs at least one variable and one clause");
    for (int j = 0; j < clause_count; ++j) {
        std::array<int, 3> clause{};
        int seen = 0;
        for (;;) {
            int lit = tr.next_int("literal");
            if (lit == 0)
                break;
            if (std::abs(lit) > f.variable_count)
                throw parse_error("literal " + std::to_string(lit) + " out of range");
            if (seen == 3)
                throw parse_error("clause " + std::to_string(j + 1) + " has more than 3 literals");
            clause[seen++] = lit;
        }
        if (seen != 3)
            throw parse_error("clause " + std::to_string(j + 1) + " must have exactly 3 literals");
        f.clauses.push_back(clause);
    }
    if (tr.next(tok))
        throw parse_error("trailing token '" + tok + "' after final clause");
    return f;
}

cnf_instance read_dimacs_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    return read_dimacs_cnf(in);
}

bool brute_force_satisfiable(const cnf_instance& f) {
    if (f.variable_count < 1 || f.variable_count > 30)
        throw std::invalid_argument("brute-force SAT supports 1..30 variables");
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f.variable_count); ++bits) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                int var = std::abs(lit);
                bool value = bits >> (var - 1) & 1;
                if ((lit > 0) == value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

reduction_graph sat_reduction(const cnf_instance& f) {
    if (f.variable_count < 1 || f.clauses.empty())
        throw std::invalid_argument("reduction needs at least one variable and one clause");
    reduction_graph r;
    r.variable_count = f.variable_count;
    r.clause_count = static_cast<int>(f.clauses.size());
    int n = 4 * r.variable_count + 3 * r.clause_count + 2;

    r.roles.assign(n + 1, reduction_role::pendant);
    for (int i = 1; i <= r.variable_count; ++i) {
        r.roles[r.positive_literal(i)] = reduction_role::positive_literal;
        r.roles[r.negative_literal(i)] = reduction_role::negative_literal;
        r.roles[r.twin_a(i)] = reduction_role::twin_a;
        r.roles[r.twin_b(i)] = reduction_role::twin_b;
    }
    for (int j = 1; j <= r.clause_count; ++j) {
        r.roles[r.clause_alpha(j)] = reduction_role::clause_alpha;
        r.roles[r.clause_beta(j)] = reduction_role::clause_beta;
        r.roles[r.clause_gamma(j)] = reduction_role::clause_gamma;
    }
    r.roles[r.hub()] = reduction_role::hub;
    r.roles[r.pendant()] = reduction_role::pendant;

    std::set<std::pair<int, int>> edges;
    auto join = [&edges](int a, int b) { edges.emplace(std::min(a, b), std::max(a, b)); };
    for (int i = 1; i <= r.variable_count; ++i) {
        join(r.positive_literal(i), r.twin_a(i));
        join(r.twin_a(i), r.negative_literal(i));
        join(r.negative_literal(i), r.twin_b(i));
        join(r.twin_b(i), r.positive_literal(i));
    }
    for (int j = 1; j <= r.clause_count; ++j) {
        join(r.clause_alpha(j), r.clause_beta(j));
        join(r.clause_beta(j), r.clause_gamma(j));
        join(r.hub(), r.clause_alpha(j));
        for (int lit : f.clauses[static_cast<std::size_t>(j - 1)]) {
            int vertex = lit > 0 ? r.positive_literal(lit) : r.negative_literal(-lit);
            join(r.clause_alpha(j), vertex);  // repeated literals collapse here
        }
    }
    join(r.hub(), r.pendant());
    r.g = graph::from_edges(n, {edges.begin(), edges.end()});
    return r;
}

bool reduction_report::all_ok() const {
    return gamma_ok && no_alpha_in_codes && one_literal_per_variable && hub_or_pendant &&
           equivalence_ok;
}

reduction_report verify_reduction(const cnf_instance& f) {
    reduction_graph r = sat_reduction(f);
    if (r.g.order() > 24)
        throw std::invalid_argument("reduction verification is limited to 4n + 3m + 2 <= 24");

    reduction_report report;
    report.satisfiable = brute_force_satisfiable(f);
    report.expected_gamma = 2 * r.variable_count + r.clause_count + 1;

    auto census = enumerate_minimum_ld_codes(r.g);
    report.gamma = census.gamma;
    report.census_count = census.count();
    report.gamma_ok = report.gamma == report.expected_gamma;

    report.no_alpha_in_codes = true;
    report.one_literal_per_variable = true;
    report.hub_or_pendant = true;
    for (const auto& c : census.codes) {
        for (int j = 1; j <= r.clause_count && report.no_alpha_in_codes; ++j)
            if (c.contains(r.clause_alpha(j)))
                report.no_alpha_in_codes = false;
        for (int i = 1; i <= r.variable_count && report.one_literal_per_variable; ++i)
            if (c.contains(r.positive_literal(i)) == c.contains(r.negative_literal(i)))
                report.one_literal_per_variable = false;
        if (c.contains(r.hub()) == c.contains(r.pendant()))
            report.hub_or_pendant = false;
    }

    auto cls = classify_oracle(r.g, census);
    report.hub_forced = cls.forced.contains(r.hub());
    report.pendant_void = cls.min_void.contains(r.pendant());
    report.equivalence_ok = report.hub_forced == !report.satisfiable &&
                            report.pendant_void == !report.satisfiable;
    return report;
}

namespace {

std::uint64_t pick_below(std::mt19937_64& rng, std::uint64_t k) {
    std::uint64_t lim = ~std::uint64_t{0} - ~std::uint64_t{0} % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= lim);
    return x % k;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

graph random_connected(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random graph needs n >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::set<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + static_cast<int>(pick_below(rng, static_cast<std::uint64_t>(v - 1)));
        edges.emplace(parent, v);
    }
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!edges.count({u, v}) && unit_real(rng) < edge_prob)
                edges.emplace(u, v);
    return graph::from_edges(n, {edges.begin(), edges.end()});
}

namespace {

// Connected graphs are generated up to isomorphism by growing each smaller
// graph with one new vertex (every connected graph has a non-cut vertex, so
// everything is reached) and keeping canonical forms only. Edge sets live in
// bitmasks indexed by vertex pairs; fine for n <= 8.

int pair_bit(int i, int j) {  // 0 <= i < j
    return j * (j - 1) / 2 + i;
}

struct pair_table {
    std::array<std::pair<int, int>, 28> decode;
    pair_table() {
        for (int j = 1; j < 8; ++j)
            for (int i = 0; i < j; ++i)
                decode[pair_bit(i, j)] = {i, j};
    }
};
const pair_table pairs;

std::uint64_t relabel_edge_mask(std::uint64_t edges, const std::array<int, 8>& pos) {
    std::uint64_t out = 0;
    while (edges) {
        int b = std::countr_zero(edges);
        edges &= edges - 1;
        auto [i, j] = pairs.decode[b];
        int a = pos[i], c = pos[j];
        if (a > c)
            std::swap(a, c);
        out |= std::uint64_t{1} << pair_bit(a, c);
    }
    return out;
}

// Minimum relabelling over all permutations that sort a degree-based vertex
// invariant; isomorphic graphs agree on the set of such relabellings, so the
// minimum is a complete canonical form.
std::uint64_t canonical_edge_mask(std::uint64_t edges, int n) {
    std::array<std::uint64_t, 8> adj{};
    for (std::uint64_t e = edges; e; e &= e - 1) {
        auto [i, j] = pairs.decode[std::countr_zero(e)];
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        inv[v].push_back(std::popcount(adj[v]));
        std::vector<int> nd;
        for (std::uint64_t m = adj[v]; m; m &= m - 1)
            nd.push_back(std::popcount(adj[std::countr_zero(m)]));
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&inv](int a, int b) { return inv[a] < inv[b]; });

    // group equal invariants; permutations run independently inside groups
    std::vector<std::pair<int, int>> groups;  // (start, length) into order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]])
            ++j;
        groups.emplace_back(i, j - i);
        i = j;
    }
    for (auto [start, len] : groups)
        std::sort(order.begin() + start, order.begin() + start + len);

    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, 8> pos{};
    for (;;) {
        for (int p = 0; p < n; ++p)
            pos[order[p]] = p;
        best = std::min(best, relabel_edge_mask(edges, pos));
        // odometer across the group permutations, last group fastest
        int g = static_cast<int>(groups.size()) - 1;
        for (; g >= 0; --g) {
            auto [start, len] = groups[g];
            if (std::next_permutation(order.begin() + start, order.begin() + start + len))
                break;
        }
        if (g < 0)
            return best;
    }
}

}  // namespace

std::vector<graph> connected_graph_catalogue(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("catalogue is generated for 1 <= n <= 8");

    static std::mutex lock;
    static std::map<int, std::vector<std::uint64_t>> cache{{1, {0}}};
    std::vector<std::uint64_t> masks;
    {
        std::lock_guard<std::mutex> guard(lock);
        int k0 = n;
        while (!cache.count(k0))
            --k0;
        for (int k = k0 + 1; k <= n; ++k) {
            std::set<std::uint64_t> next;
            for (std::uint64_t base : cache[k - 1]) {
                for (std::uint32_t nb = 1; nb < (std::uint32_t{1} << (k - 1)); ++nb) {
                    std::uint64_t grown = base;
                    for (std::uint32_t rest = nb; rest;) {
                        int i = std::countr_zero(rest);
                        rest &= rest - 1;
                        grown |= std::uint64_t{1} << pair_bit(i, k - 1);
                    }
                    next.insert(canonical_edge_mask(grown, k));
                }
            }
            cache[k] = {next.begin(), next.end()};
        }
        masks = cache[n];
    }

    std::vector<graph> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        std::vector<std::pair<int, int>> edges;
        for (std::uint64_t e = mask; e; e &= e - 1) {
            auto [i, j] = pairs.decode[std::countr_zero(e)];
            edges.emplace_back(i + 1, j + 1);
        }
        out.push_back(graph::from_edges(n, std::move(edges)));
    }
    return out;
}

}  // namespace ld
