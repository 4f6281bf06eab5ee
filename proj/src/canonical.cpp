#include "jacobi/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace jacobi {

/*
 * Canonical labeling of uni-trivalent diagrams, with orientation tracking.
 *
 * The isomorphism class of the underlying unoriented diagram is decided at the
 * vertex level: two slot-level matchings realizing the same vertex multigraph
 * differ only by permutations of parallel edge ends, so the canonical KEY can
 * be computed from the vertex multigraph alone (leg colors, edge
 * multiplicities, loop counts, circles).  Orientations live entirely in the
 * SIGN: an isomorphism contributes, at every trivalent vertex, the parity of
 * the permutation taking the vertex's stored cyclic order to the canonical
 * slot order of its image.
 *
 * Two facts keep the sign computation cheap:
 *   - swapping the two ends of a loop at a vertex is an automorphism of odd
 *     parity, so any diagram with a loop edge vanishes outright;
 *   - absent loops, swapping two parallel edges flips one transposition at
 *     each endpoint, an even move, so the sign of a labeling does not depend
 *     on how parallel edges are matched up.
 *
 * The search is a standard individualize-and-refine backtrack over ordered
 * partitions, seeded by leg colors, with equitable refinement against edge
 * multiplicities.  Every discrete leaf is visited; the minimal adjacency
 * encoding wins.  All leaves achieving the minimum are relabelings of the
 * winner by automorphisms, so collecting their signs detects orientation-
 * reversing automorphisms: if both signs occur the diagram is zero.
 */

namespace {

using Partition = std::vector<std::vector<int>>;

struct SearchState {
    const Diagram* d = nullptr;
    int n = 0;                       // total vertices
    int L = 0;                       // legs
    std::vector<std::vector<int>> adj; // multiplicities; diagonal counts loops
    std::vector<int> owner;          // half-edge -> vertex id
    bool has_loop = false;

    bool have_best = false;
    std::vector<int> best;           // minimal adjacency encoding
    std::vector<int> best_order;     // canonical position -> vertex id
    std::set<int> best_signs;
};

// Sign of the labeling `order` relative to the canonical representative's
// slot convention (edges wired in canonical pair order, lowest free slot
// first at each endpoint).
int leaf_sign(const SearchState& st, const std::vector<int>& order) {
    std::vector<int> pos(st.n);
    for (int i = 0; i < st.n; ++i)
        pos[order[i]] = i;

    struct Item { int i, j, idx; };
    std::vector<Item> items;
    items.reserve(st.d->edges().size());
    for (std::size_t e = 0; e < st.d->edges().size(); ++e) {
        const auto& [a, b] = st.d->edges()[e];
        int pi = pos[st.owner[a]];
        int pj = pos[st.owner[b]];
        if (pi > pj)
            std::swap(pi, pj);
        items.push_back({pi, pj, static_cast<int>(e)});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(x.i, x.j, x.idx) < std::tie(y.i, y.j, y.idx);
    });

    std::vector<int> slot(st.d->half_edge_count(), 0);
    std::vector<int> used(st.n, 0);
    for (const auto& it : items) {
        auto [a, b] = st.d->edges()[it.idx];
        if (pos[st.owner[a]] != it.i)
            std::swap(a, b);
        if (st.owner[a] >= st.L)
            slot[a] = used[st.owner[a]]++;
        if (st.owner[b] >= st.L)
            slot[b] = used[st.owner[b]]++;
    }

    int sign = 1;
    for (const auto& v : st.d->vertices()) {
        const int s0 = slot[v.cyclic[0]];
        const int s1 = slot[v.cyclic[1]];
        const int s2 = slot[v.cyclic[2]];
        const int inversions = (s0 > s1) + (s0 > s2) + (s1 > s2);
        if (inversions & 1)
            sign = -sign;
    }
    return sign;
}

// Equitable refinement: split every cell by each member's loop count and its
// edge multiplicity into every current cell, until stable.  Sub-cells are
// ordered by signature, which keeps the procedure isomorphism-invariant.
void refine(const SearchState& st, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        next.reserve(p.size());
        for (const auto& cell : p) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(p.size() + 1);
                sig.push_back(st.adj[v][v]);
                for (const auto& other : p) {
                    int s = 0;
                    for (int w : other)
                        s += st.adj[v][w];
                    sig.push_back(s);
                }
                split[std::move(sig)].push_back(v);
            }
            if (split.size() > 1)
                changed = true;
            for (auto& [sig, members] : split)
                next.push_back(std::move(members));
        }
        p = std::move(next);
    }
}

void search(SearchState& st, const Partition& p) {
    int target = -1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].size() > 1) {
            target = static_cast<int>(i);
            break;
        }
    }

    if (target < 0) {
        std::vector<int> order;
        order.reserve(st.n);
        for (const auto& cell : p)
            order.push_back(cell[0]);

        std::vector<int> enc;
        enc.reserve(st.n * (st.n + 1) / 2);
        for (int i = 0; i < st.n; ++i)
            for (int j = i; j < st.n; ++j)
                enc.push_back(st.adj[order[i]][order[j]]);

        if (!st.have_best || enc < st.best) {
            st.have_best = true;
            st.best = std::move(enc);
            st.best_order = order;
            st.best_signs.clear();
            if (!st.has_loop)
                st.best_signs.insert(leaf_sign(st, order));
        } else if (enc == st.best && !st.has_loop) {
            st.best_signs.insert(leaf_sign(st, order));
        }
        return;
    }

    for (std::size_t k = 0; k < p[target].size(); ++k) {
        Partition child;
        child.reserve(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (static_cast<int>(i) != target) {
                child.push_back(p[i]);
                continue;
            }
            child.push_back({p[target][k]});
            std::vector<int> rest;
            rest.reserve(p[target].size() - 1);
            for (std::size_t j = 0; j < p[target].size(); ++j)
                if (j != k)
                    rest.push_back(p[target][j]);
            child.push_back(std::move(rest));
        }
        refine(st, child);
        search(st, child);
    }
}

std::string encode_color(const Color& c) {
    std::string out;
    out += static_cast<char>('0' + static_cast<int>(c.flavor));
    out += ':';
    out += std::to_string(c.base.size());
    out += ':';
    out += c.base;
    return out;
}

// The representative realizes the canonical encoding directly: positions in
// order, legs first; edges wired pair by pair taking the lowest free slot at
// each endpoint; cyclic orders are the slot orders.  Canonicalizing the
// result reproduces the same key with sign +1.
Diagram build_representative(const std::vector<Color>& leg_colors, int triv,
                             const std::vector<std::vector<int>>& canon_adj, int circles) {
    const int L = static_cast<int>(leg_colors.size());
    const int n = L + triv;

    std::vector<int> base(n);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        base[i] = next;
        next += (i < L) ? 1 : 3;
    }

    std::vector<Leg> legs;
    legs.reserve(L);
    for (int i = 0; i < L; ++i)
        legs.push_back({base[i], leg_colors[i]});
    std::vector<TrivalentVertex> vertices;
    vertices.reserve(triv);
    for (int i = L; i < n; ++i)
        vertices.push_back({{base[i], base[i] + 1, base[i] + 2}});

    std::vector<std::pair<int, int>> edges;
    std::vector<int> used(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = 0; k < canon_adj[i][j]; ++k) {
                const int ha = base[i] + used[i]++;
                const int hb = base[j] + used[j]++;
                edges.emplace_back(ha, hb);
            }
        }
    }
    return Diagram::build(std::move(legs), std::move(vertices), std::move(edges), circles);
}

} // namespace

Canonical canonicalize(const Diagram& d) {
    if (d.vertex_count() > Limits::vertex_budget())
        throw BoundError("canonicalize: diagram has " + std::to_string(d.vertex_count()) +
                         " vertices, budget is " + std::to_string(Limits::vertex_budget()) +
                         " (JACOBI_VERTEX_BUDGET)");

    SearchState st;
    st.d = &d;
    st.L = static_cast<int>(d.legs().size());
    st.n = d.vertex_count();

    st.owner.assign(d.half_edge_count(), -1);
    for (int i = 0; i < st.L; ++i)
        st.owner[d.legs()[i].half_edge] = i;
    for (std::size_t v = 0; v < d.vertices().size(); ++v)
        for (int h : d.vertices()[v].cyclic)
            st.owner[h] = st.L + static_cast<int>(v);

    st.adj.assign(st.n, std::vector<int>(st.n, 0));
    for (const auto& [a, b] : d.edges()) {
        const int u = st.owner[a];
        const int w = st.owner[b];
        if (u == w) {
            st.adj[u][u] += 1;
            st.has_loop = true;
        } else {
            st.adj[u][w] += 1;
            st.adj[w][u] += 1;
        }
    }

    // Seed partition: legs grouped by color in color order, then one cell of
    // trivalent vertices.
    std::map<Color, std::vector<int>> by_color;
    for (int i = 0; i < st.L; ++i)
        by_color[d.legs()[i].color].push_back(i);
    Partition p;
    for (auto& [c, members] : by_color)
        p.push_back(std::move(members));
    if (st.n > st.L) {
        std::vector<int> triv(st.n - st.L);
        for (int i = st.L; i < st.n; ++i)
            triv[i - st.L] = i;
        p.push_back(std::move(triv));
    }
    refine(st, p);
    search(st, p);

    // Leg colors in canonical position order (cells are color-homogeneous, so
    // this is the same for every minimal leaf).
    std::vector<Color> leg_colors;
    leg_colors.reserve(st.L);
    for (int i = 0; i < st.L; ++i)
        leg_colors.push_back(d.legs()[st.best_order[i]].color);

    std::vector<std::vector<int>> canon_adj(st.n, std::vector<int>(st.n, 0));
    for (int i = 0; i < st.n; ++i)
        for (int j = 0; j < st.n; ++j)
            canon_adj[i][j] = st.adj[st.best_order[i]][st.best_order[j]];

    Canonical out;
    out.zero = st.has_loop || st.best_signs.size() > 1;
    out.sign = out.zero ? 0 : (st.best_signs.empty() ? 1 : *st.best_signs.begin());

    out.key.reserve(16 + 8 * st.L + st.best.size());
    for (const auto& c : leg_colors) {
        out.key += encode_color(c);
        out.key += ';';
    }
    out.key += 'T';
    out.key += std::to_string(st.n - st.L);
    out.key += ";C";
    out.key += std::to_string(d.circles());
    out.key += ';';
    for (int v : st.best)
        out.key += static_cast<char>('0' + v);

    out.representative = build_representative(leg_colors, st.n - st.L, canon_adj, d.circles());
    return out;
}

} // namespace jacobi
