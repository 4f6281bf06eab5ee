#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "jacobi/canonical.hpp"
#include "jacobi/diagram.hpp"

namespace support {

using namespace jacobi;

// Theta graph: two trivalent vertices joined by three parallel edges.
inline Diagram theta() {
    return Diagram::build({}, {TrivalentVertex{{0, 1, 2}}, TrivalentVertex{{3, 4, 5}}},
                          {{0, 3}, {1, 4}, {2, 5}}, 0);
}

// Two trivalent vertices joined by a doubled edge, one leg on each.
inline Diagram two_leg_ladder(const Color& c) {
    return Diagram::build({Leg{0, c}, Leg{1, c}},
                          {TrivalentVertex{{2, 3, 4}}, TrivalentVertex{{5, 6, 7}}},
                          {{0, 2}, {1, 5}, {3, 6}, {4, 7}}, 0);
}

// Four trivalent vertices in a cycle, one leg each, colored a, a, b, b in
// cyclic order.  Connected, strutless, two legs of each color.
inline Diagram four_cycle(const Color& a, const Color& b) {
    std::vector<Leg> legs = {Leg{0, a}, Leg{1, a}, Leg{2, b}, Leg{3, b}};
    std::vector<TrivalentVertex> vs = {TrivalentVertex{{4, 5, 6}}, TrivalentVertex{{7, 8, 9}},
                                       TrivalentVertex{{10, 11, 12}},
                                       TrivalentVertex{{13, 14, 15}}};
    std::vector<std::pair<int, int>> edges = {{0, 4},  {1, 7},  {2, 10}, {3, 13},
                                              {6, 8},  {9, 11}, {12, 14}, {15, 5}};
    return Diagram::build(legs, vs, edges, 0);
}

// Single trivalent vertex with three legs.
inline Diagram y_diagram(const Color& a, const Color& b, const Color& c) {
    return Diagram::build({Leg{0, a}, Leg{1, b}, Leg{2, c}}, {TrivalentVertex{{3, 4, 5}}},
                          {{0, 3}, {1, 4}, {2, 5}}, 0);
}

// One leg, one trivalent vertex with a self-loop.
inline Diagram tadpole(const Color& c) {
    return Diagram::build({Leg{0, c}}, {TrivalentVertex{{1, 2, 3}}}, {{0, 1}, {2, 3}}, 0);
}

// Random uni-trivalent diagram: up to max_colors colors with at most
// legs_cap legs each, legs + trivalent vertices at most max_vertices, edges a
// uniform perfect matching (loops at a vertex may occur and canonicalize to
// zero), and occasionally a bare circle.
inline Diagram random_diagram(std::mt19937& rng, int max_colors, int legs_cap, int max_vertices) {
    static const std::string names[] = {"x", "y", "z"};
    for (int attempt = 0; attempt < 100; ++attempt) {
        const int ncolors = std::uniform_int_distribution<int>(1, max_colors)(rng);
        std::vector<Leg> legs;
        int next = 0;
        for (int c = 0; c < ncolors; ++c) {
            const int k = std::uniform_int_distribution<int>(0, legs_cap)(rng);
            for (int i = 0; i < k; ++i) legs.push_back(Leg{next++, plain(names[c])});
        }
        const int room = max_vertices - static_cast<int>(legs.size());
        if (room < 0) continue;
        std::vector<int> t_options;
        for (int t = 0; t <= room; ++t)
            if ((static_cast<int>(legs.size()) + 3 * t) % 2 == 0) t_options.push_back(t);
        if (t_options.empty()) continue;
        const int t = t_options[std::uniform_int_distribution<size_t>(0, t_options.size() - 1)(rng)];
        std::vector<TrivalentVertex> vs;
        for (int v = 0; v < t; ++v) {
            vs.push_back(TrivalentVertex{{next, next + 1, next + 2}});
            next += 3;
        }
        if (legs.empty() && t == 0) continue;
        std::vector<int> pool(next);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i + 1 < pool.size(); i += 2) edges.emplace_back(pool[i], pool[i + 1]);
        const int circles = std::uniform_int_distribution<int>(0, 9)(rng) == 0 ? 1 : 0;
        return Diagram::build(legs, vs, edges, circles);
    }
    return Diagram::circles_only(1);
}

struct Reencoded {
    Diagram diagram;
    int sign;
};

// Re-expresses the same diagram: half-edge ids renamed at random, leg and
// vertex lists shuffled, each vertex triple rotated (all invisible to the
// class), and with probability 1/2 one triple transposed, which negates the
// class.
inline Reencoded reencode(std::mt19937& rng, const Diagram& d) {
    const int h = d.half_edge_count();
    std::vector<int> rename(h);
    std::iota(rename.begin(), rename.end(), 0);
    std::shuffle(rename.begin(), rename.end(), rng);
    for (int& id : rename) id = 3 * id + 7;

    std::vector<Leg> legs;
    for (const Leg& leg : d.legs()) legs.push_back(Leg{rename[leg.half_edge], leg.color});
    std::shuffle(legs.begin(), legs.end(), rng);

    std::vector<TrivalentVertex> vs;
    for (const TrivalentVertex& v : d.vertices()) {
        const int rot = std::uniform_int_distribution<int>(0, 2)(rng);
        TrivalentVertex w{};
        for (int i = 0; i < 3; ++i) w.cyclic[i] = rename[v.cyclic[(i + rot) % 3]];
        vs.push_back(w);
    }
    std::shuffle(vs.begin(), vs.end(), rng);

    int sign = 1;
    if (!vs.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        auto& tri = vs[std::uniform_int_distribution<size_t>(0, vs.size() - 1)(rng)].cyclic;
        std::swap(tri[0], tri[1]);
        sign = -1;
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : d.edges()) edges.emplace_back(rename[a], rename[b]);
    std::shuffle(edges.begin(), edges.end(), rng);

    return Reencoded{Diagram::build(legs, vs, edges, d.circles()), sign};
}

// Enumerates every color-preserving automorphism by brute force and reports
// whether any reverses the orientation class, which forces the diagram to be
// zero.  Exponential; intended for small corpus diagrams only.
inline bool brute_force_is_zero(const Diagram& d) {
    const auto& legs = d.legs();
    const auto& vs = d.vertices();
    const int L = static_cast<int>(legs.size());
    const int T = static_cast<int>(vs.size());
    const int H = d.half_edge_count();

    std::vector<int> partner(H, -1);
    for (const auto& [a, b] : d.edges()) {
        partner[a] = b;
        partner[b] = a;
    }

    // Candidate leg images grouped by color, vertex images unrestricted.
    std::vector<int> leg_perm(L), vert_perm(T), slot_choice(T);
    std::iota(leg_perm.begin(), leg_perm.end(), 0);
    std::iota(vert_perm.begin(), vert_perm.end(), 0);

    static const std::array<std::array<int, 3>, 6> slot_maps = {
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    static const std::array<int, 6> slot_signs = {1, 1, 1, -1, -1, -1};

    bool found_odd = false;
    auto try_assignment = [&]() {
        for (int i = 0; i < L; ++i)
            if (!(legs[i].color == legs[leg_perm[i]].color)) return;
        // Resolve each vertex's slot map independently; edges checked last.
        std::function<void(int)> pick = [&](int v) {
            if (found_odd) return;
            if (v == T) {
                std::vector<int> image(H);
                for (int i = 0; i < L; ++i) image[legs[i].half_edge] = legs[leg_perm[i]].half_edge;
                int sign = 1;
                for (int i = 0; i < T; ++i) {
                    const auto& sm = slot_maps[slot_choice[i]];
                    for (int s = 0; s < 3; ++s)
                        image[vs[i].cyclic[s]] = vs[vert_perm[i]].cyclic[sm[s]];
                    sign *= slot_signs[slot_choice[i]];
                }
                if (sign != -1) return;
                for (int h = 0; h < H; ++h)
                    if (image[partner[h]] != partner[image[h]]) return;
                found_odd = true;
                return;
            }
            for (int c = 0; c < 6; ++c) {
                slot_choice[v] = c;
                pick(v + 1);
            }
        };
        pick(0);
    };

    std::sort(leg_perm.begin(), leg_perm.end());
    do {
        std::vector<int> vp(T);
        std::iota(vp.begin(), vp.end(), 0);
        do {
            vert_perm = vp;
            try_assignment();
            if (found_odd) return true;
        } while (std::next_permutation(vp.begin(), vp.end()));
    } while (std::next_permutation(leg_perm.begin(), leg_perm.end()));
    return false;
}

} // namespace support
