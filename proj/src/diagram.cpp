#include "jacobi/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

namespace jacobi {

namespace {

std::string he_name(int id) { return "half-edge " + std::to_string(id); }

} // namespace

Diagram Diagram::build(std::vector<Leg> legs, std::vector<TrivalentVertex> vertices,
                       std::vector<std::pair<int, int>> edges, int circles) {
    if (circles < 0)
        throw InputError("diagram: negative circle count");

    // Dense half-edge ids in order of appearance on legs, then vertex slots.
    std::unordered_map<int, int> dense;
    auto claim = [&dense](int id) {
        auto [it, fresh] = dense.emplace(id, static_cast<int>(dense.size()));
        if (!fresh)
            throw InputError("diagram: " + he_name(id) + " owned twice");
        return it->second;
    };
    for (auto& leg : legs)
        leg.half_edge = claim(leg.half_edge);
    for (auto& v : vertices)
        for (auto& h : v.cyclic)
            h = claim(h);

    const int total = static_cast<int>(dense.size());
    if (static_cast<int>(edges.size()) * 2 != total)
        throw InputError("diagram: edges do not form a perfect matching (" +
                         std::to_string(edges.size()) + " edges for " +
                         std::to_string(total) + " half-edges)");

    std::vector<bool> matched(total, false);
    for (auto& e : edges) {
        auto a = dense.find(e.first);
        auto b = dense.find(e.second);
        if (a == dense.end())
            throw InputError("diagram: edge references unknown " + he_name(e.first));
        if (b == dense.end())
            throw InputError("diagram: edge references unknown " + he_name(e.second));
        e = {a->second, b->second};
        if (e.first == e.second)
            throw InputError("diagram: edge joins a half-edge to itself");
        for (int h : {e.first, e.second}) {
            if (matched[h])
                throw InputError("diagram: half-edge matched twice");
            matched[h] = true;
        }
    }

    Diagram d;
    d.legs_ = std::move(legs);
    d.vertices_ = std::move(vertices);
    d.edges_ = std::move(edges);
    d.circles_ = circles;
    return d;
}

Diagram Diagram::circles_only(int n) {
    if (n < 0)
        throw InputError("diagram: negative circle count");
    Diagram d;
    d.circles_ = n;
    return d;
}

std::map<Color, int> Diagram::census() const {
    std::map<Color, int> out;
    for (const auto& leg : legs_)
        ++out[leg.color];
    return out;
}

int Diagram::legs_of_color(const Color& c) const {
    int n = 0;
    for (const auto& leg : legs_)
        if (leg.color == c)
            ++n;
    return n;
}

int Diagram::partner(int half_edge) const {
    for (const auto& [a, b] : edges_) {
        if (a == half_edge)
            return b;
        if (b == half_edge)
            return a;
    }
    throw InputError("diagram: " + he_name(half_edge) + " has no partner");
}

std::vector<std::vector<int>> Diagram::components() const {
    const int L = static_cast<int>(legs_.size());
    const int n = vertex_count();

    // vertex id owning each half-edge
    std::vector<int> owner(half_edge_count(), -1);
    for (int i = 0; i < L; ++i)
        owner[legs_[i].half_edge] = i;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (int h : vertices_[v].cyclic)
            owner[h] = L + static_cast<int>(v);

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges_)
        parent[find(owner[a])] = find(owner[b]);

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    return out;
}

bool Diagram::is_strutless() const {
    if (circles_ > 0)
        return false;
    const int L = static_cast<int>(legs_.size());
    for (const auto& comp : components()) {
        bool has_trivalent = std::any_of(comp.begin(), comp.end(),
                                         [L](int v) { return v >= L; });
        if (!has_trivalent)
            return false;
    }
    return true;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram out = a;
    const int shift = a.half_edge_count();
    for (const auto& leg : b.legs_)
        out.legs_.push_back({leg.half_edge + shift, leg.color});
    for (const auto& v : b.vertices_)
        out.vertices_.push_back({{v.cyclic[0] + shift, v.cyclic[1] + shift, v.cyclic[2] + shift}});
    for (const auto& [x, y] : b.edges_)
        out.edges_.emplace_back(x + shift, y + shift);
    out.circles_ += b.circles_;
    return out;
}

Diagram strut(const Color& a, const Color& b) {
    return Diagram::build({{0, a}, {1, b}}, {}, {{0, 1}}, 0);
}

Grade grade(const Diagram& d) {
    return Grade{d.degree(), d.census(), d.circles()};
}

} // namespace jacobi
