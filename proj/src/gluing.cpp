#include "jacobi/gluing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "jacobi/common.hpp"

namespace jacobi {

namespace {

void matchings_rec(std::vector<int>& pool, std::vector<std::pair<int, int>>& acc,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (pool.empty()) {
        emit(acc);
        return;
    }
    const int first = pool.front();
    for (size_t i = 1; i < pool.size(); ++i) {
        std::vector<int> rest;
        rest.reserve(pool.size() - 2);
        for (size_t j = 1; j < pool.size(); ++j)
            if (j != i) rest.push_back(pool[j]);
        acc.emplace_back(first, pool[i]);
        matchings_rec(rest, acc, emit);
        acc.pop_back();
    }
}

void check_pairs(const Diagram& d, const std::vector<std::pair<int, int>>& pairs) {
    const int n = static_cast<int>(d.legs().size());
    std::vector<char> seen(n, 0);
    for (const auto& [a, b] : pairs) {
        for (int leg : {a, b}) {
            if (leg < 0 || leg >= n)
                throw InputError("fuse_legs: leg index " + std::to_string(leg) + " out of range");
            if (seen[leg]++)
                throw InputError("fuse_legs: leg index " + std::to_string(leg) + " fused twice");
        }
        if (a == b)
            throw InputError("fuse_legs: cannot fuse a leg with itself");
    }
}

} // namespace

void for_each_perfect_matching(
    const std::vector<int>& items,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (items.size() % 2 != 0)
        throw InputError("perfect matching needs an even number of items");
    std::vector<int> pool = items;
    std::vector<std::pair<int, int>> acc;
    matchings_rec(pool, acc, emit);
}

FusedDiagram fuse_legs_tracked(const Diagram& d, const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& tracked) {
    check_pairs(d, pairs);

    std::vector<int> partner(d.half_edge_count(), -1);
    for (const auto& [a, b] : d.edges()) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<char> dead(d.half_edge_count(), 0);
    int circles = d.circles();

    // Splice pair by pair.  The partner map always joins live half-edges, so a
    // chain of fusions collapses to a single edge; a chain meeting itself is a
    // closed loop and becomes a circle.
    for (const auto& [la, lb] : pairs) {
        const int h1 = d.legs()[la].half_edge;
        const int h2 = d.legs()[lb].half_edge;
        const int a = partner[h1];
        const int b = partner[h2];
        if (a == h2) {
            circles += 1;
        } else {
            partner[a] = b;
            partner[b] = a;
        }
        dead[h1] = dead[h2] = 1;
    }

    std::vector<Leg> legs;
    std::vector<int> tracked_out(tracked.size(), -1);
    for (size_t i = 0; i < d.legs().size(); ++i) {
        if (dead[d.legs()[i].half_edge]) continue;
        for (size_t t = 0; t < tracked.size(); ++t)
            if (tracked[t] == static_cast<int>(i)) tracked_out[t] = static_cast<int>(legs.size());
        legs.push_back(d.legs()[i]);
    }
    for (size_t t = 0; t < tracked.size(); ++t)
        if (tracked_out[t] < 0) throw InputError("fuse_legs: tracked leg was fused away");

    std::vector<std::pair<int, int>> edges;
    for (int h = 0; h < d.half_edge_count(); ++h)
        if (!dead[h] && h < partner[h]) edges.emplace_back(h, partner[h]);

    return {Diagram::build(legs, d.vertices(), edges, circles), std::move(tracked_out)};
}

Diagram fuse_legs(const Diagram& d, const std::vector<std::pair<int, int>>& pairs) {
    return fuse_legs_tracked(d, pairs, {}).diagram;
}

Diagram glue_assignment(const Diagram& left, const Diagram& right,
                        const std::vector<std::pair<int, int>>& assignment) {
    const int nl = static_cast<int>(left.legs().size());
    const int nr = static_cast<int>(right.legs().size());
    std::set<int> seen_l, seen_r;
    for (const auto& [ll, rl] : assignment) {
        if (ll < 0 || ll >= nl)
            throw InputError("glue_assignment: left leg index " + std::to_string(ll) + " out of range");
        if (rl < 0 || rl >= nr)
            throw InputError("glue_assignment: right leg index " + std::to_string(rl) + " out of range");
        if (!seen_l.insert(ll).second)
            throw InputError("glue_assignment: left leg " + std::to_string(ll) + " used twice");
        if (!seen_r.insert(rl).second)
            throw InputError("glue_assignment: right leg " + std::to_string(rl) + " used twice");
        const Color rc = right.legs()[rl].color;
        if (rc.flavor == Flavor::Dual || rc.flavor == Flavor::DualBar)
            throw InputError("glue_assignment: right leg " + std::to_string(rl) +
                             " carries a dual color");
        if (!(left.legs()[ll].color == dual_of(rc)))
            throw InputError("glue_assignment: leg colors " + to_string(left.legs()[ll].color) +
                             " and " + to_string(rc) + " are not dual to each other");
    }

    const Diagram u = disjoint_union(left, right);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(assignment.size());
    for (const auto& [ll, rl] : assignment) pairs.emplace_back(ll, nl + rl);
    return fuse_legs(u, pairs);
}

namespace {

struct ColorGroup {
    std::vector<int> left;  // dual-colored leg indices on the left diagram
    std::vector<int> right; // plain-colored leg indices on the right diagram
};

// Runs the given callback once per product of per-color bijections; each call
// sees `groups` with its right lists permuted into the current bijection.
void for_each_bijection(std::vector<ColorGroup>& groups, size_t ci,
                        const std::function<void()>& emit) {
    if (ci == groups.size()) {
        emit();
        return;
    }
    auto& right = groups[ci].right;
    std::sort(right.begin(), right.end());
    do {
        for_each_bijection(groups, ci + 1, emit);
    } while (std::next_permutation(right.begin(), right.end()));
}

struct PairTask {
    const Diagram* left;
    const Diagram* right;
    Rational coeff;
};

void run_pair_task(const PairTask& task, const std::vector<Color>& X, DiagramSum& out) {
    std::vector<ColorGroup> groups;
    size_t fused = 0;
    for (const Color& x : X) {
        ColorGroup g;
        const Color dx = dual_of(x);
        for (size_t i = 0; i < task.left->legs().size(); ++i)
            if (task.left->legs()[i].color == dx) g.left.push_back(static_cast<int>(i));
        for (size_t i = 0; i < task.right->legs().size(); ++i)
            if (task.right->legs()[i].color == x) g.right.push_back(static_cast<int>(i));
        if (g.left.size() != g.right.size()) return; // leg counts disagree: term is zero
        fused += g.left.size();
        if (!g.left.empty()) groups.push_back(std::move(g));
    }

    // The union is shared across all bijections of this term pair; the group
    // construction already guarantees dual colors, so each bijection reduces
    // to a plain leg fusion on it.
    const Diagram u = disjoint_union(*task.left, *task.right);
    const int nl = static_cast<int>(task.left->legs().size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(fused);
    for_each_bijection(groups, 0, [&] {
        pairs.clear();
        for (const auto& g : groups)
            for (size_t i = 0; i < g.left.size(); ++i)
                pairs.emplace_back(g.left[i], nl + g.right[i]);
        out.add(fuse_legs(u, pairs), task.coeff);
    });
}

} // namespace

DiagramSum pairing(const DiagramSum& left, const DiagramSum& right,
                   const std::vector<Color>& X) {
    std::set<Color> seen;
    for (const Color& x : X) {
        if (x.flavor != Flavor::Plain && x.flavor != Flavor::Bar)
            throw InputError("pairing: colors must not be dual-flavored");
        if (!seen.insert(x).second)
            throw InputError("pairing: duplicate color " + to_string(x));
    }

    std::vector<PairTask> tasks;
    for (const auto& [kl, tl] : left.terms())
        for (const auto& [kr, tr] : right.terms())
            tasks.push_back({&tl.representative, &tr.representative, tl.coeff * tr.coeff});

    const int threads = std::max(1, Limits::pairing_threads());
    DiagramSum out;
    if (threads == 1 || tasks.size() < 2) {
        for (const auto& task : tasks) run_pair_task(task, X, out);
        return out;
    }

    // Each worker accumulates into its own sum; the merge adds canonical
    // classes, so the outcome never depends on how tasks were distributed.
    std::vector<DiagramSum> partial(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < tasks.size(); i += threads)
                run_pair_task(tasks[i], X, partial[w]);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
        for (const auto& [key, term] : p.terms())
            out.add_canonical(key, term.representative, term.coeff);
    return out;
}

DiagramSum translate(const DiagramSum& s, const std::vector<TranslationRule>& rules) {
    std::set<Color> sources;
    for (const auto& rule : rules)
        if (!sources.insert(rule.source).second)
            throw InputError("translate: duplicate rule for color " + to_string(rule.source));
    for (const auto& rule : rules)
        for (const auto& [target, coeff] : rule.additions) {
            if (sources.count(target))
                throw InputError("translate: target color " + to_string(target) +
                                 " is also a substitution source");
            (void)coeff;
        }
    for (const auto& [key, term] : s.terms())
        for (const Leg& leg : term.representative.legs())
            for (const auto& rule : rules)
                for (const auto& [target, coeff] : rule.additions)
                    if (leg.color == target)
                        throw InputError("translate: target color " + to_string(target) +
                                         " already occurs in the sum");

    DiagramSum out;
    if (s.truncation()) out = DiagramSum(*s.truncation());

    for (const auto& [key, term] : s.terms()) {
        const Diagram& d = term.representative;
        // Per-leg options; option 0 keeps the leg's color with weight one.
        std::vector<std::vector<std::pair<Color, Rational>>> options(d.legs().size());
        for (size_t i = 0; i < d.legs().size(); ++i) {
            options[i].emplace_back(d.legs()[i].color, Rational(1));
            for (const auto& rule : rules)
                if (rule.source == d.legs()[i].color)
                    for (const auto& add : rule.additions) options[i].push_back(add);
        }

        std::vector<size_t> choice(d.legs().size(), 0);
        for (;;) {
            std::vector<Leg> legs = d.legs();
            Rational weight = term.coeff;
            for (size_t i = 0; i < legs.size(); ++i) {
                legs[i].color = options[i][choice[i]].first;
                weight = weight * options[i][choice[i]].second;
            }
            out.add(Diagram::build(legs, d.vertices(), d.edges(), d.circles()), weight);

            size_t i = 0;
            while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
            if (i == choice.size()) break;
        }
    }
    return out;
}

} // namespace jacobi
