#include "jacobi/relations.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "jacobi/common.hpp"
#include "jacobi/gluing.hpp"

namespace jacobi {

namespace {

void check_stubs(const Diagram& d, const std::vector<int>& stubs, const char* what) {
    std::set<int> seen;
    for (int s : stubs) {
        if (s < 0 || s >= static_cast<int>(d.legs().size()))
            throw InputError(std::string(what) + ": stub leg index " + std::to_string(s) +
                             " out of range");
        if (!seen.insert(s).second)
            throw InputError(std::string(what) + ": stub leg " + std::to_string(s) +
                             " listed twice");
    }
}

} // namespace

DiagramSum p_instance(const Diagram& context, const std::vector<int>& stubs) {
    check_stubs(context, stubs, "p_instance");
    if (stubs.size() % 2 != 0)
        throw InputError("p_instance: needs an even number of stubs");

    DiagramSum out;
    for_each_perfect_matching(stubs, [&](const std::vector<std::pair<int, int>>& pairs) {
        out.add(fuse_legs(context, pairs), Rational(1));
    });
    return out;
}

DiagramSum c_instance(const Diagram& context, const std::vector<int>& up,
                      const std::vector<int>& down) {
    check_stubs(context, up, "c_instance");
    check_stubs(context, down, "c_instance");
    for (int u : up)
        if (std::find(down.begin(), down.end(), u) != down.end())
            throw InputError("c_instance: leg " + std::to_string(u) + " is in both groups");
    if (up.size() != down.size())
        throw InputError("c_instance: stub groups differ in size");

    DiagramSum out;
    std::vector<int> sigma = down;
    std::sort(sigma.begin(), sigma.end());
    do {
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < up.size(); ++i) pairs.emplace_back(up[i], sigma[i]);
        out.add(fuse_legs(context, pairs), Rational(1));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

DiagramSum ckl_instance(const Diagram& context, const std::vector<int>& up,
                        const std::vector<int>& down) {
    check_stubs(context, up, "ckl_instance");
    check_stubs(context, down, "ckl_instance");
    for (int u : up)
        if (std::find(down.begin(), down.end(), u) != down.end())
            throw InputError("ckl_instance: leg " + std::to_string(u) + " is in both groups");
    if (up.size() > down.size())
        throw InputError("ckl_instance: more up stubs than down stubs");
    if ((down.size() - up.size()) % 2 != 0)
        throw InputError("ckl_instance: down surplus must be even");

    DiagramSum out;
    const size_t k = up.size();
    // Injections up -> down as ordered k-subsets: choose positions, permute.
    std::vector<int> sorted_down = down;
    std::sort(sorted_down.begin(), sorted_down.end());
    std::vector<char> mask(sorted_down.size(), 0);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), 1);
    std::sort(mask.begin(), mask.end()); // lowest combination first

    do {
        std::vector<int> image, rest;
        for (size_t i = 0; i < mask.size(); ++i)
            (mask[i] ? image : rest).push_back(sorted_down[i]);
        std::sort(image.begin(), image.end());
        do {
            std::vector<std::pair<int, int>> base;
            for (size_t i = 0; i < k; ++i) base.emplace_back(up[i], image[i]);
            for_each_perfect_matching(rest, [&](const std::vector<std::pair<int, int>>& tail) {
                std::vector<std::pair<int, int>> pairs = base;
                pairs.insert(pairs.end(), tail.begin(), tail.end());
                out.add(fuse_legs(context, pairs), Rational(1));
            });
        } while (std::next_permutation(image.begin(), image.end()));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

DiagramSum o_instance(const Diagram& d, int m) {
    if (d.circles() < 1)
        throw InputError("o_instance: diagram has no circle");
    if (m < 1)
        throw InputError("o_instance: level must be at least 1");
    Diagram removed = Diagram::build(d.legs(), d.vertices(), d.edges(), d.circles() - 1);
    DiagramSum out;
    out.add(d, Rational(1));
    out.add(removed, Rational(2 * m));
    return out;
}

RelationInstance relation_instance(const std::string& kind, const std::vector<int>& params,
                                   const StubContext& context) {
    auto make = [&](DiagramSum expansion) {
        return RelationInstance{kind, params, context, std::move(expansion)};
    };

    if (kind == "O") {
        if (params.size() != 1)
            throw InputError("relation O takes one parameter (the level m)");
        if (!context.up.empty() || !context.down.empty())
            throw InputError("relation O takes no stubs");
        return make(o_instance(context.diagram, params[0]));
    }
    if (kind == "P") {
        if (params.size() != 1)
            throw InputError("relation P takes one parameter (the level m)");
        std::vector<int> stubs = context.up;
        stubs.insert(stubs.end(), context.down.begin(), context.down.end());
        if (static_cast<int>(stubs.size()) != 2 * params[0] + 2)
            throw InputError("relation P at level m needs exactly 2m+2 stubs, got " +
                             std::to_string(stubs.size()));
        return make(p_instance(context.diagram, stubs));
    }
    if (kind == "C") {
        if (params.size() != 1)
            throw InputError("relation C takes one parameter (the group size l)");
        if (static_cast<int>(context.up.size()) != params[0] ||
            static_cast<int>(context.down.size()) != params[0])
            throw InputError("relation C needs stub groups of size l on both sides");
        return make(c_instance(context.diagram, context.up, context.down));
    }
    if (kind == "CKL") {
        if (params.size() != 2)
            throw InputError("relation CKL takes two parameters (k and l)");
        if (static_cast<int>(context.up.size()) != params[0] ||
            static_cast<int>(context.down.size()) != params[1])
            throw InputError("relation CKL needs k up stubs and l down stubs");
        return make(ckl_instance(context.diagram, context.up, context.down));
    }
    throw InputError("unknown relation kind '" + kind + "'");
}

std::vector<DiagramSum> p_monotone_generators(const Diagram& context,
                                              const std::vector<int>& stubs) {
    check_stubs(context, stubs, "p_monotone_generators");
    if (stubs.size() < 2 || stubs.size() % 2 != 0)
        throw InputError("p_monotone_generators: needs a positive even number of stubs");

    std::vector<DiagramSum> out;
    for (size_t i = 1; i < stubs.size(); ++i) {
        std::vector<int> tracked;
        for (size_t j = 1; j < stubs.size(); ++j)
            if (j != i) tracked.push_back(stubs[j]);
        FusedDiagram fd = fuse_legs_tracked(context, {{stubs[0], stubs[i]}}, tracked);
        out.push_back(p_instance(fd.diagram, fd.tracked));
    }
    return out;
}

std::vector<DiagramSum> c_monotone_generators(const Diagram& context,
                                              const std::vector<int>& up,
                                              const std::vector<int>& down) {
    if (up.size() != down.size() || up.empty())
        throw InputError("c_monotone_generators: needs equal nonempty stub groups");

    std::vector<DiagramSum> out;
    for (size_t j = 0; j < down.size(); ++j) {
        std::vector<int> tracked;
        for (size_t i = 1; i < up.size(); ++i) tracked.push_back(up[i]);
        for (size_t i = 0; i < down.size(); ++i)
            if (i != j) tracked.push_back(down[i]);
        FusedDiagram fd = fuse_legs_tracked(context, {{up[0], down[j]}}, tracked);
        const size_t l = up.size() - 1;
        std::vector<int> new_up(fd.tracked.begin(), fd.tracked.begin() + static_cast<long>(l));
        std::vector<int> new_down(fd.tracked.begin() + static_cast<long>(l), fd.tracked.end());
        out.push_back(c_instance(fd.diagram, new_up, new_down));
    }
    return out;
}

StubContext capped_context(const Diagram& context, const std::vector<int>& up, int m) {
    check_stubs(context, up, "capped_context");
    if (static_cast<int>(up.size()) != 2 * m + 2)
        throw InputError("capped_context: needs 2m+2 stubs");
    if (up.empty())
        throw InputError("capped_context: needs at least one stub");

    const Color cap_color = context.legs()[up[0]].color;
    Diagram d = context;
    std::vector<int> down;
    for (int a = 0; a <= m; ++a) {
        const int base = static_cast<int>(d.legs().size());
        d = disjoint_union(d, strut(cap_color, cap_color));
        down.push_back(base);
        down.push_back(base + 1);
    }
    return StubContext{std::move(d), up, std::move(down)};
}

} // namespace jacobi
