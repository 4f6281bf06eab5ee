#pragma once

#include <string>
#include <vector>

#include "jacobi/diagram_sum.hpp"

namespace jacobi {

// A diagram together with distinguished legs (stubs) that relation instances
// glue among themselves.  Relations with two stub groups list them as `up`
// and `down`; one-group relations use the concatenation up ++ down.
struct StubContext {
    Diagram diagram;
    std::vector<int> up;
    std::vector<int> down;
};

// Sum over all perfect matchings of the stub legs, each matching fused with
// coefficient one.  (2k-1)!! terms for 2k stubs.
DiagramSum p_instance(const Diagram& context, const std::vector<int>& stubs);

// Sum over all bijections up -> down, each fused with coefficient one.
// l! terms for groups of size l.
DiagramSum c_instance(const Diagram& context, const std::vector<int>& up,
                      const std::vector<int>& down);

// Mixed form: every injection of the k up stubs into the l down stubs,
// completed by a perfect matching of the l-k remaining down stubs.  Requires
// l-k even.
DiagramSum ckl_instance(const Diagram& context, const std::vector<int>& up,
                        const std::vector<int>& down);

// The circle relation at level m: a diagram with a circle equals -2m times
// the same diagram with the circle removed, so the instance is the sum
// (d with its circles) + 2m * (first circle removed), whose class is zero in
// the quotient.  Requires at least one circle.
DiagramSum o_instance(const Diagram& d, int m);

// A relation applied to a concrete context, together with its literal
// expansion (coefficient one per matching term).  Such instances span the
// subspace that quotients normalize away.
struct RelationInstance {
    std::string kind;
    std::vector<int> params;
    StubContext context;
    DiagramSum expansion;
};

// Dispatcher keyed by relation name: "O" (param m), "P" (param m, stubs
// up ++ down of size 2m+2), "C" (param l, both groups of size l), "CKL"
// (params k and l).  Parameters are validated against the context.
RelationInstance relation_instance(const std::string& kind, const std::vector<int>& params,
                                   const StubContext& context);

// Expands a P instance on 2j+2 stubs into the 2j+1 one-step-smaller instances
// obtained by fusing the first stub with each other stub.  The sum of the
// returned instances equals the input instance.
std::vector<DiagramSum> p_monotone_generators(const Diagram& context,
                                              const std::vector<int>& stubs);

// Same descent for C: fusing the first up stub with each down stub gives l
// instances one size smaller whose sum equals the input instance.
std::vector<DiagramSum> c_monotone_generators(const Diagram& context,
                                              const std::vector<int>& up,
                                              const std::vector<int>& down);

// Builds the capped companion of a context: m+1 new arcs are appended and
// their 2m+2 ends form the down group, while the given stubs form the up
// group.  Gluing up to down in all bijections reproduces (m+1)! * 2^(m+1)
// times the P instance on the original stubs, since a perfect matching of
// the stubs arises once per assignment of arcs to matched pairs and per
// orientation of each arc.
StubContext capped_context(const Diagram& context, const std::vector<int>& up, int m);

} // namespace jacobi
