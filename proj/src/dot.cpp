#include "jacobi/dot.hpp"

#include <sstream>

namespace jacobi {

namespace {

void render_body(std::ostringstream& out, const Diagram& d, const std::string& prefix,
                 const std::string& indent) {
    // Owner of each half-edge: leg node or trivalent node.
    std::vector<std::string> owner(d.half_edge_count());
    for (size_t i = 0; i < d.legs().size(); ++i)
        owner[d.legs()[i].half_edge] = prefix + "l" + std::to_string(i);
    for (size_t i = 0; i < d.vertices().size(); ++i)
        for (int h : d.vertices()[i].cyclic) owner[h] = prefix + "t" + std::to_string(i);

    for (size_t i = 0; i < d.legs().size(); ++i)
        out << indent << prefix << "l" << i << " [shape=box, label=\""
            << to_string(d.legs()[i].color) << "\"];\n";
    for (size_t i = 0; i < d.vertices().size(); ++i) {
        const auto& c = d.vertices()[i].cyclic;
        out << indent << prefix << "t" << i << " [shape=point, xlabel=\"(h" << c[0] << ",h"
            << c[1] << ",h" << c[2] << ")\"];\n";
    }
    for (const auto& [a, b] : d.edges())
        out << indent << owner[a] << " -- " << owner[b] << " [label=\"h" << a << "-h" << b
            << "\"];\n";
    for (int i = 0; i < d.circles(); ++i) {
        out << indent << prefix << "o" << i << " [shape=circle, label=\"\", width=0.2];\n";
        out << indent << prefix << "o" << i << " -- " << prefix << "o" << i << ";\n";
    }
}

} // namespace

std::string to_dot(const Diagram& d, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    render_body(out, d, "", "  ");
    out << "}\n";
    return out.str();
}

std::string to_dot(const DiagramSum& s) {
    std::ostringstream out;
    out << "graph sum {\n";
    int idx = 0;
    for (const auto& [key, term] : s.terms()) {
        out << "  subgraph cluster_" << idx << " {\n";
        out << "    label=\"" << term.coeff.str() << "\";\n";
        render_body(out, term.representative, "d" + std::to_string(idx) + "_", "    ");
        out << "  }\n";
        ++idx;
    }
    out << "}\n";
    return out.str();
}

} // namespace jacobi
