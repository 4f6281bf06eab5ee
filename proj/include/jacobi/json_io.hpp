#pragma once

#include <string>
#include <variant>

#include "jacobi/integrals.hpp"

namespace jacobi {

// Any of the input shapes the tools accept.  A file holding a bare diagram
// parses as Diagram; sums, forms, integrands, and perturbed Gaussians are
// recognized by their distinguishing fields.
using ParsedInput =
    std::variant<QuadraticForm, Diagram, DiagramSum, ExpIntegrand, PerturbedGaussian>;

// Strict-schema parse; errors name the offending field (e.g. "edges[3][1]:
// unknown half-edge 'h9'").
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input(const std::string& path);

// Canonical serialization: object keys sorted, terms sorted by canonical
// class, half-edges named h0..hN-1 in representative order, rationals as
// strings.  parse(to_json(x)) round-trips byte-exactly for canonical inputs.
std::string to_json(const QuadraticForm& form);
std::string to_json(const Diagram& d);
std::string to_json(const DiagramSum& s);
std::string to_json(const PerturbedGaussian& g);
std::string to_json(const CheckReport& report);

// Human-readable renderings for --pretty output.
std::string pretty(const DiagramSum& s);
std::string pretty(const CheckReport& report);

} // namespace jacobi
