#include "jacobi/common.hpp"

#include <cstdlib>

namespace jacobi {

namespace {

// Positive integer from the environment; anything else keeps the fallback.
int env_int(const char* name, int fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0) return fallback;
    return static_cast<int>(v);
}

} // namespace

int& Limits::vertex_budget() {
    static int v = env_int("JACOBI_VERTEX_BUDGET", 20);
    return v;
}

int& Limits::leibniz_bound() {
    static int v = 6;
    return v;
}

int& Limits::span_basis_bound() {
    static int v = 5000;
    return v;
}

int& Limits::det_diagram_bound() {
    static int v = 8;
    return v;
}

int& Limits::pairing_threads() {
    static int v = 1;
    return v;
}

} // namespace jacobi
