#include "gradim/complex_scalar.hpp"

#include <cstdio>
#include <cstdlib>

namespace gradim {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec <= 16; ++prec) {
        char probe[64];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, x);
        if (std::strtod(probe, nullptr) == x) return probe;
    }
    return buf;
}

std::string ComplexScalar::str() const {
    return format_double(v.real()) + "+" + format_double(v.imag()) + "*i";
}

ComplexScalar ComplexScalar::from_string(std::string_view s) {
    std::string t(s);
    const char* p = t.c_str();
    char* end = nullptr;
    double re = std::strtod(p, &end);
    if (end == p) throw Error("malformed complex literal: " + t);
    if (*end == '\0') return ComplexScalar(re, 0.0);
    if (*end == '+') ++end;
    const char* imp = end;
    double im = std::strtod(imp, &end);
    if (end == imp) throw Error("malformed complex literal: " + t);
    if (std::string_view(end) != "*i" && std::string_view(end) != "i")
        throw Error("malformed complex literal: " + t);
    return ComplexScalar(re, im);
}

}  // namespace gradim
