#include "hqm/composability.hpp"

#include <stdexcept>

namespace hqm::comp {

CompClass make_class(int j_squared, const Rational& hbar) {
    if (j_squared < -1 || j_squared > 1) throw std::invalid_argument("J^2 must be -1, 0 or +1");
    if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
    CompClass c{j_squared, hbar};
    c.hbar.canonicalize();
    return c;
}

std::string_view class_name(int j_squared) {
    switch (j_squared) {
    case -1: return "elliptic";
    case 0: return "parabolic";
    case 1: return "hyperbolic";
    }
    throw std::invalid_argument("J^2 must be -1, 0 or +1");
}

int class_from_name(std::string_view name) {
    if (name == "elliptic") return -1;
    if (name == "parabolic") return 0;
    if (name == "hyperbolic") return 1;
    throw std::invalid_argument("unknown class '" + std::string(name) + "' (elliptic, parabolic, hyperbolic)");
}

} // namespace hqm::comp
