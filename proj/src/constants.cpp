#include "dfib/constants.hpp"

#include <cmath>

namespace dfib {

const GoldenConstants& golden() {
    static const GoldenConstants g = [] {
        GoldenConstants c;
        c.sqrt5 = std::sqrt(5.0);
        c.phi = (1.0 + c.sqrt5) / 2.0;
        c.phi_tilde = std::log(c.phi);
        c.w_canonical = 4.0 * c.phi_tilde / 5.0;
        return c;
    }();
    return g;
}

const char* to_string(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

}  // namespace dfib
