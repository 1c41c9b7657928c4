#pragma once

namespace dfib {

// Golden-ratio constants shared by every module.
//
// phi_tilde = ln(phi) is the growth rate of the hyperbolic Fibonacci
// functions; w_canonical = 4*phi_tilde/5 is the magnitude of the
// Wronskian of the even/odd pair and the default normalization of the
// second deformed solution.
struct GoldenConstants {
    double phi;
    double phi_tilde;
    double w_canonical;
    double sqrt5;
};

const GoldenConstants& golden();

enum class Parity { even, odd };

const char* to_string(Parity p);

}  // namespace dfib
