// Coefficient-wise (Hadamard) convolution of exterior maps and the closure
// check M <= sqrt(k1 k2) for the weighted coefficient functional of the
// product map.
#pragma once

#include "hqmap/conditions.hpp"
#include "hqmap/maps.hpp"

namespace hqmap {

// alpha1*alpha2, beta1*beta2, a_n*A_n, b_n*B_n and the product of the log
// coefficients; indices missing from either operand yield zero and are
// dropped from the product's support.
ExteriorMap convolve(const ExteriorMap& f1, const ExteriorMap& f2);

struct ConvolutionReport {
  ExteriorMap product;
  double k1 = 0.0;  // minimal class constants of the operands
  double k2 = 0.0;
  double m_value = 0.0;  // class functional of the product
  double bound = 0.0;    // sqrt(k1 k2)
  bool within_bound = false;
};

// Requires both operands to have minimal class constants < 1; throws
// std::domain_error otherwise.
ConvolutionReport closure_check(const ExteriorMap& f1, const ExteriorMap& f2);

// Intermediate quantities of the Cauchy-Schwarz route to the closure bound:
// M <= sqrt(sum_x_sq * sum_X_sq) <= sqrt(k1 k2).
struct CauchySchwarzDiagnostic {
  double sum_x_sq = 0.0;
  double sum_big_x_sq = 0.0;
  double cs_bound = 0.0;
  double m_value = 0.0;
};

CauchySchwarzDiagnostic cauchy_schwarz_diagnostic(const ExteriorMap& f1,
                                                  const ExteriorMap& f2);

}  // namespace hqmap
