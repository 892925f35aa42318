// Core representations of harmonic mappings with finitely supported
// coefficient series: interior maps f = h + conj(g) of the unit disk and
// exterior maps of |z| > 1 with a log|z| term.
#pragma once

#include <complex>
#include <vector>

namespace hqmap {

using Cplx = std::complex<double>;

// One sparse series term: the coefficient of z^n (interior) or z^-n (exterior).
struct Coefficient {
  int n = 0;
  Cplx value;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

using CoefficientList = std::vector<Coefficient>;

// Wirtinger partials d/dz and d/dzbar.
struct Wirtinger {
  Cplx fz;
  Cplx fzbar;
};

// z^n by squaring; n may be negative (z != 0 required then).
Cplx ipow(Cplx z, int n);

// sum of n * |c_n| over the list
double weighted_index_sum(const CoefficientList& coeffs);
// sum of |c_n| over the list
double magnitude_sum(const CoefficientList& coeffs);

// f(z) = z + sum_{n>=2} a_n z^n + conj(sum_{n>=1} b_n z^n), normalized so that
// f(0) = 0 and f_z(0) = 1. Immutable after construction.
class InteriorMap {
 public:
  // identity map z
  InteriorMap() = default;
  // Sorts both lists by index and validates: a-indices >= 2, b-indices >= 1,
  // no duplicates, finite values. Throws std::invalid_argument otherwise.
  InteriorMap(CoefficientList a, CoefficientList b);

  const CoefficientList& a() const { return a_; }
  const CoefficientList& b() const { return b_; }

  Cplx evaluate(Cplx z) const;
  Wirtinger derivatives(Cplx z) const;
  // |f_z|^2 - |f_zbar|^2
  double jacobian(Cplx z) const;
  // f_zbar / f_z; throws std::domain_error when f_z vanishes
  Cplx dilatation(Cplx z) const;

 private:
  CoefficientList a_;
  CoefficientList b_;
};

// f(z) = alpha z + beta conj(z) + sum a_n z^-n + conj(sum b_n z^-n)
//        + log_coeff * log|z|  on |z| >= 1, with |beta| < |alpha|.
class ExteriorMap {
 public:
  // identity map z
  ExteriorMap() : alpha_(1.0) {}
  ExteriorMap(Cplx alpha, Cplx beta, CoefficientList a, CoefficientList b,
              Cplx log_coeff);

  Cplx alpha() const { return alpha_; }
  Cplx beta() const { return beta_; }
  const CoefficientList& a() const { return a_; }
  const CoefficientList& b() const { return b_; }
  Cplx log_coeff() const { return log_coeff_; }

  // All four evaluators reject z = 0 (pole / log singularity).
  Cplx evaluate(Cplx z) const;
  Wirtinger derivatives(Cplx z) const;
  double jacobian(Cplx z) const;
  Cplx dilatation(Cplx z) const;

 private:
  Cplx alpha_;
  Cplx beta_;
  CoefficientList a_;
  CoefficientList b_;
  Cplx log_coeff_;
};

}  // namespace hqmap
