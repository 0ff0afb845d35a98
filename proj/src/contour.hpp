#pragma once

#include "num.hpp"

#include <complex>
#include <vector>

namespace sqrtlat {

// Quadrature rule for (1/2) \int_{-1}^{1} g_n(w) e^{pi i w z} dw over the
// upper unit semicircle, with the z-independent part of every node term
// precomputed. One evaluator serves arbitrarily many values of z, which is
// what makes argument-tracking along contours affordable.
class ContourEvaluator {
public:
    // bits <= 0 picks a precision from (n, z_scale); z_scale should bound |z|
    // over the intended arguments. panel_scale > 1 refines the rule.
    ContourEvaluator(int n, int bits = 0, double z_scale = 0, double panel_scale = 1.0);

    int n() const { return n_; }
    unsigned bits() const { return bits_; }
    size_t nodes() const { return w_.size(); }

    std::complex<double> operator()(std::complex<double> z) const;

    // samples f_n at z0 + t (z1 - z0), t = j/m for j = 0..m, sharing the
    // per-node phase rotation between consecutive samples
    void eval_segment(std::complex<double> z0, std::complex<double> z1, int m,
                      std::vector<std::complex<double>>& out) const;

    // like eval_segment, but each sample is normalized to unit modulus with
    // its log-magnitude reported separately; keeps phases usable on segments
    // whose dynamic range exceeds what double can represent
    void eval_segment_unit(std::complex<double> z0, std::complex<double> z1, int m,
                           std::vector<std::complex<double>>& phase,
                           std::vector<double>& logmag) const;

private:
    void segment_sums(std::complex<double> z0, std::complex<double> z1, int m,
                      std::vector<mpcomplex>& sums) const;

    int n_;
    unsigned bits_;
    std::vector<mpcomplex> w_;  // arc nodes
    std::vector<mpcomplex> u_;  // weight * jacobian * g_n at the node
};

struct ContourResult {
    std::complex<double> value;
    double err;
    bool converged;
};

// Single evaluation with refinement control: the rule is rebuilt at growing
// precision until two refinements agree to tol (precision capped at 4096
// bits; a non-converged result carries the best estimate).
ContourResult eval_contour(int n, std::complex<double> z, int precision_bits = 0,
                           double tol = 1e-10);

// Gauss-Legendre nodes/weights on [-1,1] at the current working precision,
// cached per (order, precision).
void gauss_legendre(int k, std::vector<mpreal>& nodes, std::vector<mpreal>& weights);

}  // namespace sqrtlat
