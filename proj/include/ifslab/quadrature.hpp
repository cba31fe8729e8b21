#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ifslab {

// Gauss-Legendre nodes and weights on [0, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int n);

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // integral of f over [a, b]
    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double len = b - a;
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            sum += weights_[i] * f(a + len * nodes_[i]);
        return len * sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Adaptive Gauss7/Kronrod15 integration; bisects until the local error
// estimate drops below max(abs_tol, rel_tol*|segment|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-10,
                          int max_depth = 48);

// Integral over [x0, x1] (0 < x0 < x1) of the power law a*t^(-e) fitted
// through (x0, g0) and (x1, g1), g0 and g1 of equal nonzero sign.  Exact on
// pure power laws; used for cells where an integrand follows a known
// power-type endpoint behavior.
double power_law_cell(double x0, double x1, double g0, double g1);

// Fit exponent e of g ~ a*t^(-e) through two positive samples.
double power_law_exponent(double x0, double g0, double x1, double g1);

// Tail integral over (0, x1] of the power law fitted through (x1, g1),
// (x2, g2); returns false when the fitted exponent makes the tail diverge.
bool power_law_tail(double x1, double g1, double x2, double g2, double& out);

}  // namespace ifslab
