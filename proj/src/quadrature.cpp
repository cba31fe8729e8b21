#include "ifslab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ifslab {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: node count must be >= 1");
    nodes_.resize(n);
    weights_.resize(n);
    // roots of P_n on [-1,1] by Newton iteration, then mapped to [0,1]
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes_[i] = 0.5 * (1.0 - x);
        nodes_[n - 1 - i] = 0.5 * (1.0 + x);
        double w = 1.0 / ((1.0 - x * x) * pp * pp);
        weights_[i] = w;
        weights_[n - 1 - i] = w;
    }
}

namespace {

// Gauss7/Kronrod15 on [a,b]; err receives the usual scaled difference.
double gk15(const std::function<double(double)>& f, double a, double b, double& err) {
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0,               0.204432940075298},
        {0.586087235467691, 0.0,               0.169004726639267},
        {0.864864423359769, 0.0,               0.104790010322250},
        {0.991455371120813, 0.0,               0.022935322010529},
    };
    const double c = 0.5 * (a + b);
    const double m = 0.5 * (b - a);
    double y0 = f(c);
    double g7 = nw[0][1] * y0;
    double k15 = nw[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = m * nw[i][0];
        double y = f(c + dx) + f(c - dx);
        g7 += nw[i][1] * y;
        k15 += nw[i][2] * y;
    }
    g7 *= m;
    k15 *= m;
    err = std::pow(200.0 * std::abs(g7 - k15), 1.5);
    return k15;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double abs_tol, double rel_tol, int depth) {
    double err;
    double s = gk15(f, a, b, err);
    if (err <= abs_tol || err <= rel_tol * std::abs(s) || depth <= 0) return s;
    double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1) +
           adapt(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    return adapt(f, a, b, abs_tol, rel_tol, max_depth);
}

double power_law_exponent(double x0, double g0, double x1, double g1) {
    return -std::log(g1 / g0) / std::log(x1 / x0);
}

double power_law_cell(double x0, double x1, double g0, double g1) {
    double sign = 1.0;
    if (g0 < 0.0 && g1 < 0.0) {
        sign = -1.0;
        g0 = -g0;
        g1 = -g1;
    }
    const double e = power_law_exponent(x0, g0, x1, g1);
    const double a = g0 * std::pow(x0, e);
    double val;
    if (std::abs(1.0 - e) < 1e-8) {
        val = a * std::log(x1 / x0);
    } else {
        val = a * (std::pow(x1, 1.0 - e) - std::pow(x0, 1.0 - e)) / (1.0 - e);
    }
    return sign * val;
}

bool power_law_tail(double x1, double g1, double x2, double g2, double& out) {
    double sign = 1.0;
    if (g1 < 0.0 && g2 < 0.0) {
        sign = -1.0;
        g1 = -g1;
        g2 = -g2;
    }
    const double e = power_law_exponent(x1, g1, x2, g2);
    if (e >= 1.0 - 1e-9) return false;  // non-integrable at 0
    out = sign * g1 * x1 / (1.0 - e);   // a*x1^(1-e)/(1-e) with a = g1*x1^e
    return true;
}

}  // namespace ifslab
