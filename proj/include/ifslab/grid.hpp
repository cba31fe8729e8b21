#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ifslab {

// Real-valued function sampled at the N+1 uniform nodes x_i = i/N of [0, 1].
class GridFunction {
public:
    static constexpr int kMinSize = 16;

    GridFunction(int n, double fill = 0.0);
    GridFunction(int n, std::vector<double> values);

    static GridFunction sample(int n, const std::function<double(double)>& f);

    int size() const { return n_; }                       // number of cells
    int num_nodes() const { return n_ + 1; }
    double h() const { return 1.0 / n_; }
    double x(int i) const { return static_cast<double>(i) / n_; }

    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

    // piecewise-linear interpolation; x clamped to [0, 1]
    double eval(double x) const;

    double sup_norm() const;
    double min_value() const;
    double max_value() const;

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(double s);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(GridFunction a, double s) { return a *= s; }

    void check_finite() const;  // throws when a value is not finite

private:
    int n_;
    std::vector<double> values_;
    void require_same_grid(const GridFunction& o) const;
};

// Trapezoidal cumulative integral F(x_i) = int_0^{x_i} phi; F(0) = 0.
// Exact for piecewise-linear integrands.
GridFunction cumulative_integral(const GridFunction& phi);

// sup over node pairs of |phi(x_i)-phi(x_j)| / |x_i-x_j|^alpha
double holder_seminorm(const GridFunction& phi, double alpha);

// Trapezoidal inner product <phi, psi> = int_0^1 phi*psi.
double grid_inner(const GridFunction& phi, const GridFunction& psi);

double sup_diff(const GridFunction& a, const GridFunction& b);

// Per-cell integrals of g with power-law-aware handling near the endpoints:
// inside [0, zone] and [1-zone, 1] a cell whose samples share a strict sign
// is integrated as the log-log linear (power law) fit through its endpoint
// values, which stays accurate when g blows up like t^-e at the boundary.
// The first and last cells fit through the two adjacent interior nodes; when
// that fit is non-integrable the cell falls back to the trapezoid value of
// the stored (finite, by convention) boundary sample.
std::vector<double> cell_integrals(const GridFunction& g, double zone = 0.02);

// Sums of cell_integrals: forward[i] = int_0^{x_i} g, backward[i] = int_{x_i}^1 g.
void cumulative_from_cells(const std::vector<double>& cells,
                           std::vector<double>& forward, std::vector<double>& backward);

}  // namespace ifslab
