#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfchar/forest.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

/// Uniform symmetric grid {-L, -L+h, ..., L}. L/h must be an integer, so a
/// sample sits exactly at 0.
struct GridSpec {
    double radius = 20.0;  // L
    double step = 1.0 / 64.0;

    int half() const;    // L/h
    int points() const;  // 2*half + 1
    double x(int i) const { return (i - half()) * step; }
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// A grid-sampled integrable function plus a formal multiple of the Dirac
/// delta at 0 (the convolution unit). All arithmetic requires identical
/// grids.
class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(GridSpec g, double delta = 0.0)
        : grid_(g), delta_(delta), v_(static_cast<std::size_t>(g.points()), 0.0) {}

    const GridSpec& grid() const { return grid_; }
    double delta_coef() const { return delta_; }
    double& delta_coef() { return delta_; }
    const std::vector<double>& samples() const { return v_; }
    std::vector<double>& samples() { return v_; }

    /// integral of the function part plus the delta coefficient.
    double integral() const;
    double sup_dist(const GridFunction& o) const;
    double abs_max() const;

  private:
    GridSpec grid_;
    double delta_ = 0.0;
    std::vector<double> v_;
};

/// Direct O(N^2) discrete convolution scaled by h, delta cross terms
/// included (delta acts as the unit).
GridFunction gf_convolve(const GridFunction& f, const GridFunction& g);
GridFunction gf_add(const GridFunction& f, const GridFunction& g);
GridFunction gf_scale(const GridFunction& f, double s);
/// Pointwise multiplication by the indicator of the open positive half
/// line; the delta component is dropped (it belongs to the Rt side).
GridFunction gf_truncate_pos(const GridFunction& f);
/// Indicator of the closed negative half line (0 included); keeps delta.
GridFunction gf_truncate_neg(const GridFunction& f);
/// f(-x); exact on the symmetric grid.
GridFunction gf_reflect(const GridFunction& f);
GridFunction gf_abs(const GridFunction& f);

/// Centered Gaussian density of variance 2*omega:
/// f_omega(x) = exp(-x^2/(4 omega)) / (2 sqrt(pi omega)).
/// Convolution semigroup: f_a * f_b = f_{a+b}; even; unit mass.
GridFunction gaussian_kernel(const GridSpec& g, unsigned omega);

/// Numeric realization of the diffusion-induced average:
/// product = convolution, R = truncation to the positive half line,
/// theta = sigma = reflection, gamma = f_1, Theta = integral,
/// majorant v = absolute value. Identities hold to discretization error.
struct DiffusionModel {
    using Element = GridFunction;
    using Scalar = double;

    GridSpec grid;
    double tol = 5e-3;

    std::string name() const { return "diffusion"; }
    Element unit() const {
        GridFunction u(grid);
        u.delta_coef() = 1.0;
        return u;
    }
    Element zero() const { return GridFunction(grid); }
    Element mul(const Element& a, const Element& b) const { return gf_convolve(a, b); }
    Element add(const Element& a, const Element& b) const { return gf_add(a, b); }
    Element neg(const Element& a) const { return gf_scale(a, -1.0); }
    Element R(const Element& a) const { return gf_truncate_pos(a); }
    Element Rt(const Element& a) const { return gf_truncate_neg(a); }
    Element theta_map(const Element& a) const { return gf_reflect(a); }
    Element sigma_map(const Element& a) const { return gf_reflect(a); }
    Element gamma_pow(unsigned n) const {
        return n == 0 ? unit() : gaussian_kernel(grid, n);
    }
    Scalar Theta(const Element& a) const { return a.integral(); }
    Element v(const Element& a) const { return gf_abs(a); }
    double wb_k() const { return 1.0; }
    double scalar_tol() const { return tol; }
    bool elements_close(const Element& a, const Element& b) const {
        return a.sup_dist(b) <= tol;
    }
    bool is_zero_element(const Element& a) const { return a.sup_dist(zero()) <= tol; }
    std::string render(const Element& a) const;

    /// Reachable elements: the kernels f_w (w <= cap) and the Atkinson
    /// nests of all words with norm <= cap. Delta-free by construction
    /// (the delta sits on the Rt side, where the averaging axioms do not
    /// quantify over it).
    std::vector<Element> sample_elements(int cap) const;
};

DiffusionModel diffusion_model(double radius = 20.0, double step = 1.0 / 64.0,
                               double tol = 5e-3);

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::int64_t samples = 0;
};

/// Monte-Carlo estimate of phi(w) = (-1)^n P(S_1 > 0, ..., S_n > 0) where
/// S_k are prefix sums of independent centered Gaussians of variance
/// 2 w_i. Deterministic given the seed; sampling runs in 16 sub-streams
/// seeded seed, seed+1, ... and merged by sample count.
McEstimate diffusion_phi_mc(const Word& w, std::int64_t samples, std::uint64_t seed);

/// Monte-Carlo value of the closed arborified integral
///   int prod f_{w_i}(x_i) prod sigma_+(hat x_i) dx,
/// hat x_i summing x over the node and everything grafted above it. The
/// integral is positive; the recursion value is (-1)^{node count} times
/// its magnitude. Capped at 4 nodes.
McEstimate diffusion_arb_closed(const Forest& f, std::int64_t samples, std::uint64_t seed);

/// Thrown when a sweep or evaluation exceeds a configured resource cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hopfchar
