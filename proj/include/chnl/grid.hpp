#pragma once

#include <cstddef>
#include <vector>

#include "chnl/errors.hpp"

namespace chnl {

// Uniform periodic grid on [0,L)^d with d in {1,2} and n points per
// dimension. n must be a power of two (radix-2 transforms, dyadic
// refinement) and at least 8. Grid points are x_j = j*h, h = L/n.
struct TorusGrid {
  int dim = 1;
  int n = 8;
  double length = 1.0;

  static TorusGrid make(int dim, int n, double length);

  double spacing() const { return length / n; }
  std::size_t size() const {
    return dim == 1 ? static_cast<std::size_t>(n)
                    : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }
  double cell_volume() const {
    const double h = spacing();
    return dim == 1 ? h : h * h;
  }
  int wrap(int j) const { return ((j % n) + n) % n; }
  std::size_t index(int i, int j = 0) const {
    return dim == 1 ? static_cast<std::size_t>(wrap(i))
                    : static_cast<std::size_t>(wrap(i)) * n + wrap(j);
  }
  double coord(int j) const { return j * spacing(); }
  // Signed coordinate of grid offset j, wrapped into [-L/2, L/2).
  double offset_coord(int j) const {
    const int w = wrap(j);
    return (w < n / 2 ? w : w - n) * spacing();
  }

  bool operator==(const TorusGrid&) const = default;
};

// Real scalar samples on a TorusGrid, row-major (x index outermost).
struct TorusField {
  TorusGrid grid;
  std::vector<double> values;

  TorusField() = default;
  explicit TorusField(const TorusGrid& g, double fill = 0.0)
      : grid(g), values(g.size(), fill) {}

  double& operator()(int i, int j = 0) { return values[grid.index(i, j)]; }
  double operator()(int i, int j = 0) const { return values[grid.index(i, j)]; }
  std::size_t size() const { return values.size(); }
};

void require_same_grid(const TorusField& a, const TorusField& b);
bool all_finite(const TorusField& f);

double field_sum(const TorusField& f);
double field_mean(const TorusField& f);
double field_integral(const TorusField& f);  // h^d * sum
double field_min(const TorusField& f);
double field_max(const TorusField& f);
double inner_h(const TorusField& a, const TorusField& b);  // h^d * sum(a*b)
double l2_norm(const TorusField& f);
double linf_norm(const TorusField& f);

// Node-centered second-order central difference, one component per dimension.
// Annihilates constants exactly; each component has zero mean up to roundoff.
std::vector<TorusField> gradient(const TorusField& f);

// Staggered gradient living on cell faces: component c at index idx is the
// difference across the face between node idx and node idx+e_c, divided by h.
std::vector<TorusField> face_gradient(const TorusField& f);

// Divergence of a face-centered flux. The grid sum of the output telescopes
// to zero up to accumulated roundoff, which is what gives the solvers exact
// discrete mass conservation.
TorusField divergence_flux(const std::vector<TorusField>& flux);

// 3-point (1D) / 5-point (2D) stencil Laplacian; equals
// divergence_flux(face_gradient(f)).
TorusField laplacian(const TorusField& f);

// Mirror image x -> -x (all axes), used by the symmetry-preservation checks.
TorusField reflect(const TorusField& f);

}  // namespace chnl
