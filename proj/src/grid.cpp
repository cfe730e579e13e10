#include "chnl/grid.hpp"

#include <algorithm>
#include <cmath>

namespace chnl {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

TorusGrid TorusGrid::make(int dim, int n, double length) {
  if (dim != 1 && dim != 2)
    throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  if (n < 8) throw ConfigError("grid needs n >= 8, got " + std::to_string(n));
  if (!is_power_of_two(n))
    throw ConfigError("grid n must be a power of two, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw ConfigError("grid period length must be positive and finite");
  return TorusGrid{dim, n, length};
}

void require_same_grid(const TorusField& a, const TorusField& b) {
  if (!(a.grid == b.grid)) throw ConfigError("fields live on different grids");
}

bool all_finite(const TorusField& f) {
  return std::all_of(f.values.begin(), f.values.end(),
                     [](double v) { return std::isfinite(v); });
}

double field_sum(const TorusField& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s;
}

double field_mean(const TorusField& f) { return field_sum(f) / f.size(); }

double field_integral(const TorusField& f) {
  return f.grid.cell_volume() * field_sum(f);
}

double field_min(const TorusField& f) {
  return *std::min_element(f.values.begin(), f.values.end());
}

double field_max(const TorusField& f) {
  return *std::max_element(f.values.begin(), f.values.end());
}

double inner_h(const TorusField& a, const TorusField& b) {
  require_same_grid(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values[i] * b.values[i];
  return a.grid.cell_volume() * s;
}

double l2_norm(const TorusField& f) { return std::sqrt(inner_h(f, f)); }

double linf_norm(const TorusField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

std::vector<TorusField> gradient(const TorusField& f) {
  const TorusGrid& g = f.grid;
  const int n = g.n;
  const double inv2h = 1.0 / (2.0 * g.spacing());
  std::vector<TorusField> out(g.dim, TorusField(g));
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i)
      out[0].values[i] = (f(i + 1) - f(i - 1)) * inv2h;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        out[0](i, j) = (f(i + 1, j) - f(i - 1, j)) * inv2h;
        out[1](i, j) = (f(i, j + 1) - f(i, j - 1)) * inv2h;
      }
  }
  return out;
}

std::vector<TorusField> face_gradient(const TorusField& f) {
  const TorusGrid& g = f.grid;
  const int n = g.n;
  const double invh = 1.0 / g.spacing();
  std::vector<TorusField> out(g.dim, TorusField(g));
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i) out[0].values[i] = (f(i + 1) - f(i)) * invh;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        out[0](i, j) = (f(i + 1, j) - f(i, j)) * invh;
        out[1](i, j) = (f(i, j + 1) - f(i, j)) * invh;
      }
  }
  return out;
}

TorusField divergence_flux(const std::vector<TorusField>& flux) {
  if (flux.empty()) throw ConfigError("divergence_flux: empty flux");
  const TorusGrid& g = flux[0].grid;
  if (static_cast<int>(flux.size()) != g.dim)
    throw ConfigError("divergence_flux: flux component count != grid dimension");
  for (const auto& c : flux) require_same_grid(flux[0], c);
  const int n = g.n;
  const double invh = 1.0 / g.spacing();
  TorusField out(g);
  if (g.dim == 1) {
    const TorusField& F = flux[0];
    for (int i = 0; i < n; ++i) out.values[i] = (F(i) - F(i - 1)) * invh;
  } else {
    const TorusField& Fx = flux[0];
    const TorusField& Fy = flux[1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = (Fx(i, j) - Fx(i - 1, j) + Fy(i, j) - Fy(i, j - 1)) * invh;
  }
  return out;
}

TorusField laplacian(const TorusField& f) {
  const TorusGrid& g = f.grid;
  const int n = g.n;
  const double invh2 = 1.0 / (g.spacing() * g.spacing());
  TorusField out(g);
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i)
      out.values[i] = (f(i + 1) - 2.0 * f(i) + f(i - 1)) * invh2;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = (f(i + 1, j) + f(i - 1, j) + f(i, j + 1) + f(i, j - 1) -
                     4.0 * f(i, j)) *
                    invh2;
  }
  return out;
}

TorusField reflect(const TorusField& f) {
  const TorusGrid& g = f.grid;
  const int n = g.n;
  TorusField out(g);
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i) out(i) = f(-i);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = f(-i, -j);
  }
  return out;
}

}  // namespace chnl
