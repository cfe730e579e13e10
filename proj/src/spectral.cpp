#include "chnl/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace chnl {

namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_c(void* p) { return static_cast<fftw_complex*>(p); }
fftw_plan as_plan(void* p) { return static_cast<fftw_plan>(p); }

}  // namespace

SpectralEngine::SpectralEngine(const TorusGrid& grid) : grid_(grid) {
  const std::size_t sz = grid_.size();
  buf_ = fftw_alloc_complex(sz);
  out_ = fftw_alloc_complex(sz);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (grid_.dim == 1) {
      fwd_ = fftw_plan_dft_1d(grid_.n, as_c(buf_), as_c(out_), FFTW_FORWARD,
                              FFTW_ESTIMATE);
      bwd_ = fftw_plan_dft_1d(grid_.n, as_c(buf_), as_c(out_), FFTW_BACKWARD,
                              FFTW_ESTIMATE);
    } else {
      fwd_ = fftw_plan_dft_2d(grid_.n, grid_.n, as_c(buf_), as_c(out_),
                              FFTW_FORWARD, FFTW_ESTIMATE);
      bwd_ = fftw_plan_dft_2d(grid_.n, grid_.n, as_c(buf_), as_c(out_),
                              FFTW_BACKWARD, FFTW_ESTIMATE);
    }
  }

  // Wavenumber tables: mode m maps to m for m <= n/2, m-n above.
  const int n = grid_.n;
  const double two_pi = 2.0 * std::numbers::pi;
  auto mode_k = [&](int m) {
    const int mm = (m <= n / 2) ? m : m - n;
    return two_pi * mm / grid_.length;
  };
  const double h = grid_.spacing();
  auto stencil = [&](double k) {
    const double s = std::sin(0.5 * k * h);
    return 4.0 * s * s / (h * h);
  };
  k_[0].resize(sz);
  k_[1].assign(sz, 0.0);
  k2_.resize(sz);
  sigma2_.resize(sz);
  if (grid_.dim == 1) {
    for (int m = 0; m < n; ++m) {
      const double k = mode_k(m);
      k_[0][m] = k;
      k2_[m] = k * k;
      sigma2_[m] = stencil(k);
    }
  } else {
    for (int mi = 0; mi < n; ++mi)
      for (int mj = 0; mj < n; ++mj) {
        const std::size_t idx = static_cast<std::size_t>(mi) * n + mj;
        const double kx = mode_k(mi);
        const double ky = mode_k(mj);
        k_[0][idx] = kx;
        k_[1][idx] = ky;
        k2_[idx] = kx * kx + ky * ky;
        sigma2_[idx] = stencil(kx) + stencil(ky);
      }
  }
}

SpectralEngine::~SpectralEngine() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  if (fwd_) fftw_destroy_plan(as_plan(fwd_));
  if (bwd_) fftw_destroy_plan(as_plan(bwd_));
  if (buf_) fftw_free(buf_);
  if (out_) fftw_free(out_);
}

std::vector<std::complex<double>> SpectralEngine::forward(const TorusField& f) {
  if (!(f.grid == grid_)) throw ConfigError("field grid does not match engine grid");
  const std::size_t sz = grid_.size();
  fftw_complex* in = as_c(buf_);
  for (std::size_t i = 0; i < sz; ++i) {
    in[i][0] = f.values[i];
    in[i][1] = 0.0;
  }
  fftw_execute(as_plan(fwd_));
  const fftw_complex* o = as_c(out_);
  std::vector<std::complex<double>> spec(sz);
  for (std::size_t i = 0; i < sz; ++i) spec[i] = {o[i][0], o[i][1]};
  return spec;
}

TorusField SpectralEngine::inverse(const std::vector<std::complex<double>>& spec) {
  const std::size_t sz = grid_.size();
  if (spec.size() != sz) throw ConfigError("spectrum size mismatch");
  fftw_complex* in = as_c(buf_);
  for (std::size_t i = 0; i < sz; ++i) {
    in[i][0] = spec[i].real();
    in[i][1] = spec[i].imag();
  }
  fftw_execute(as_plan(bwd_));
  const fftw_complex* o = as_c(out_);
  const double scale = 1.0 / static_cast<double>(sz);
  TorusField f(grid_);
  for (std::size_t i = 0; i < sz; ++i) f.values[i] = o[i][0] * scale;
  return f;
}

TorusField SpectralEngine::apply_multiplier(const TorusField& f,
                                            const std::vector<double>& mult) {
  auto spec = forward(f);
  if (mult.size() != spec.size()) throw ConfigError("multiplier size mismatch");
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= mult[i];
  return inverse(spec);
}

TorusField SpectralEngine::apply_multiplier(
    const TorusField& f, const std::vector<std::complex<double>>& mult) {
  auto spec = forward(f);
  if (mult.size() != spec.size()) throw ConfigError("multiplier size mismatch");
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= mult[i];
  return inverse(spec);
}

TorusField SpectralEngine::shift(const TorusField& f,
                                 const std::array<double, 2>& delta) {
  auto spec = forward(f);
  const std::size_t sz = spec.size();
  for (std::size_t i = 0; i < sz; ++i) {
    const double phase = -(k_[0][i] * delta[0] +
                           (grid_.dim == 2 ? k_[1][i] * delta[1] : 0.0));
    spec[i] *= std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return inverse(spec);
}

std::vector<TorusField> SpectralEngine::spectral_gradient(const TorusField& f) {
  auto spec = forward(f);
  const std::size_t sz = spec.size();
  const int n = grid_.n;
  const double nyq = std::numbers::pi * n / grid_.length;
  std::vector<TorusField> out;
  out.reserve(grid_.dim);
  for (int axis = 0; axis < grid_.dim; ++axis) {
    std::vector<std::complex<double>> ds(sz);
    for (std::size_t i = 0; i < sz; ++i) {
      double k = k_[axis][i];
      if (std::abs(std::abs(k) - nyq) < 1e-12 * nyq) k = 0.0;  // drop Nyquist
      ds[i] = std::complex<double>(0.0, k) * spec[i];
    }
    out.push_back(inverse(ds));
  }
  return out;
}

}  // namespace chnl
