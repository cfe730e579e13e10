#pragma once

#include <array>
#include <complex>
#include <vector>

#include "chnl/grid.hpp"

namespace chnl {

// FFT engine bound to one grid. Owns its FFTW plans and scratch buffers, so
// it must not be shared between concurrent callers: allocate one engine per
// worker. Plan creation is serialized internally (FFTW planning is not
// thread-safe); execution touches only this instance's scratch.
class SpectralEngine {
 public:
  explicit SpectralEngine(const TorusGrid& grid);
  ~SpectralEngine();
  SpectralEngine(const SpectralEngine&) = delete;
  SpectralEngine& operator=(const SpectralEngine&) = delete;

  const TorusGrid& grid() const { return grid_; }

  // Unnormalized forward DFT; inverse applies the 1/n^d factor so that
  // inverse(forward(f)) == f to roundoff.
  std::vector<std::complex<double>> forward(const TorusField& f);
  TorusField inverse(const std::vector<std::complex<double>>& spec);

  // f -> Re IFFT(mult .* FFT(f)), a transform-diagonal linear operator.
  TorusField apply_multiplier(const TorusField& f, const std::vector<double>& mult);
  TorusField apply_multiplier(const TorusField& f,
                              const std::vector<std::complex<double>>& mult);

  // Fourier wavenumber component k_c at each flattened spectral index.
  const std::vector<double>& wavenumber(int axis) const { return k_[axis]; }
  // |k|^2 per flattened index (spectral Laplacian symbol).
  const std::vector<double>& spectral_k2() const { return k2_; }
  // Symbol sigma2 >= 0 of the negated 3/5-point stencil Laplacian:
  // -laplacian(e^{ikx}) = sigma2(k) e^{ikx}.
  const std::vector<double>& stencil_laplacian_symbol() const { return sigma2_; }

  // Band-limited translate f(. - delta); exact for trigonometric fields.
  TorusField shift(const TorusField& f, const std::array<double, 2>& delta);

  // Spectral derivative per axis (Nyquist mode zeroed).
  std::vector<TorusField> spectral_gradient(const TorusField& f);

 private:
  TorusGrid grid_;
  void* fwd_ = nullptr;  // fftw_plan
  void* bwd_ = nullptr;
  void* buf_ = nullptr;  // fftw_complex*
  void* out_ = nullptr;
  std::array<std::vector<double>, 2> k_;
  std::vector<double> k2_;
  std::vector<double> sigma2_;
};

}  // namespace chnl
