#pragma once

#include <span>

#include "gridkit/image.hpp"
#include "gridkit/kaiser_bessel.hpp"
#include "gridkit/nudft.hpp"

namespace gridkit {

/// Fast approximation of the direct weighted adjoint transform: weight the
/// samples, spread them onto an oversampled Cartesian grid with the
/// separable Kaiser-Bessel kernel, apply the centered inverse DFT, divide by
/// the kernel's spatial transform (denominator clamped at 1e-8 magnitude)
/// and crop the central width x height region.  The oversampled grid is
/// ceil(alpha * size) per axis, rounded up to even so the centered circular
/// wrap is exact.
ComplexImage grid_recon(const FourierSamples& f, std::span<const double> w, int width,
                        int height, double alpha = 1.5,
                        const KernelSpec& spec = KernelSpec::for_gridding());

/// Spatial (image-domain) transform of the Kaiser-Bessel kernel at pixel
/// coordinate x of a grid with grid_size points: with q = pi W x / grid_size,
///   sinh(sqrt(beta^2 - q^2)) / sqrt(beta^2 - q^2)   for |q| <  beta,
///   sin (sqrt(q^2 - beta^2)) / sqrt(q^2 - beta^2)   for |q| >  beta,
/// and 1 at |q| = beta; divided by sinh(beta)/beta when unit-normalized.
double kb_spatial_transform(double x, const KernelSpec& spec, int grid_size);

/// Centered inverse DFT under the convention
///   out[n] = (1/N) sum_m in[m] e^{+i 2 pi (m - M/2)(n - N/2)/N}  per axis
/// (the 1/N omitted when normalize is false).  Grid sizes must be even.
ComplexImage centered_inverse_dft(const ComplexImage& grid, bool normalize);

}  // namespace gridkit
