#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel kernels for the geometry/energy hot loops. The scalar
// variants are the reference semantics; SIMD variants must match them
// bit-for-bit (same IEEE operation order per element, no FMA contraction),
// so a run's output is identical no matter which backend is dispatched.

namespace cbhrp::kernels {

struct Ops {
    // out[i] = (xs[i]-px)^2 + (ys[i]-py)^2
    void (*distance_sq)(const double* xs, const double* ys, std::size_t n,
                        double px, double py, double* out);
    // For each point, index of the site with strictly smallest squared
    // distance; earliest site wins ties. out[i] = -1 when n_sites == 0.
    void (*nearest_site)(const double* xs, const double* ys, std::size_t n,
                         const double* site_x, const double* site_y,
                         std::size_t n_sites, std::int32_t* out);
    // out[i] = b + a * x[i]
    void (*affine)(const double* x, std::size_t n, double a, double b,
                   double* out);
    const char* name;
};

// Reference implementation, always available.
const Ops& scalar_ops();

// SIMD backends; null when not compiled in or not supported by this CPU.
const Ops* avx2_ops();
const Ops* neon_ops();

// Backend picked at first use: best supported SIMD, unless the environment
// variable CBHRP_KERNELS (scalar|avx2|neon) forces one.
const Ops& active();

}  // namespace cbhrp::kernels
