// NEON backend for aarch64 (NEON is baseline there, no runtime probe
// needed). Explicit vmul/vadd — vfma is deliberately avoided to keep
// results bit-identical to the scalar reference.

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include "cbhrp/kernels.hpp"

namespace cbhrp::kernels {

namespace {

void distance_sq_neon(const double* xs, const double* ys, std::size_t n,
                      double px, double py, double* out) {
    const float64x2_t vpx = vdupq_n_f64(px);
    const float64x2_t vpy = vdupq_n_f64(py);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vpx);
        const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vpy);
        const float64x2_t d2 =
            vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
        vst1q_f64(out + i, d2);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        out[i] = dx * dx + dy * dy;
    }
}

void nearest_site_neon(const double* xs, const double* ys, std::size_t n,
                       const double* site_x, const double* site_y,
                       std::size_t n_sites, std::int32_t* out) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(xs + i);
        const float64x2_t y = vld1q_f64(ys + i);
        float64x2_t best = vdupq_n_f64(__builtin_inf());
        float64x2_t best_j = vdupq_n_f64(-1.0);
        for (std::size_t j = 0; j < n_sites; ++j) {
            const float64x2_t dx = vsubq_f64(x, vdupq_n_f64(site_x[j]));
            const float64x2_t dy = vsubq_f64(y, vdupq_n_f64(site_y[j]));
            const float64x2_t d2 =
                vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
            const uint64x2_t lt = vcltq_f64(d2, best);
            best = vbslq_f64(lt, d2, best);
            best_j = vbslq_f64(lt, vdupq_n_f64(static_cast<double>(j)), best_j);
        }
        double idx[2];
        vst1q_f64(idx, best_j);
        out[i] = static_cast<std::int32_t>(idx[0]);
        out[i + 1] = static_cast<std::int32_t>(idx[1]);
    }
    if (i < n) {
        scalar_ops().nearest_site(xs + i, ys + i, n - i, site_x, site_y,
                                  n_sites, out + i);
    }
}

void affine_neon(const double* x, std::size_t n, double a, double b,
                 double* out) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out + i, vaddq_f64(vb, vmulq_f64(va, vld1q_f64(x + i))));
    }
    for (; i < n; ++i) out[i] = b + a * x[i];
}

}  // namespace

const Ops* neon_ops() {
    static const Ops ops{distance_sq_neon, nearest_site_neon, affine_neon,
                         "neon"};
    return &ops;
}

}  // namespace cbhrp::kernels

#endif  // aarch64
