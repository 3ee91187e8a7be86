#include "cbhrp/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>

namespace cbhrp::kernels {

namespace {

void distance_sq_scalar(const double* xs, const double* ys, std::size_t n,
                        double px, double py, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        out[i] = dx * dx + dy * dy;
    }
}

void nearest_site_scalar(const double* xs, const double* ys, std::size_t n,
                         const double* site_x, const double* site_y,
                         std::size_t n_sites, std::int32_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::int32_t best_j = -1;
        for (std::size_t j = 0; j < n_sites; ++j) {
            const double dx = xs[i] - site_x[j];
            const double dy = ys[i] - site_y[j];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) {
                best = d2;
                best_j = static_cast<std::int32_t>(j);
            }
        }
        out[i] = best_j;
    }
}

void affine_scalar(const double* x, std::size_t n, double a, double b,
                   double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = b + a * x[i];
}

const Ops& pick_active() {
    if (const char* force = std::getenv("CBHRP_KERNELS")) {
        if (std::strcmp(force, "scalar") == 0) return scalar_ops();
        if (std::strcmp(force, "avx2") == 0 && avx2_ops()) return *avx2_ops();
        if (std::strcmp(force, "neon") == 0 && neon_ops()) return *neon_ops();
        return scalar_ops(); // unknown or unsupported request: safe fallback
    }
    if (const Ops* ops = avx2_ops()) return *ops;
    if (const Ops* ops = neon_ops()) return *ops;
    return scalar_ops();
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{distance_sq_scalar, nearest_site_scalar,
                         affine_scalar, "scalar"};
    return ops;
}

#if !(defined(__x86_64__) || defined(_M_X64))
const Ops* avx2_ops() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(_M_ARM64))
const Ops* neon_ops() { return nullptr; }
#endif

const Ops& active() {
    static const Ops& chosen = pick_active();
    return chosen;
}

}  // namespace cbhrp::kernels
