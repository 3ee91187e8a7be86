// AVX2 backend. Compiled with -mavx2 on x86_64 only; selected at runtime
// after a cpuid check. Uses explicit mul/add intrinsics (never FMA) so every
// lane performs exactly the scalar reference's IEEE operations.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "cbhrp/kernels.hpp"

namespace cbhrp::kernels {

namespace {

void distance_sq_avx2(const double* xs, const double* ys, std::size_t n,
                      double px, double py, double* out) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
        const __m256d d2 =
            _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        _mm256_storeu_pd(out + i, d2);
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        out[i] = dx * dx + dy * dy;
    }
}

void nearest_site_avx2(const double* xs, const double* ys, std::size_t n,
                       const double* site_x, const double* site_y,
                       std::size_t n_sites, std::int32_t* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        __m256d best = _mm256_set1_pd(__builtin_inf());
        __m256d best_j = _mm256_set1_pd(-1.0);
        for (std::size_t j = 0; j < n_sites; ++j) {
            const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(site_x[j]));
            const __m256d dy = _mm256_sub_pd(y, _mm256_set1_pd(site_y[j]));
            const __m256d d2 =
                _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d2, lt);
            best_j = _mm256_blendv_pd(
                best_j, _mm256_set1_pd(static_cast<double>(j)), lt);
        }
        alignas(32) double idx[4];
        _mm256_store_pd(idx, best_j);
        for (int lane = 0; lane < 4; ++lane)
            out[i + lane] = static_cast<std::int32_t>(idx[lane]);
    }
    if (i < n) {
        scalar_ops().nearest_site(xs + i, ys + i, n - i, site_x, site_y,
                                  n_sites, out + i);
    }
}

void affine_avx2(const double* x, std::size_t n, double a, double b,
                 double* out) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v =
            _mm256_add_pd(vb, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(out + i, v);
    }
    for (; i < n; ++i) out[i] = b + a * x[i];
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Ops ops{distance_sq_avx2, nearest_site_avx2, affine_avx2,
                         "avx2"};
    return &ops;
}

}  // namespace cbhrp::kernels

#endif  // x86_64
