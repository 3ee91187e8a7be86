#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "cbhrp/kernels.hpp"
#include "cbhrp/rng.hpp"

using namespace cbhrp;

TEST_CASE("distance_sq reference values") {
    const double xs[3] = {0.0, 3.0, -3.0};
    const double ys[3] = {0.0, 4.0, -4.0};
    double out[3];
    kernels::scalar_ops().distance_sq(xs, ys, 3, 0.0, 0.0, out);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 25.0);
    CHECK(out[2] == 25.0);
    kernels::scalar_ops().distance_sq(xs, ys, 3, 1.0, 1.0, out);
    CHECK(out[0] == 2.0);
    CHECK(out[1] == 13.0);
    CHECK(out[2] == 41.0);
}

TEST_CASE("affine reference values") {
    const double x[4] = {0.0, 1.0, 2.0, -1.5};
    double out[4];
    kernels::scalar_ops().affine(x, 4, 2.0, 1.0, out);
    CHECK(out[0] == 1.0);
    CHECK(out[1] == 3.0);
    CHECK(out[2] == 5.0);
    CHECK(out[3] == -2.0);
}

TEST_CASE("nearest_site picks first strict minimum") {
    const double px[4] = {0.0, 10.0, 4.9, 5.0};
    const double py[4] = {0.0, 0.0, 0.0, 0.0};
    const double sx[2] = {0.0, 10.0};
    const double sy[2] = {0.0, 0.0};
    std::int32_t idx[4];
    kernels::scalar_ops().nearest_site(px, py, 4, sx, sy, 2, idx);
    CHECK(idx[0] == 0);
    CHECK(idx[1] == 1);
    CHECK(idx[2] == 0);
    CHECK(idx[3] == 0); // exact tie: earliest site wins

    const double dupx[2] = {1.0, 1.0};
    const double dupy[2] = {1.0, 1.0};
    kernels::scalar_ops().nearest_site(px, py, 4, dupx, dupy, 2, idx);
    for (int i = 0; i < 4; ++i) CHECK(idx[i] == 0);

    kernels::scalar_ops().nearest_site(px, py, 4, sx, sy, 0, idx);
    for (int i = 0; i < 4; ++i) CHECK(idx[i] == -1);
}

namespace {

void fill_random(std::vector<double>& v, Xoshiro256ss& g) {
    for (double& x : v) x = g.uniform() * 200.0 - 50.0;
}

void check_backend(const kernels::Ops& simd) {
    const kernels::Ops& ref = kernels::scalar_ops();
    Xoshiro256ss g(2024);
    for (std::size_t n :
         {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
          std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{15},
          std::size_t{16}, std::size_t{17}, std::size_t{33}, std::size_t{100},
          std::size_t{401}}) {
        std::vector<double> xs(n), ys(n), a(n), b(n);
        fill_random(xs, g);
        fill_random(ys, g);
        const double px = g.uniform() * 100.0;
        const double py = g.uniform() * 100.0;

        ref.distance_sq(xs.data(), ys.data(), n, px, py, a.data());
        simd.distance_sq(xs.data(), ys.data(), n, px, py, b.data());
        CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);

        ref.affine(a.data(), n, 3.25e-8, 1e-4, b.data());
        std::vector<double> c(n);
        simd.affine(a.data(), n, 3.25e-8, 1e-4, c.data());
        CHECK(std::memcmp(b.data(), c.data(), n * sizeof(double)) == 0);

        for (std::size_t n_sites : {std::size_t{1}, std::size_t{2},
                                    std::size_t{5}, std::size_t{16}}) {
            std::vector<double> sx(n_sites), sy(n_sites);
            fill_random(sx, g);
            fill_random(sy, g);
            // Force exact coordinate collisions so ties are exercised.
            if (n_sites >= 2) {
                sx[n_sites - 1] = sx[0];
                sy[n_sites - 1] = sy[0];
            }
            std::vector<std::int32_t> ia(n), ib(n);
            ref.nearest_site(xs.data(), ys.data(), n, sx.data(), sy.data(),
                             n_sites, ia.data());
            simd.nearest_site(xs.data(), ys.data(), n, sx.data(), sy.data(),
                              n_sites, ib.data());
            CHECK(ia == ib);
        }
    }
}

}  // namespace

TEST_CASE("simd backends match scalar bit for bit") {
    int tested = 0;
    if (const kernels::Ops* ops = kernels::avx2_ops()) {
        CHECK(std::string(ops->name) == "avx2");
        check_backend(*ops);
        ++tested;
    }
    if (const kernels::Ops* ops = kernels::neon_ops()) {
        CHECK(std::string(ops->name) == "neon");
        check_backend(*ops);
        ++tested;
    }
    INFO("simd backends tested: " << tested);
    CHECK(std::string(kernels::scalar_ops().name) == "scalar");
}

TEST_CASE("active backend is one of the known implementations") {
    const std::string name = kernels::active().name;
    CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
