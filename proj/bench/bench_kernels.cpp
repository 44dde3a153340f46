// Serial vs OpenMP kernel comparison, plus the full capture path at the sizes
// the simulator actually uses. Run: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "ati/kernels.hpp"
#include "ati/rng.hpp"
#include "ati/sensecam.hpp"

using namespace ati;
using Clock = std::chrono::steady_clock;

namespace {

double checksum_sink = 0.0;

template <typename Fn>
double time_ms(int repeats, Fn fn) {
    fn();  // warm up
    auto t0 = Clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

Image random_image(int size, Rng& rng) {
    Image img(size, size);
    for (double& v : img.px) v = rng.uniform01();
    return img;
}

void report(const char* name, int size, double serial_ms, double omp_ms) {
    std::printf("%-22s %5dx%-5d serial %9.3f ms   omp %9.3f ms   speedup %5.2fx\n",
                name, size, size, serial_ms, omp_ms, serial_ms / omp_ms);
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = argc > 1 ? std::atoi(argv[1]) : 20;
    std::printf("threads: %d, repeats: %d\n", omp_get_max_threads(), repeats);

    Rng rng(7);
    for (int size : {64, 256, 512, 1024}) {
        Image img = random_image(size, rng);
        Image out, resp;

        double s = time_ms(repeats, [&] { kernels::box_blur_h_serial(img, out, 9); });
        double p = time_ms(repeats, [&] { kernels::box_blur_h_omp(img, out, 9); });
        report("box_blur_h k=9", size, s, p);

        std::vector<double> noise(img.size(), 0.001);
        s = time_ms(repeats, [&] { kernels::shade_serial(img, out, 1.3, noise.data()); });
        p = time_ms(repeats, [&] { kernels::shade_omp(img, out, 1.3, noise.data()); });
        report("shade", size, s, p);

        int half = size / 2;
        s = time_ms(repeats, [&] { kernels::area_downsample_serial(img, out, half, half); });
        p = time_ms(repeats, [&] { kernels::area_downsample_omp(img, out, half, half); });
        report("area_downsample /2", size, s, p);

        s = time_ms(repeats, [&] {
            kernels::laplacian_response_serial(img, resp);
            checksum_sink += kernels::population_variance_serial(resp);
        });
        p = time_ms(repeats, [&] {
            kernels::laplacian_response_omp(img, resp);
            checksum_sink += kernels::population_variance_omp(resp);
        });
        report("laplacian+variance", size, s, p);
        std::printf("\n");
    }

    // End-to-end capture at simulator scale (dispatchers pick the path).
    for (int size : {64, 256}) {
        ScenePattern scene = make_default_scene(size, 0, 0.0);
        SettingGrids grids = SettingGrids::defaults();
        CameraModelParams cam;
        Rng cap_rng(11);
        double ms = time_ms(repeats, [&] {
            Frame f = capture_frame(scene, true, {5, 3}, {1.0, 0.9}, {12.0}, cam,
                                    grids, 0.0, cap_rng);
            checksum_sink += laplacian_variance(f, 32);
        });
        std::printf("capture+lapvar        %5dx%-5d %9.3f ms per frame\n", size, size, ms);
    }
    std::printf("(checksum %.3f)\n", checksum_sink);
    return 0;
}
