// Timing harness comparing the parallel kernels against their serial
// references: cover verification (signature kernel vs per-pair
// counting) and the labeling search at one and many threads.

#include "oddcover/constructions.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run serially\n\n");
#endif

    using namespace oddcover;

    {
        const OddCover k80 = field_lift_cover(GFContext(3, 2), 2, hyperplane_cover(2));
        const Graph g = Graph::complete(80);
        const int reps = 20;
        const double serial = time_ms([&] { (void)verify_serial(g, k80); }, reps);
        const double parallel = time_ms([&] { (void)verify(g, k80); }, reps);
        std::printf("verify K_80 lift cover (40 bicliques, %d reps)\n", reps);
        std::printf("  serial reference : %8.3f ms\n", serial);
        std::printf("  parallel kernel  : %8.3f ms   (x%.2f)\n\n", parallel,
                    serial / parallel);
    }

    {
        const OddCover big = pairs_to_cover(pairs_18mod24(66));
        const Graph g = Graph::complete(66);
        const int reps = 20;
        const double serial = time_ms([&] { (void)verify_serial(g, big); }, reps);
        const double parallel = time_ms([&] { (void)verify(g, big); }, reps);
        std::printf("verify K_66 pairs cover (33 bicliques, %d reps)\n", reps);
        std::printf("  serial reference : %8.3f ms\n", serial);
        std::printf("  parallel kernel  : %8.3f ms   (x%.2f)\n\n", parallel,
                    serial / parallel);
    }

    {
        const Graph k9 = Graph::complete(9);
        SearchOptions one;
        one.threads = 1;
        SearchOptions many;
        const double serial = time_ms([&] { (void)has_cover_of_size(k9, 4, one); }, 5);
        const double parallel = time_ms([&] { (void)has_cover_of_size(k9, 4, many); }, 5);
        std::printf("refute K_9 at k = 4 (exhaustive labeling search)\n");
        std::printf("  1 thread         : %8.3f ms\n", serial);
        std::printf("  default threads  : %8.3f ms   (x%.2f)\n\n", parallel,
                    serial / parallel);
    }

    {
        SearchOptions one;
        one.threads = 1;
        SearchOptions many;
        const double serial = time_ms([&] { (void)pairs_search(14, one); }, 5);
        const double parallel = time_ms([&] { (void)pairs_search(14, many); }, 5);
        std::printf("refute pairs construction of K_14\n");
        std::printf("  1 thread         : %8.3f ms\n", serial);
        std::printf("  default threads  : %8.3f ms   (x%.2f)\n", parallel,
                    serial / parallel);
    }
    return 0;
}
