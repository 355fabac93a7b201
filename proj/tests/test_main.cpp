#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>

#include <omp.h>

int main(int argc, char** argv) {
    // the parallel kernels fall back to serial on one thread; make sure the
    // split paths are the ones compared against the serial references
    omp_set_num_threads(std::max(4, omp_get_max_threads()));
    doctest::Context context(argc, argv);
    return context.run();
}
