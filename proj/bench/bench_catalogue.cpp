// Throughput comparison of the serial reference classifier against the
// OpenMP-parallel driver on one catalogue order, verifying identical output.
#include <chrono>
#include <iostream>
#include <string>

#include "paratopia/catalogue.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace paratopia;
using clk = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 10;
    std::string shape_arg = argc > 2 ? argv[2] : "12";
    int jobs = argc > 3 ? std::atoi(argv[3]) : 0;
#ifdef _OPENMP
    if (jobs <= 0) jobs = omp_get_max_threads();
#else
    if (jobs <= 0) jobs = 1;
#endif
    DeltaShape shape = shape_arg == "123" ? DeltaShape::D123 : DeltaShape::D12;

    auto t0 = clk::now();
    auto serial = classify_serial(n, shape);
    auto t1 = clk::now();
    ClassifyOptions par;
    par.jobs = jobs;
    auto parallel = classify(n, shape, par);
    auto t2 = clk::now();

    if (serial.size() != parallel.size()) {
        std::cerr << "size mismatch between serial and parallel runs\n";
        return 1;
    }
    for (size_t k = 0; k < serial.size(); ++k)
        if (serial[k].member != parallel[k].member || serial[k].method != parallel[k].method ||
            serial[k].nodes != parallel[k].nodes) {
            std::cerr << "entry mismatch at index " << k << "\n";
            return 1;
        }

    double ts = std::chrono::duration<double>(t1 - t0).count();
    double tp = std::chrono::duration<double>(t2 - t1).count();
    std::cout << "catalogue n=" << n << " delta=" << delta_shape_str(shape) << ": " << serial.size()
              << " cases\n";
    std::cout << "serial reference: " << ts << " s\n";
    std::cout << "openmp (" << jobs << " jobs): " << tp << " s\n";
    std::cout << "speedup: " << (tp > 0 ? ts / tp : 0.0) << "x, outputs identical\n";
    return 0;
}
