// Serial vs OpenMP weight enumeration on a few RS codes.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "posetcode/codes.hpp"
#include "posetcode/kernels.hpp"

using namespace posetcode;

namespace {

struct Case {
    unsigned p, m;
    std::vector<std::uint32_t> points;
    unsigned s, t;
    std::optional<unsigned> b_row;
};

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::stoi(argv[1]) : 3;
    const std::vector<Case> cases = {
        {5, 1, {1, 3, 4}, 2, 4, 1u},
        {7, 1, {0, 1, 2, 3}, 3, 7, 1u},
        {7, 1, {0, 1, 2, 3}, 3, 6, std::nullopt},
        {2, 3, {0, 1, 2, 3}, 4, 9, 2u},
        {3, 2, {0, 1, 2}, 4, 8, 1u},
    };
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
    std::cout << std::left << std::setw(28) << "code" << std::setw(10) << "words" << std::setw(12) << "serial_s"
              << std::setw(12) << "parallel_s" << "speedup  same\n";
    for (const auto& c : cases) {
        const auto F = gf::Field::make(c.p, c.m);
        std::vector<gf::Elem> pts;
        for (auto v : c.points) pts.push_back(gf::Elem{v});
        const auto code = codes::build_code({F, pts, c.s, c.t, c.b_row}).code;
        const std::uint64_t budget = 50'000'000;
        codes::WeightEnumerator a, b;
        double ts = 1e300, tp = 1e300;
        for (int i = 0; i < reps; ++i) {
            ts = std::min(ts, seconds([&] { a = kernels::enumerate_serial(code, budget); }));
            tp = std::min(tp, seconds([&] { b = kernels::enumerate_parallel(code, budget, 0); }));
        }
        const std::string name = "GF(" + std::to_string(F->q()) + ") " + code.metric.describe() + " t=" +
                                 std::to_string(c.t);
        std::cout << std::setw(28) << name << std::setw(10) << a.total() << std::setw(12) << std::setprecision(4)
                  << ts << std::setw(12) << tp << std::setw(9) << ts / tp << (a == b ? "yes" : "NO") << "\n";
        if (!(a == b)) return 1;
    }
    return 0;
}
