#include "posetcode/kernels.hpp"

#include <omp.h>

namespace posetcode::kernels {

using codes::Code;
using codes::WeightEnumerator;
using gf::Elem;

WeightEnumerator enumerate_serial(const Code& code, std::uint64_t budget) {
    const auto q = code.field->q();
    const auto total = codes::checked_size(q, code.dim(), budget);
    WeightEnumerator out{std::vector<std::uint64_t>(code.length() + 1, 0)};
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto m = codes::message_from_index(idx, q, code.dim());
        ++out.counts[code.metric.weight(codes::encode(code, m))];
    }
    return out;
}

WeightEnumerator enumerate_parallel(const Code& code, std::uint64_t budget, int workers) {
    const auto& F = *code.field;
    const std::uint32_t q = F.q();
    const std::size_t k = code.dim();
    const auto total = codes::checked_size(q, k, budget);
    const std::size_t len = code.length();
    WeightEnumerator out{std::vector<std::uint64_t>(len + 1, 0)};
    if (k == 0) {
        out.counts[0] = 1;
        return out;
    }
    const std::size_t n = std::size_t(code.metric.s) * code.metric.r;
    // multiples[(i*q + c)*n + e] = c * generator_i, entry e
    std::vector<Elem> multiples(k * q * n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t c = 0; c < q; ++c)
            for (std::size_t e = 0; e < n; ++e)
                multiples[(i * q + c) * n + e] = F.mul(Elem{c}, code.generator[i].entries[e]);

    const auto high = static_cast<long long>(total / q);
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> local(len + 1, 0);
        std::vector<Elem> base(n), word(n);
#pragma omp for schedule(static)
        for (long long hi = 0; hi < high; ++hi) {
            std::fill(base.begin(), base.end(), Elem{});
            auto x = static_cast<std::uint64_t>(hi);
            for (std::size_t i = 1; i < k; ++i, x /= q) {
                const auto c = static_cast<std::uint32_t>(x % q);
                if (c == 0) continue;
                const Elem* m = &multiples[(i * q + c) * n];
                for (std::size_t e = 0; e < n; ++e) base[e] = F.add(base[e], m[e]);
            }
            for (std::uint32_t c = 0; c < q; ++c) {
                const Elem* m = &multiples[std::size_t(c) * n];
                for (std::size_t e = 0; e < n; ++e) word[e] = F.add(base[e], m[e]);
                ++local[code.metric.weight_raw(word.data())];
            }
        }
#pragma omp critical(posetcode_merge)
        for (std::size_t w = 0; w <= len; ++w) out.counts[w] += local[w];
    }
    return out;
}

}  // namespace posetcode::kernels
