#pragma once

#include <cstdint>

#include "posetcode/codes.hpp"

namespace posetcode::kernels {

/// Reference tally: encodes every message from scratch and applies the checked
/// weight function. Single threaded.
codes::WeightEnumerator enumerate_serial(const codes::Code& code, std::uint64_t budget);

/// OpenMP tally over the high message digits; the low digit runs through a
/// table of generator multiples. Histograms are merged per thread, so the
/// result does not depend on the worker count or schedule.
codes::WeightEnumerator enumerate_parallel(const codes::Code& code, std::uint64_t budget, int workers = 0);

}  // namespace posetcode::kernels
