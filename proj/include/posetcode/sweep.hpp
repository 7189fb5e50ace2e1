#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posetcode::sweep {

enum class Status { Pass, Fail, OutOfRange, Budget };

std::string_view to_string(Status s) noexcept;

struct Row {
    std::string grid;    // "bottleneck-rs", "nrt", "constrained-dim", "ag", "ag-unconstrained"
    std::string params;  // "q=5 r=3 s=2 b_row=1 t=4"
    Status status = Status::Pass;
    // Expected values are bounds for the ag grids and exact values otherwise.
    long long expected_dim = 0;
    long long observed_dim = 0;
    long long expected_d = 0;
    long long observed_d = 0;
    std::string detail;
};

struct Options {
    std::uint64_t budget = 500000;
    int workers = 0;
    /// Also list t outside the hypothesis range (reported OUT_OF_RANGE).
    bool all_t = false;
    /// Restrict bottleneck-rs to t >= r * b_row and constrained-dim to t >= r * (order + 1).
    bool strict = false;
    std::vector<unsigned> fields;  // q values; empty means the grid default
};

/// q^(t-r+1) <= this cap defines the bottleneck-rs grid (q^t for nrt).
inline constexpr std::uint64_t kGridCap = 500000;

/// Bottleneck RS codes: q in {3,4,5,7,8,9}, 2 <= r <= min(q,4), 2 <= s <= 4,
/// 1 <= b_row <= s, r(b_row-1)+1 <= t <= rs. Expects dim t-r+1, d rs-t+1.
std::vector<Row> bottleneck_rs(const Options& opt);
/// NRT RS codes on the analogous grid; expects dim t, d rs-t+1.
std::vector<Row> nrt(const Options& opt);
/// Dimension of the constrained space in P(t-1): the bottleneck-rs tuples with
/// order b_row-1, plus orders >= t where the constraint is vacuous.
std::vector<Row> constrained_dim(const Options& opt);
/// Genus-0 codes: q in {5,7,8}, r, s in {2,3}, places x = 0..r-1, G supported
/// on them and infinity with |coefficients| <= 3. Constrained rows check the
/// bound pair and MDS; unconstrained rows check the NRT bounds.
std::vector<Row> ag(const Options& opt);

std::string format_row(const Row& row);
/// "PASS n FAIL n OUT_OF_RANGE n BUDGET n"
std::string summary(const std::vector<Row>& rows);
std::size_t count(const std::vector<Row>& rows, Status s);

}  // namespace posetcode::sweep
