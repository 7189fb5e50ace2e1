#include "posetcode/sweep.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "posetcode/ag.hpp"
#include "posetcode/codes.hpp"
#include "posetcode/error.hpp"

namespace posetcode::sweep {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::OutOfRange: return "OUT_OF_RANGE";
        case Status::Budget: return "BUDGET";
    }
    return "?";
}

namespace {

const std::vector<unsigned> kRsFields{3, 4, 5, 7, 8, 9};
const std::vector<unsigned> kAgFields{5, 7, 8};

gf::FieldPtr field_of_order(unsigned q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!gf::is_prime(p)) continue;
        std::uint32_t m = 0;
        unsigned x = q;
        while (x % p == 0) {
            x /= p;
            ++m;
        }
        if (x == 1) return gf::Field::make(p, m);
        if (m > 0) break;
    }
    throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
}

std::vector<gf::Elem> first_points(unsigned r) {
    std::vector<gf::Elem> pts;
    for (unsigned i = 0; i < r; ++i) pts.push_back(gf::Elem{i});
    return pts;
}

// q^k <= cap, treating k <= 0 as inside.
bool within(std::uint64_t q, long long k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (long long i = 0; i < k; ++i) {
        total *= q;
        if (total > cap) return false;
    }
    return true;
}

// First message of minimum nonzero weight, described by its polynomial.
std::string rs_witness(const codes::RSCode& code, std::size_t d, std::uint64_t budget) {
    const auto q = code.spec.field->q();
    const auto total = codes::checked_size(q, code.code.dim(), budget);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const auto m = codes::message_from_index(idx, q, code.code.dim());
        if (code.code.metric.weight(codes::encode(code.code, m)) == d)
            return "witness f=" + poly::pretty(codes::message_polynomial(code, m), 'z');
    }
    return {};
}

void measure_rs(Row& row, const codes::RSCodeSpec& spec, const Options& opt) {
    codes::RSCode code;
    try {
        code = codes::build_code(spec);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParameterOutOfRange) throw;
        row.status = Status::OutOfRange;
        return;
    }
    row.observed_dim = static_cast<long long>(code.code.dim());
    try {
        row.observed_d = static_cast<long long>(codes::weight_enumerator(code.code, opt.budget, opt.workers).min_nonzero());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        // A dimension mismatch is already a failure; only the distance is unknown.
        row.status = row.observed_dim == row.expected_dim ? Status::Budget : Status::Fail;
        if (row.status == Status::Fail) row.detail = "d not enumerated (budget)";
        return;
    }
    const bool ok = row.observed_dim == row.expected_dim && row.observed_d == row.expected_d;
    row.status = ok ? Status::Pass : Status::Fail;
    if (!ok && row.observed_d > 0) row.detail = rs_witness(code, static_cast<std::size_t>(row.observed_d), opt.budget);
}

std::string rs_params(unsigned q, unsigned r, unsigned s, std::optional<unsigned> b_row, unsigned t) {
    std::ostringstream os;
    os << "q=" << q << " r=" << r << " s=" << s;
    if (b_row) os << " b_row=" << *b_row;
    os << " t=" << t;
    return os.str();
}

Row make_row(std::string grid, std::string params) {
    Row row;
    row.grid = std::move(grid);
    row.params = std::move(params);
    return row;
}

}  // namespace

std::vector<Row> bottleneck_rs(const Options& opt) {
    std::vector<Row> rows;
    for (unsigned q : opt.fields.empty() ? kRsFields : opt.fields) {
        const auto F = field_of_order(q);
        for (unsigned r = 2; r <= std::min(q, 4u); ++r)
            for (unsigned s = 2; s <= 4; ++s)
                for (unsigned b = 1; b <= s; ++b) {
                    const unsigned lo = opt.all_t ? 1 : (opt.strict ? r * b : r * (b - 1) + 1);
                    const unsigned hi = opt.all_t ? r * s + 1 : r * s;
                    for (unsigned t = lo; t <= hi; ++t) {
                        const long long k = static_cast<long long>(t) - r + 1;
                        if (!within(q, k, kGridCap)) continue;
                        Row row = make_row("bottleneck-rs", rs_params(q, r, s, b, t));
                        row.expected_dim = k;
                        row.expected_d = static_cast<long long>(r) * s - t + 1;
                        measure_rs(row, {F, first_points(r), s, t, b}, opt);
                        rows.push_back(std::move(row));
                    }
                }
    }
    return rows;
}

std::vector<Row> nrt(const Options& opt) {
    std::vector<Row> rows;
    for (unsigned q : opt.fields.empty() ? kRsFields : opt.fields) {
        const auto F = field_of_order(q);
        for (unsigned r = 2; r <= std::min(q, 4u); ++r)
            for (unsigned s = 2; s <= 4; ++s)
                for (unsigned t = 1; t <= (opt.all_t ? r * s + 1 : r * s); ++t) {
                    if (!within(q, t, kGridCap)) continue;
                    Row row = make_row("nrt", rs_params(q, r, s, std::nullopt, t));
                    row.expected_dim = t;
                    row.expected_d = static_cast<long long>(r) * s - t + 1;
                    measure_rs(row, {F, first_points(r), s, t, std::nullopt}, opt);
                    rows.push_back(std::move(row));
                }
    }
    return rows;
}

std::vector<Row> constrained_dim(const Options& opt) {
    std::vector<Row> rows;
    for (unsigned q : opt.fields.empty() ? kRsFields : opt.fields) {
        const auto F = field_of_order(q);
        for (unsigned r = 2; r <= std::min(q, 4u); ++r) {
            std::set<std::pair<unsigned, unsigned>> cases;  // (order, t)
            for (unsigned s = 2; s <= 4; ++s)
                for (unsigned b = 1; b <= s; ++b)
                    for (unsigned t = r * (b - 1) + 1; t <= r * s; ++t) cases.insert({b - 1, t});
            for (unsigned t = 1; t <= 4; ++t)
                for (unsigned order = t; order <= t + 1; ++order) cases.insert({order, t});
            for (auto [order, t] : cases) {
                if (opt.strict && order < t && t < r * (order + 1)) continue;
                std::ostringstream params;
                params << "q=" << q << " r=" << r << " order=" << order << " t=" << t;
                Row row = make_row("constrained-dim", params.str());
                row.expected_dim = order >= t ? t : static_cast<long long>(t) - r + 1;
                row.observed_dim =
                    static_cast<long long>(codes::constrained_basis(F, first_points(r), t, order).size());
                row.status = row.observed_dim == row.expected_dim ? Status::Pass : Status::Fail;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<Row> ag(const Options& opt) {
    std::vector<Row> rows;
    for (unsigned q : opt.fields.empty() ? kAgFields : opt.fields) {
        const auto F = field_of_order(q);
        for (unsigned r = 2; r <= 3; ++r)
            for (unsigned s = 2; s <= 3; ++s) {
                std::vector<ag::Place> places;
                for (unsigned i = 0; i < r; ++i) places.push_back(ag::Place::finite(gf::Elem{i}));
                std::vector<int> n(r + 1, -3);
                while (true) {
                    ag::Divisor G;
                    for (unsigned i = 0; i < r; ++i)
                        if (n[i]) G[places[i]] = n[i];
                    if (n[r]) G[ag::Place::infinity()] = n[r];
                    const long long deg = ag::degree(G), rs = static_cast<long long>(r) * s;
                    for (bool constrained : {true, false}) {
                        const bool in_range = constrained ? (deg >= r - 1 && deg <= rs - r + 1) : (deg >= 0 && deg <= rs - 1);
                        if (!in_range && !opt.all_t) continue;
                        std::ostringstream params;
                        params << "q=" << q << " r=" << r << " s=" << s << " G=" << ag::divisor_to_text(G)
                               << " deg=" << deg;
                        Row row = make_row(constrained ? "ag" : "ag-unconstrained", params.str());
                        row.expected_dim = constrained ? deg - r + 2 : deg + 1;
                        row.expected_d = rs - deg;
                        ag::AGCode code;
                        try {
                            code = ag::build_ag_code({F, places, G, s, constrained});
                        } catch (const Error& e) {
                            if (e.kind() != ErrorKind::ParameterOutOfRange) throw;
                            row.status = Status::OutOfRange;
                            rows.push_back(std::move(row));
                            continue;
                        }
                        try {
                            const auto rep = ag::verify_bounds(code, opt.budget, opt.workers);
                            row.observed_dim = static_cast<long long>(rep.k);
                            row.observed_d = static_cast<long long>(rep.d);
                            row.status = rep.all_ok() ? Status::Pass : Status::Fail;
                            if (constrained && !rep.mds) row.detail = "not MDS";
                        } catch (const Error& e) {
                            if (e.kind() != ErrorKind::BudgetExceeded) throw;
                            row.observed_dim = static_cast<long long>(code.code.dim());
                            row.status = Status::Budget;
                        }
                        rows.push_back(std::move(row));
                    }
                    std::size_t i = 0;
                    while (i <= r && n[i] == 3) n[i++] = -3;
                    if (i > r) break;
                    ++n[i];
                }
            }
    }
    return rows;
}

std::string format_row(const Row& row) {
    std::ostringstream os;
    os << row.grid << ' ' << row.params;
    const bool bounds = row.grid.rfind("ag", 0) == 0;
    if (row.status != Status::OutOfRange) {
        os << " dim=" << row.observed_dim << (bounds ? ">=" : "/") << row.expected_dim;
        if (row.grid != "constrained-dim" && row.status != Status::Budget)
            os << " d=" << row.observed_d << (bounds ? ">=" : "/") << row.expected_d;
    }
    os << ' ' << to_string(row.status);
    if (!row.detail.empty()) os << ' ' << row.detail;
    return os.str();
}

std::size_t count(const std::vector<Row>& rows, Status s) {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.status == s;
    return c;
}

std::string summary(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "PASS " << count(rows, Status::Pass) << " FAIL " << count(rows, Status::Fail) << " OUT_OF_RANGE "
       << count(rows, Status::OutOfRange) << " BUDGET " << count(rows, Status::Budget);
    return os.str();
}

}  // namespace posetcode::sweep
