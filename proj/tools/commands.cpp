#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetcode/ag.hpp"
#include "posetcode/codes.hpp"
#include "posetcode/error.hpp"
#include "posetcode/golden.hpp"
#include "posetcode/io.hpp"
#include "posetcode/sweep.hpp"

namespace posetcode::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string out_path;
    std::uint64_t budget = 0;
    int workers = 0;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BudgetExceeded: return kBudgetExceeded;
        case ErrorKind::GoldenMismatch:
        case ErrorKind::NotConstantRow: return kPropertyFailure;
        default: return kParameterError;
    }
}

// Accepts "p^m", a prime power "8", or a prime "5"; optional explicit modulus.
gf::FieldPtr parse_q(const std::string& text, const std::string& modulus) {
    gf::FieldPtr F;
    if (text.find('^') != std::string::npos) {
        F = gf::parse_field(text);
    } else {
        std::uint64_t q = 0;
        try {
            std::size_t used = 0;
            q = std::stoull(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "field must be q, p or p^m, got '" + text + "'");
        }
        if (q > gf::Field::kMaxOrder) throw Error(ErrorKind::FieldTooLarge, text + " exceeds 2^20");
        std::uint32_t p = 2;
        while (p <= q && q % p != 0) ++p;
        std::uint32_t m = 0;
        std::uint64_t x = q;
        while (x > 1 && x % p == 0) {
            x /= p;
            ++m;
        }
        if (q < 2 || x != 1) throw Error(ErrorKind::NonPrimeCharacteristic, text + " is not a prime power");
        F = gf::Field::make(p, m);
    }
    if (!modulus.empty()) {
        auto coeffs = gf::parse_modulus(modulus);
        if (coeffs.size() != F->m() + 1)
            throw Error(ErrorKind::InvalidModulus, "modulus degree must equal m = " + std::to_string(F->m()));
        F = gf::Field::make(F->p(), std::move(coeffs));
    }
    return F;
}

std::vector<gf::Elem> parse_points(const gf::Field& F, const std::string& text) {
    std::vector<gf::Elem> pts;
    for (const auto& P : ag::parse_places(F, text)) {
        if (P.infinite) throw Error(ErrorKind::ParseError, "RS evaluation points must be finite");
        pts.push_back(P.alpha);
    }
    return pts;
}

std::string rational(const codes::Rational& x) {
    std::ostringstream os;
    os << x.numerator() << '/' << x.denominator();
    return os.str();
}

// --- paper-example --------------------------------------------------------

struct ExampleRow {
    std::string polynomial, hyperderivative, codeword;
    std::size_t weight = 0;
};

std::vector<ExampleRow> parse_golden(std::string_view csv) {
    std::vector<ExampleRow> rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line != "polynomial,hyperderivative,codeword,weight")
                throw Error(ErrorKind::GoldenMismatch, "unexpected golden header '" + line + "'");
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 4) throw Error(ErrorKind::GoldenMismatch, "malformed golden row '" + line + "'");
        ExampleRow row{cells[0], cells[1], cells[2], 0};
        try {
            row.weight = std::stoul(cells[3]);
        } catch (const std::exception&) {
            throw Error(ErrorKind::GoldenMismatch, "malformed golden weight '" + cells[3] + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_paper_example(const Common& c, const std::string& format, const std::string& golden_path,
                      std::ostream& out) {
    const auto F = gf::Field::make(5, 1);
    const auto code = codes::build_code({F, {gf::Elem{1}, gf::Elem{3}, gf::Elem{4}}, 2, 4, 1u});
    const auto q = F->q();
    const auto total = codes::checked_size(q, code.code.dim(), c.budget);
    std::vector<ExampleRow> rows;
    json jrows = json::array();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto m = codes::message_from_index(idx, q, code.code.dim());
        const auto f = codes::message_polynomial(code, m);
        const auto A = codes::encode(code.code, m);
        if (A != codes::encode_poly(code, m))
            throw Error(ErrorKind::GoldenMismatch, "generator and polynomial encodings disagree");
        ExampleRow row{poly::pretty(f), poly::pretty(poly::hyperderivative(f, 1)), io::matrix_text(A),
                       code.code.metric.weight(A)};
        jrows.push_back({{"polynomial", row.polynomial},
                         {"hyperderivative", row.hyperderivative},
                         {"codeword", io::matrix_to_json(A)},
                         {"weight", row.weight}});
        rows.push_back(std::move(row));
    }
    const auto en = codes::weight_enumerator(code.code, c.budget, c.workers);
    const auto d = en.min_nonzero();

    std::string golden_text;
    if (golden_path.empty()) {
        golden_text = data::kPaperExampleGolden;
    } else {
        std::ifstream in(golden_path);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + golden_path);
        golden_text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto golden = parse_golden(golden_text);
    std::string mismatch;
    if (golden.size() != rows.size()) mismatch = "golden has " + std::to_string(golden.size()) + " rows, computed " +
                                                 std::to_string(rows.size());
    for (std::size_t i = 0; mismatch.empty() && i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = golden[i];
        if (a.polynomial != b.polynomial || a.hyperderivative != b.hyperderivative || a.codeword != b.codeword ||
            a.weight != b.weight)
            mismatch = "row " + std::to_string(i + 1) + ": computed '" + a.polynomial + "," + a.hyperderivative + "," +
                       a.codeword + "," + std::to_string(a.weight) + "' golden '" + b.polynomial + "," +
                       b.hyperderivative + "," + b.codeword + "," + std::to_string(b.weight) + "'";
    }

    if (format == "json") {
        json j{{"field", io::field_to_json(*F)},
               {"points", {1, 3, 4}},
               {"metric", io::metric_to_json(code.code.metric)},
               {"rows", jrows},
               {"length", code.code.length()},
               {"dim", code.code.dim()},
               {"min_distance", d},
               {"enumerator", io::enumerator_to_json(en)},
               {"golden", mismatch.empty() ? "match" : "mismatch"}};
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "polynomial,hyperderivative,codeword,weight\n";
        for (const auto& r : rows)
            out << r.polynomial << ',' << r.hyperderivative << ',' << r.codeword << ',' << r.weight << '\n';
    } else {
        std::size_t w0 = 10, w1 = 15, w2 = 8;
        for (const auto& r : rows) {
            w0 = std::max(w0, r.polynomial.size());
            w1 = std::max(w1, r.hyperderivative.size());
            w2 = std::max(w2, r.codeword.size());
        }
        out << "RS code over GF(5), points (1,3,4), t=4, metric " << code.code.metric.describe() << "\n\n";
        out << std::left << std::setw(int(w0)) << "polynomial" << "  " << std::setw(int(w1)) << "d^1 polynomial"
            << "  " << std::setw(int(w2)) << "codeword" << "  weight\n";
        for (const auto& r : rows)
            out << std::setw(int(w0)) << r.polynomial << "  " << std::setw(int(w1)) << r.hyperderivative << "  "
                << std::setw(int(w2)) << r.codeword << "  " << r.weight << '\n';
        out << "\nlength=" << code.code.length() << " dim=" << code.code.dim() << " min_distance=" << d << '\n';
        out << "weight enumerator: " << en.polynomial() << '\n';
        out << "golden table: " << (mismatch.empty() ? "match" : "MISMATCH") << '\n';
    }
    if (!mismatch.empty()) throw Error(ErrorKind::GoldenMismatch, mismatch);
    return kOk;
}

// --- sweep ----------------------------------------------------------------

int cmd_sweep(const Common& c, const std::string& grid, bool all_t, bool strict, const std::string& fields,
              std::ostream& out) {
    sweep::Options opt;
    opt.budget = c.budget;
    opt.workers = c.workers;
    opt.all_t = all_t;
    opt.strict = strict;
    if (!fields.empty()) {
        std::stringstream ss(fields);
        std::string item;
        while (std::getline(ss, item, ',')) opt.fields.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    std::vector<std::string> grids;
    if (grid == "all")
        grids = {"bottleneck-rs", "nrt", "constrained-dim", "ag"};
    else
        grids = {grid};
    std::vector<sweep::Row> all;
    for (const auto& g : grids) {
        std::vector<sweep::Row> rows;
        if (g == "bottleneck-rs")
            rows = sweep::bottleneck_rs(opt);
        else if (g == "nrt")
            rows = sweep::nrt(opt);
        else if (g == "constrained-dim")
            rows = sweep::constrained_dim(opt);
        else
            rows = sweep::ag(opt);
        for (const auto& r : rows) out << sweep::format_row(r) << '\n';
        out << "# " << g << ": " << sweep::summary(rows) << '\n';
        all.insert(all.end(), rows.begin(), rows.end());
    }
    if (grids.size() > 1) out << "# total: " << sweep::summary(all) << '\n';
    return sweep::count(all, sweep::Status::Fail) ? kPropertyFailure : kOk;
}

// --- poset ----------------------------------------------------------------

int cmd_poset_show(unsigned s, unsigned r, unsigned b_row, const std::string& format, std::ostream& out) {
    const auto P = b_row ? poset::bottleneck({s, r, b_row}) : poset::chain_union(s, r);
    const std::string name =
        b_row ? "U(" + std::to_string(s) + "," + std::to_string(r) + "," + std::to_string(b_row) + ")"
              : "C(" + std::to_string(s) + "," + std::to_string(r) + ")";
    if (format == "json")
        out << P.to_json() << '\n';
    else
        out << P.to_dot(name);
    return kOk;
}

// --- code -----------------------------------------------------------------

void print_enumerator(const codes::WeightEnumerator& en, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << io::enumerator_to_json(en).dump(2) << '\n';
    else if (format == "csv")
        out << io::enumerator_to_csv(en);
    else
        out << en.polynomial() << '\n';
}

int cmd_code_compare(const Common& c, const std::string& qtext, const std::string& modulus,
                     const std::string& points, unsigned s, unsigned t, const std::string& format,
                     std::ostream& out) {
    const auto F = parse_q(qtext, modulus);
    const auto cmp = codes::compare_metrics(F, parse_points(*F, points), s, t, c.budget, c.workers);
    auto row = [](const codes::CodeParams& p) {
        return json{{"length", p.length},
                    {"dim", p.dim},
                    {"distance", p.distance},
                    {"rate", rational(p.rate)},
                    {"relative_distance", rational(p.relative_distance)}};
    };
    if (format == "json") {
        out << json{{"nrt", row(cmp.nrt)},
                    {"bottleneck", row(cmp.bottleneck)},
                    {"matches_closed_form", cmp.matches_closed_form},
                    {"bottleneck_advantage", cmp.bottleneck_better}}
                   .dump(2)
            << '\n';
    } else {
        out << "metric,length,dim,distance,rate,relative_distance\n";
        for (const auto& [name, p] : {std::pair{"C(s,r)", cmp.nrt}, std::pair{"U(s,r,1)", cmp.bottleneck}})
            out << name << ',' << p.length << ',' << p.dim << ',' << p.distance << ',' << rational(p.rate) << ','
                << rational(p.relative_distance) << '\n';
        out << "# closed forms " << (cmp.matches_closed_form ? "match" : "DIFFER") << '\n';
        if (cmp.bottleneck_better) out << "# U(s,r,1) code has the larger relative distance\n";
    }
    return cmp.matches_closed_form ? kOk : kPropertyFailure;
}

json load(const std::string& path) { return io::read_json_file(path); }

codes::Code load_any_code(const json& j) {
    if (j.value("kind", std::string("rs")) == "ag") return io::ag_code_from_json(j).code;
    return io::rs_code_from_json(j).code;
}

int cmd_check_mds(const Common& c, const std::string& path, bool expect_mds, std::ostream& out) {
    const auto code = load_any_code(load(path));
    const auto d = codes::min_distance(code, c.budget, c.workers);
    const auto rep = codes::singleton_report(code, d);
    out << "metric " << code.metric.describe() << " n=" << rep.n << " k=" << rep.k << " d=" << rep.d
        << " slack=" << rep.slack << (rep.mds ? " MDS" : " not MDS") << '\n';
    return expect_mds && !rep.mds ? kPropertyFailure : kOk;
}

// --- ag -------------------------------------------------------------------

int cmd_ag_verify(const Common& c, const std::string& path, std::ostream& out) {
    const auto code = io::ag_code_from_json(load(path));
    const auto rep = ag::verify_bounds(code, c.budget, c.workers);
    out << "G=" << ag::divisor_to_text(code.spec.G) << " deg=" << rep.deg_g << " metric "
        << code.code.metric.describe() << '\n';
    out << "n=" << rep.n << " k=" << rep.k << " d=" << rep.d << '\n';
    out << "dim >= " << rep.dim_bound << (rep.dim_ok ? " holds" : " FAILS") << '\n';
    out << "d >= " << rep.distance_bound << (rep.distance_ok ? " holds" : " FAILS") << '\n';
    out << "k + d = " << rep.k + rep.d << " vs n + 1 = " << rep.n + 1 << (rep.mds ? " (MDS)" : " (not MDS)") << '\n';
    return rep.all_ok() ? kOk : kPropertyFailure;
}

int cmd_ag_mds_ineq(const ag::MdsInequalityParams& p, const std::string& format, std::ostream& out) {
    const auto rep = ag::mds_inequality(p);
    if (format == "json") {
        out << json{{"lhs", rep.lhs.str()},
                    {"rhs", rep.rhs.str()},
                    {"verdict", rep.verdict},
                    {"violations", rep.violations},
                    {"stated_distance_bound", rep.stated_distance_bound},
                    {"stated_dim_bound", rep.stated_dim_bound},
                    {"degree_of_G", rep.proof_degree},
                    {"degree_dim_bound", rep.proof_dim_bound},
                    {"length", rep.length},
                    {"mds_case", rep.mds_case},
                    {"elliptic_conflict", rep.elliptic_conflict},
                    {"notes", rep.notes}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "C(r+s+k-g, r-1) * A_k = " << rep.lhs << '\n';
    out << "h = " << rep.rhs << '\n';
    for (const auto& v : rep.violations) out << "hypothesis fails: " << v << '\n';
    out << "verdict: " << (rep.verdict ? "true" : "false") << '\n';
    if (rep.verdict) {
        out << "stated bounds: d >= " << rep.stated_distance_bound << ", dim >= " << rep.stated_dim_bound << '\n';
        out << "degree-derived: deg G = " << rep.proof_degree << ", dim >= " << rep.proof_dim_bound << '\n';
    }
    if (rep.mds_case) out << "g = k - 1: MDS case\n";
    for (const auto& n : rep.notes) out << "note: " << n << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bottleneck-metric Reed-Solomon and genus-0 AG codes"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    c.budget = codes::default_budget();
    app.add_option("--out", c.out_path, "Write output to this file");
    app.add_option("--budget", c.budget, "Maximum number of codewords to enumerate")->check(CLI::PositiveNumber);
    app.add_option("--workers", c.workers, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

    std::function<int(std::ostream&)> action;

    auto* pe = app.add_subcommand("paper-example", "GF(5) U(2,3,1) worked example against the golden table");
    std::string pe_format = "pretty", pe_golden;
    pe->add_option("--format", pe_format)->check(CLI::IsMember({"pretty", "json", "csv"}));
    pe->add_option("--golden", pe_golden, "Golden CSV to compare with (default: embedded)");
    pe->callback([&] { action = [&](std::ostream& o) { return cmd_paper_example(c, pe_format, pe_golden, o); }; });

    auto* sw = app.add_subcommand("sweep", "Exhaustive parameter sweeps");
    std::string sw_grid = "bottleneck-rs", sw_fields;
    bool sw_all_t = false, sw_strict = false;
    sw->add_option("--grid", sw_grid)->check(CLI::IsMember({"bottleneck-rs", "nrt", "constrained-dim", "ag", "all"}));
    sw->add_flag("--all-t", sw_all_t, "Include t (or deg G) outside the hypothesis range");
    sw->add_flag("--strict", sw_strict, "bottleneck-rs: t >= r*b_row; constrained-dim: t >= r*(order+1)");
    sw->add_option("--fields", sw_fields, "Comma separated q values");
    sw->callback([&] {
        action = [&](std::ostream& o) { return cmd_sweep(c, sw_grid, sw_all_t, sw_strict, sw_fields, o); };
    });

    auto* ps = app.add_subcommand("poset", "Poset utilities");
    ps->require_subcommand(1);
    auto* pshow = ps->add_subcommand("show", "Hasse diagram of C(s,r) or U(s,r,b_row)");
    unsigned ps_s = 1, ps_r = 1, ps_b = 0;
    std::string ps_format = "dot";
    pshow->add_option("--s", ps_s)->required()->check(CLI::PositiveNumber);
    pshow->add_option("--r", ps_r)->required()->check(CLI::PositiveNumber);
    pshow->add_option("--b-row", ps_b, "Constant row; omit for C(s,r)");
    pshow->add_option("--format", ps_format)->check(CLI::IsMember({"dot", "json"}));
    pshow->callback([&] { action = [&](std::ostream& o) { return cmd_poset_show(ps_s, ps_r, ps_b, ps_format, o); }; });

    auto* code = app.add_subcommand("code", "Reed-Solomon codes in the NRT and bottleneck metrics");
    code->require_subcommand(1);
    std::string q_text, modulus, points, format = "pretty", file;
    unsigned s = 1, t = 1, b_row = 0;
    auto add_rs_spec = [&](CLI::App* sub) {
        sub->add_option("--q", q_text, "Field: q, p or p^m")->required();
        sub->add_option("--modulus", modulus, "Explicit modulus [c0,...,1]");
        sub->add_option("--points", points, "Evaluation points as element codes, e.g. 1,3,4")->required();
        sub->add_option("--s", s)->required()->check(CLI::PositiveNumber);
        sub->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    };
    auto* cbuild = code->add_subcommand("build", "Build a code and write code.json");
    add_rs_spec(cbuild);
    cbuild->add_option("--b-row", b_row, "Constant row (1-based); omit for the NRT code");
    cbuild->callback([&] {
        action = [&](std::ostream& o) {
            const auto F = parse_q(q_text, modulus);
            codes::RSCodeSpec spec{F, parse_points(*F, points), s, t, std::nullopt};
            if (b_row) spec.b_row = b_row;
            o << io::rs_code_to_json(codes::build_code(spec)).dump(2) << '\n';
            return kOk;
        };
    });
    auto* cweights = code->add_subcommand("weights", "Weight enumerator of a code.json or ag.json");
    cweights->add_option("file", file)->required();
    cweights->add_option("--format", format)->check(CLI::IsMember({"pretty", "csv", "json"}));
    cweights->callback([&] {
        action = [&](std::ostream& o) {
            print_enumerator(codes::weight_enumerator(load_any_code(load(file)), c.budget, c.workers), format, o);
            return kOk;
        };
    });
    auto* cmds = code->add_subcommand("check-mds", "Singleton report");
    bool expect_mds = false;
    cmds->add_option("file", file)->required();
    cmds->add_flag("--expect-mds", expect_mds, "Exit 3 unless the code is MDS");
    cmds->callback([&] { action = [&](std::ostream& o) { return cmd_check_mds(c, file, expect_mds, o); }; });
    auto* ccmp = code->add_subcommand("compare", "NRT vs bottleneck (b_row = 1) code parameters");
    add_rs_spec(ccmp);
    ccmp->add_option("--format", format)->check(CLI::IsMember({"pretty", "csv", "json"}));
    ccmp->callback([&] {
        action = [&](std::ostream& o) { return cmd_code_compare(c, q_text, modulus, points, s, t, format, o); };
    });

    auto* agc = app.add_subcommand("ag", "Genus-0 AG codes");
    agc->require_subcommand(1);
    std::string places, divisor;
    bool unconstrained = false;
    auto* abuild = agc->add_subcommand("build", "Build an AG code and write ag.json");
    abuild->add_option("--q", q_text)->required();
    abuild->add_option("--modulus", modulus);
    abuild->add_option("--places", places, "Element codes and/or inf, e.g. 1,3,4,inf")->required();
    abuild->add_option("--divisor", divisor, "Terms Pi:n, Pinf:n, Aa:n, e.g. P1:0,Pinf:3")->required();
    abuild->add_option("--s", s)->required()->check(CLI::PositiveNumber);
    abuild->add_flag("--unconstrained", unconstrained, "Use all of L(G) with the NRT metric");
    abuild->callback([&] {
        action = [&](std::ostream& o) {
            const auto F = parse_q(q_text, modulus);
            const auto pl = ag::parse_places(*F, places);
            ag::AGCodeSpec spec{F, pl, ag::parse_divisor(*F, divisor, pl), s, !unconstrained};
            o << io::ag_code_to_json(ag::build_ag_code(spec)).dump(2) << '\n';
            return kOk;
        };
    });
    auto* averify = agc->add_subcommand("verify", "Check the distance and dimension bounds");
    averify->add_option("file", file)->required();
    averify->callback([&] { action = [&](std::ostream& o) { return cmd_ag_verify(c, file, o); }; });
    auto* aineq = agc->add_subcommand("mds-ineq", "C(r+s+k-g, r-1) A_k < h checker");
    // --h is the class number here, so help keeps only its long form.
    aineq->set_help_flag("--help", "Print this help message and exit");
    ag::MdsInequalityParams mp;
    std::string h_text = "1", ak_text = "0";
    aineq->add_option("--g", mp.g)->required();
    aineq->add_option("--r", mp.r)->required();
    aineq->add_option("--s", mp.s)->required();
    aineq->add_option("--k", mp.k)->required();
    aineq->add_option("--h", h_text, "Divisor class number (arbitrary size)")->required();
    aineq->add_option("--Ak", ak_text, "Number of positive divisors of degree k")->required();
    aineq->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));
    aineq->callback([&] {
        action = [&](std::ostream& o) {
            try {
                mp.h = ag::BigInt(h_text);
                mp.a_k = ag::BigInt(ak_text);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "h and A_k must be integers");
            }
            return cmd_ag_mds_ineq(mp, format, o);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kParameterError;
    }

    std::ostringstream buffer;
    int status = kOk;
    try {
        status = action(buffer);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        status = exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        status = kParameterError;
    }
    if (c.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(c.out_path);
        if (!f) {
            err << "error: cannot write " << c.out_path << '\n';
            return kParameterError;
        }
        f << buffer.str();
    }
    return status;
}

}  // namespace posetcode::cli
