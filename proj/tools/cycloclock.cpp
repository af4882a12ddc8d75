// cycloclock CLI: configure a clock, run each experiment family, and emit
// deterministic CSV/JSON tables plus a discrepancy report against the
// closed forms. Talks to the library exclusively through the C API.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycloclock.h"

namespace {

constexpr double kPiOverSqrt3 = 1.8137993642342178; // pi/sqrt(3)

// ---- deterministic table model ----

struct Cell {
    enum class Kind { Str, Num, Int, Bool } kind;
    std::string text;
};

Cell cell_str(std::string s) { return {Cell::Kind::Str, std::move(s)}; }

Cell cell_num(double v) {
    if (v == 0.0)
        v = 0.0; // fold negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return {Cell::Kind::Num, buf};
}

Cell cell_int(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return {Cell::Kind::Int, buf};
}

Cell cell_uint(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%" PRIu64, v);
    return {Cell::Kind::Int, buf};
}

Cell cell_bool(bool v) { return {Cell::Kind::Bool, v ? "true" : "false"}; }

struct Table {
    std::vector<std::pair<std::string, Cell>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
};

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string json_value(const Cell& c) {
    if (c.kind == Cell::Kind::Str)
        return "\"" + json_escape(c.text) + "\"";
    return c.text; // Num / Int / Bool tokens are already valid JSON
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i].text;
        os << "\n";
    }
    for (const auto& [key, value] : t.summary)
        os << "# " << key << "=" << value.text << "\n";
}

void write_json(std::ostream& os, const Table& t) {
    os << "{\n  \"config\": {";
    for (std::size_t i = 0; i < t.config.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(t.config[i].first)
           << "\": " << json_value(t.config[i].second);
    os << "},\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    {";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            os << (i ? ", " : "") << "\"" << json_escape(t.columns[i])
               << "\": " << json_value(t.rows[r][i]);
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"summary\": {";
    for (std::size_t i = 0; i < t.summary.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(t.summary[i].first)
           << "\": " << json_value(t.summary[i].second);
    os << "}\n}\n";
}

int emit(const Table& t, const std::string& format, const std::string& output) {
    std::ostringstream buffer;
    if (format == "json")
        write_json(buffer, t);
    else
        write_csv(buffer, t);
    if (output.empty() || output == "-" || output == "stdout") {
        std::cout << buffer.str();
        return 0;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) {
        std::cerr << "cycloclock: cannot open output file: " << output << "\n";
        return 2;
    }
    file << buffer.str();
    return 0;
}

// ---- C API plumbing ----

struct ClockHandle {
    cc_clock* ptr = nullptr;
    ~ClockHandle() { cc_clock_free(ptr); }
};

struct MatrixHandle {
    cc_matrix* ptr = nullptr;
    ~MatrixHandle() { cc_matrix_free(ptr); }
};

[[noreturn]] void fail_config(cc_status status) {
    std::cerr << "cycloclock: " << cc_status_message(status);
    const char* detail = cc_last_error();
    if (detail && *detail)
        std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    std::exit(2);
}

void check(cc_status status) {
    if (status != CC_OK)
        fail_config(status);
}

cc_convention parse_convention(const std::string& name) {
    return name == "symmetric" ? CC_CONVENTION_SYMMETRIC : CC_CONVENTION_ZERO_BASED;
}

// exact strings grow with phi(N); retry with a larger buffer as needed
template <class F>
std::string fetch_string(F&& fill) {
    std::vector<char> buf(256);
    for (;;) {
        const cc_status status = fill(buf.data(), buf.size());
        if (status == CC_OK)
            return buf.data();
        if (status != CC_ERR_BUFFER_TOO_SMALL)
            fail_config(status);
        buf.resize(buf.size() * 4);
    }
}

// ---- shared options ----

struct CommonOpts {
    std::uint32_t n = 0;
    std::string convention = "zero-based";
    std::string format = "csv";
    std::string output;
    double tolerance = 1e-10;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_n = true) {
    if (with_n)
        cmd->add_option("--n", opts.n, "clock dimension N")->required()
            ->check(CLI::PositiveNumber);
    cmd->add_option("--convention", opts.convention, "index convention")
        ->check(CLI::IsMember({"zero-based", "symmetric"}))
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "output path (default stdout)");
    cmd->add_option("--tolerance", opts.tolerance, "comparison tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

ClockHandle open_clock(const CommonOpts& opts) {
    ClockHandle clock;
    check(cc_clock_create(opts.n, parse_convention(opts.convention), &clock.ptr));
    return clock;
}

void common_config(Table& t, const std::string& command, const CommonOpts& opts) {
    t.config.emplace_back("command", cell_str(command));
    t.config.emplace_back("n", cell_uint(opts.n));
    t.config.emplace_back("convention", cell_str(opts.convention));
    t.config.emplace_back("tolerance", cell_num(opts.tolerance));
}

// ---- commands ----

int run_basis(const CommonOpts& opts, std::optional<std::uint32_t> only_k) {
    ClockHandle clock = open_clock(opts);
    Table t;
    common_config(t, "basis", opts);
    if (only_k)
        t.config.emplace_back("k", cell_uint(*only_k));
    t.columns = {"k", "n", "coefficient", "scale", "embed_re", "embed_im"};
    const std::string scale = "1/sqrt(" + std::to_string(opts.n) + ")";
    const std::uint32_t k_begin = only_k ? *only_k : 0;
    const std::uint32_t k_end = only_k ? *only_k + 1 : opts.n;
    for (std::uint32_t k = k_begin; k < k_end; ++k)
        for (std::uint32_t n = 0; n < opts.n; ++n) {
            const std::string coeff = fetch_string([&](char* buf, std::size_t cap) {
                return cc_pointer_coefficient_str(clock.ptr, k, n, buf, cap);
            });
            double re = 0, im = 0;
            check(cc_pointer_entry(clock.ptr, k, n, &re, &im));
            t.rows.push_back({cell_uint(k), cell_uint(n), cell_str(coeff), cell_str(scale),
                              cell_num(re), cell_num(im)});
        }
    t.summary.emplace_back("rows", cell_uint(t.rows.size()));
    return emit(t, opts.format, opts.output);
}

int run_evolve(const CommonOpts& opts, std::optional<std::uint64_t> steps,
               std::optional<double> t_value, std::uint32_t start_k, double omega0) {
    if (steps && t_value) {
        std::cerr << "cycloclock: pass either --steps or --t, not both\n";
        return 2;
    }
    if (!steps && !t_value) {
        std::cerr << "cycloclock: evolve requires --steps or --t\n";
        return 2;
    }
    ClockHandle clock = open_clock(opts);
    Table t;
    common_config(t, "evolve", opts);
    if (steps) {
        t.config.emplace_back("k", cell_uint(start_k));
        t.config.emplace_back("steps", cell_uint(*steps));
        t.columns = {"step", "pointer_index", "exact"};
        std::uint32_t index = 0;
        int exact = 0;
        for (std::uint64_t s = 0; s <= *steps; ++s) {
            check(cc_step_pointer(clock.ptr, start_k, s, &index, &exact));
            t.rows.push_back({cell_uint(s), cell_uint(index), cell_bool(exact != 0)});
        }
        t.summary.emplace_back("final_index", cell_uint(index));
    } else {
        t.config.emplace_back("t", cell_num(*t_value));
        t.config.emplace_back("omega0", cell_num(omega0));
        t.columns = {"k", "overlap"};
        std::vector<double> mags(opts.n, 0.0);
        check(cc_evolution_overlaps(clock.ptr, omega0, *t_value, mags.data()));
        std::uint32_t argmax = 0;
        for (std::uint32_t k = 0; k < opts.n; ++k) {
            t.rows.push_back({cell_uint(k), cell_num(mags[k])});
            if (mags[k] > mags[argmax])
                argmax = k;
        }
        t.summary.emplace_back("max_overlap_k", cell_uint(argmax));
        t.summary.emplace_back("max_overlap", cell_num(mags[argmax]));
    }
    return emit(t, opts.format, opts.output);
}

int run_commutator(const CommonOpts& opts, const std::string& variant_name) {
    const cc_commutator_variant variant =
        variant_name == "cyclotomic" ? CC_COMMUTATOR_CYCLOTOMIC : CC_COMMUTATOR_CLASSIC;
    ClockHandle clock = open_clock(opts);
    Table t;
    common_config(t, "commutator", opts);
    t.config.emplace_back("variant", cell_str(variant_name));
    t.columns = {"row", "col", "closed_re", "closed_im", "brute_re", "brute_im",
                 "abs_diff", "pass"};
    const std::size_t n = opts.n;
    std::vector<double> closed(2 * n * n, 0.0), brute(2 * n * n, 0.0);
    check(cc_commutator_table(clock.ptr, variant, closed.data(), brute.data()));
    double max_diff = 0.0;
    bool all_pass = true;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t base = 2 * (r * n + c);
            const double dre = closed[base] - brute[base];
            const double dim = closed[base + 1] - brute[base + 1];
            const double diff = std::hypot(dre, dim);
            max_diff = std::max(max_diff, diff);
            const bool pass = diff <= opts.tolerance;
            all_pass = all_pass && pass;
            t.rows.push_back({cell_uint(r), cell_uint(c), cell_num(closed[base]),
                              cell_num(closed[base + 1]), cell_num(brute[base]),
                              cell_num(brute[base + 1]), cell_num(diff), cell_bool(pass)});
        }
    int exact_equal = 0;
    check(cc_commutator_exact_equal(clock.ptr, variant, &exact_equal));
    t.summary.emplace_back("max_abs_diff", cell_num(max_diff));
    t.summary.emplace_back("all_pass", cell_bool(all_pass));
    t.summary.emplace_back("exact_equal", cell_bool(exact_equal != 0));
    if (variant == CC_COMMUTATOR_CLASSIC) {
        // measured u-vs-v relation: does the phase-free equality hold?
        int phase_exact = 0, literal_all = 0, literal_diag = 0;
        double max_dev = 0.0;
        check(cc_basis_relation(clock.ptr, nullptr, &phase_exact, &literal_all, &literal_diag,
                                &max_dev));
        t.summary.emplace_back("uv_phase_relation_exact", cell_bool(phase_exact != 0));
        t.summary.emplace_back("uv_literal_equality", cell_bool(literal_all != 0));
        t.summary.emplace_back("uv_literal_equality_diagonal", cell_bool(literal_diag != 0));
        t.summary.emplace_back("uv_max_literal_deviation", cell_num(max_dev));
    }
    const int rc = emit(t, opts.format, opts.output);
    if (rc != 0)
        return rc;
    return all_pass && exact_equal ? 0 : 1;
}

int run_uncertainty(const CommonOpts& base, const std::string& n_list,
                    const std::string& convention) {
    std::vector<std::uint32_t> dims;
    std::stringstream ss(n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            const unsigned long v = std::stoul(tok);
            if (v == 0)
                throw std::out_of_range("zero");
            dims.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            std::cerr << "cycloclock: bad --n value: " << tok << "\n";
            return 2;
        }
    }
    if (dims.empty()) {
        std::cerr << "cycloclock: --n list is empty\n";
        return 2;
    }
    std::vector<std::string> conventions;
    if (convention == "both")
        conventions = {"zero-based", "symmetric"};
    else
        conventions = {convention};

    Table t;
    t.config.emplace_back("command", cell_str("uncertainty"));
    t.config.emplace_back("n", cell_str(n_list));
    t.config.emplace_back("convention", cell_str(convention));
    t.columns = {"n", "convention", "mean_h", "delta_h", "delta_h_tau_over_hbar",
                 "raw_second_moment", "asymptote", "rel_error"};
    double max_rel = 0.0;
    for (std::uint32_t n : dims)
        for (const auto& conv : conventions) {
            ClockHandle clock;
            check(cc_clock_create(n, parse_convention(conv), &clock.ptr));
            double mean = 0, delta = 0, raw = 0;
            check(cc_energy_stats(clock.ptr, &mean, &delta, &raw));
            const double rel = std::abs(delta - kPiOverSqrt3) / kPiOverSqrt3;
            max_rel = std::max(max_rel, rel);
            t.rows.push_back({cell_uint(n), cell_str(conv), cell_num(mean), cell_num(delta),
                              cell_num(delta), cell_num(raw), cell_num(kPiOverSqrt3),
                              cell_num(rel)});
        }
    t.summary.emplace_back("max_rel_error", cell_num(max_rel));
    return emit(t, base.format, base.output);
}

int run_ramanujan(const CommonOpts& opts, const std::string& m_range) {
    long long m_lo = 0, m_hi = static_cast<long long>(opts.n) - 1;
    if (!m_range.empty()) {
        const auto dots = m_range.find("..");
        try {
            if (dots == std::string::npos) {
                m_lo = m_hi = std::stoll(m_range);
            } else {
                m_lo = std::stoll(m_range.substr(0, dots));
                m_hi = std::stoll(m_range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            std::cerr << "cycloclock: bad --m-range: " << m_range << "\n";
            return 2;
        }
        if (m_lo > m_hi) {
            std::cerr << "cycloclock: empty --m-range: " << m_range << "\n";
            return 2;
        }
    }
    Table t;
    common_config(t, "ramanujan", opts);
    t.config.emplace_back("m_range",
                          cell_str(std::to_string(m_lo) + ".." + std::to_string(m_hi)));
    t.columns = {"m", "c_hoelder", "brute_re", "brute_im", "s_re", "s_im", "s_exact",
                 "identity"};
    double max_diff = 0.0;
    bool identities = true;
    bool hoelder_ok = true;
    for (long long m = m_lo; m <= m_hi; ++m) {
        std::int64_t c = 0;
        check(cc_ramanujan_sum(opts.n, m, &c));
        double bre = 0, bim = 0, sre = 0, sim = 0;
        check(cc_coprime_exp_sum(opts.n, m, &bre, &bim));
        check(cc_weighted_coprime_sum(opts.n, m, &sre, &sim));
        const std::string s_text = fetch_string([&](char* buf, std::size_t cap) {
            return cc_weighted_coprime_sum_str(opts.n, m, buf, cap);
        });
        int holds = 0;
        check(cc_ramanujan_identity_check(opts.n, m, &holds));
        identities = identities && holds != 0;
        const double diff = std::hypot(bre - static_cast<double>(c), bim);
        max_diff = std::max(max_diff, diff);
        hoelder_ok = hoelder_ok && diff <= opts.tolerance;
        t.rows.push_back({cell_int(m), cell_int(c), cell_num(bre), cell_num(bim),
                          cell_num(sre), cell_num(sim), cell_str(s_text),
                          cell_bool(holds != 0)});
    }
    t.summary.emplace_back("max_hoelder_brute_diff", cell_num(max_diff));
    t.summary.emplace_back("hoelder_matches_brute", cell_bool(hoelder_ok));
    t.summary.emplace_back("identities_exact", cell_bool(identities));
    const int rc = emit(t, opts.format, opts.output);
    if (rc != 0)
        return rc;
    return identities && hoelder_ok ? 0 : 1;
}

int run_superposition(const CommonOpts& opts, const std::string& coeffs_text,
                      std::uint64_t seed, bool seed_given) {
    ClockHandle clock = open_clock(opts);
    std::vector<double> coeffs(2 * static_cast<std::size_t>(opts.n), 0.0);
    std::string source;
    if (!coeffs_text.empty()) {
        std::vector<double> values;
        std::stringstream ss(coeffs_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                std::cerr << "cycloclock: bad --coeffs entry: " << tok << "\n";
                return 2;
            }
        }
        if (values.size() != coeffs.size()) {
            std::cerr << "cycloclock: --coeffs needs " << coeffs.size()
                      << " comma-separated values (re,im per level)\n";
            return 2;
        }
        coeffs = std::move(values);
        source = "coeffs";
    } else {
        check(cc_random_coefficients(opts.n, seed, coeffs.data()));
        source = "seed";
    }
    (void)seed_given;
    double fre = 0, fim = 0, sre = 0, sim = 0;
    check(cc_superposition_expectation(clock.ptr, coeffs.data(), &fre, &fim, &sre, &sim));
    const double diff = std::hypot(fre - sre, fim - sim);
    const bool pass = diff <= opts.tolerance;

    Table t;
    common_config(t, "superposition", opts);
    t.config.emplace_back("source", cell_str(source));
    if (source == "seed")
        t.config.emplace_back("seed", cell_uint(seed));
    t.columns = {"n", "source", "formula_re", "formula_im", "sandwich_re", "sandwich_im",
                 "abs_diff", "pass"};
    t.rows.push_back({cell_uint(opts.n), cell_str(source), cell_num(fre), cell_num(fim),
                      cell_num(sre), cell_num(sim), cell_num(diff), cell_bool(pass)});
    if (source == "seed")
        t.summary.emplace_back("seed", cell_uint(seed));
    t.summary.emplace_back("abs_diff", cell_num(diff));
    t.summary.emplace_back("pass", cell_bool(pass));
    const int rc = emit(t, opts.format, opts.output);
    if (rc != 0)
        return rc;
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycloclock: exact Salecker-Wigner-Peres clock laboratory"};
    app.require_subcommand(1);

    // basis
    CommonOpts basis_opts;
    std::optional<std::uint32_t> basis_k;
    auto* basis = app.add_subcommand("basis", "pointer-state coefficient table");
    add_common(basis, basis_opts);
    basis->add_option("--k", basis_k, "emit a single pointer state");

    // evolve
    CommonOpts evolve_opts;
    std::optional<std::uint64_t> evolve_steps;
    std::optional<double> evolve_t;
    std::uint32_t evolve_k = 0;
    double evolve_omega0 = 0.0;
    auto* evolve = app.add_subcommand("evolve", "exact stepping trace or overlap profile");
    add_common(evolve, evolve_opts);
    evolve->add_option("--steps", evolve_steps, "number of exact tau steps");
    evolve->add_option("--t", evolve_t, "continuous time (units of tau)");
    evolve->add_option("--k", evolve_k, "starting pointer index (stepping mode)");
    evolve->add_option("--omega0", evolve_omega0, "frequency offset omega_0");

    // commutator
    CommonOpts comm_opts;
    std::string comm_variant = "classic";
    auto* comm = app.add_subcommand("commutator",
                                    "closed form vs brute force, element by element");
    add_common(comm, comm_opts);
    comm->add_option("--variant", comm_variant, "classic | cyclotomic")
        ->check(CLI::IsMember({"classic", "cyclotomic"}))
        ->capture_default_str();

    // uncertainty
    CommonOpts unc_opts;
    std::string unc_n_list;
    std::string unc_convention = "both";
    auto* unc = app.add_subcommand("uncertainty", "energy uncertainty vs pi/sqrt(3)");
    unc->add_option("--n", unc_n_list, "clock dimension(s), comma separated")->required();
    unc->add_option("--convention", unc_convention, "zero-based | symmetric | both")
        ->check(CLI::IsMember({"zero-based", "symmetric", "both"}))
        ->capture_default_str();
    unc->add_option("--format", unc_opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    unc->add_option("--output", unc_opts.output, "output path (default stdout)");
    unc->add_option("--tolerance", unc_opts.tolerance, "comparison tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // ramanujan
    CommonOpts ram_opts;
    std::string ram_m_range;
    auto* ram = app.add_subcommand("ramanujan", "Hoelder vs brute-force coprime sums");
    add_common(ram, ram_opts);
    ram->add_option("--m-range", ram_m_range, "m range lo..hi (default 0..N-1)");

    // superposition
    CommonOpts sup_opts;
    std::string sup_coeffs;
    std::uint64_t sup_seed = 0;
    auto* sup = app.add_subcommand("superposition",
                                   "weighted-sum formula vs direct matrix sandwich");
    add_common(sup, sup_opts);
    sup->add_option("--coeffs", sup_coeffs, "2N comma-separated values: re,im per level");
    auto* seed_opt = sup->add_option("--seed", sup_seed, "seed for generated coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (basis->parsed())
        return run_basis(basis_opts, basis_k);
    if (evolve->parsed())
        return run_evolve(evolve_opts, evolve_steps, evolve_t, evolve_k, evolve_omega0);
    if (comm->parsed())
        return run_commutator(comm_opts, comm_variant);
    if (unc->parsed())
        return run_uncertainty(unc_opts, unc_n_list, unc_convention);
    if (ram->parsed())
        return run_ramanujan(ram_opts, ram_m_range);
    if (sup->parsed())
        return run_superposition(sup_opts, sup_coeffs, sup_seed, seed_opt->count() > 0);
    return 2;
}
