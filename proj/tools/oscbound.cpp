#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oscbound/emm.hpp"
#include "oscbound/errors.hpp"
#include "oscbound/oppq.hpp"
#include "oscbound/records.hpp"
#include "oscbound/tables.hpp"

namespace {

using namespace oscb;

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::pair<Real, Real> parse_scan(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--scan expects lo,hi");
    return {Real(s.substr(0, comma)), Real(s.substr(comma + 1))};
}

// start:step:stop (inclusive stop within half a step)
std::vector<Real> parse_range(const std::string& s) {
    auto c1 = s.find(':');
    if (c1 == std::string::npos) return {Real(s)};
    auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("range expects start:step:stop");
    Real start(s.substr(0, c1)), step(s.substr(c1 + 1, c2 - c1 - 1)), stop(s.substr(c2 + 1));
    if (step.sign() <= 0) throw UsageError("range step must be positive");
    std::vector<Real> out;
    for (Real v = start; v <= stop + step / Real(2); v += step) out.push_back(v);
    return out;
}

void write_outputs(const RunRecord& rec, const std::string& format, const std::string& out_path,
                   const std::vector<std::string>& csv_header, const std::vector<std::vector<Real>>& csv_rows) {
    if (out_path.empty()) return;
    if (format == "json") {
        write_file_atomic(out_path, rec.to_json());
    } else {
        write_file_atomic(out_path, csv_table(csv_header, csv_rows));
    }
}

Bracket default_ground_scan(const Real& b) {
    if (b.to_double() < 5.0) return Bracket(Real("0.52"), Real("2.49"), Real(1e-14));
    Real delta = Real(3) / (Real(8) * b * b);
    return Bracket(Real("0.5") + delta / Real(5), Real("0.5") + Real(4) * delta, Real(1e-16));
}

int run_emm(const std::string& rep, int sigma, const std::string& b_str, int pmax, int state,
            const std::string& scan_str, const std::string& format, const std::string& out_path) {
    auto t0 = std::chrono::steady_clock::now();
    Real b(b_str);
    RunRecord rec;
    rec.method = "emm";
    rec.representation = rep;
    rec.sigma = sigma;
    rec.state = state;
    rec.order = pmax;
    rec.precision_bits = Real::precision();
    rec.b = b;

    EnergyInterval iv;
    if (rep == "psi" || rep == "phi") {
        if (state != 0) throw UsageError("psi/phi bound only the ground state; use --rep psi2 for excited states");
        Bracket scan = scan_str.empty() ? default_ground_scan(b) : [&] {
            auto [lo, hi] = parse_scan(scan_str);
            return Bracket(lo, hi, Real(1e-14));
        }();
        Problem prob = rep == "psi" ? Problem(b, Representation::Psi) : Problem(b, Representation::Phi, sigma);
        iv = ground_bounds(prob, pmax, scan);
        rec.scan_lo = scan.lo;
        rec.scan_hi = scan.hi;
    } else if (rep == "psi2") {
        if (sigma != 0) throw UsageError("--sigma applies to --rep phi only");
        Bracket scan = scan_str.empty()
                           ? Bracket(b.to_double() >= 5 ? Real("0.505") : Real("0.60"),
                                     Real(2 * (state + 1)) + Real(2), Real(1e-12))
                           : [&] {
                                 auto [lo, hi] = parse_scan(scan_str);
                                 return Bracket(lo, hi, Real(1e-12));
                             }();
        iv = psi2_state_bounds(b, state, pmax, scan);
        rec.scan_lo = scan.lo;
        rec.scan_hi = scan.hi;
    } else {
        throw UsageError("--rep must be psi, phi or psi2");
    }
    rec.results.emplace_back("E_lo", iv.lo);
    rec.results.emplace_back("E_hi", iv.hi);
    rec.wall_time_s = seconds_since(t0);

    std::printf("E in [%s, %s]  (rep %s sigma %d, state %d, P_max %d, %ld bits)\n", iv.lo.str().c_str(),
                iv.hi.str().c_str(), rep.c_str(), sigma, state, pmax, Real::precision());
    write_outputs(rec, format, out_path, {"b", "sigma", "state", "pmax", "E_lo", "E_hi"},
                  {{b, Real(sigma), Real(state), Real(pmax), iv.lo, iv.hi}});
    return 0;
}

struct OppqArgs {
    std::string mode, b_str, scan_str, grid_str, bu_str, states_str, format, out_path;
    int n = 100;
    int state = 0;
    int nmax = 3;
    int coeff_cap = 40;
};

int run_oppq(const OppqArgs& a) {
    auto t0 = std::chrono::steady_clock::now();
    Real b(a.b_str.empty() ? "0" : a.b_str);
    RunRecord rec;
    rec.method = "oppq-" + a.mode;
    rec.representation = "psi";
    rec.order = a.n;
    rec.precision_bits = Real::precision();
    rec.b = b;

    Problem prob(b, Representation::Psi);
    auto make_basis = [&](int N) {
        WeightMoments w = weight_moments(b, 2 * N + 2);
        return build_basis(w, N + 1);
    };

    if (a.mode == "am") {
        Real lo("0.3"), hi = Real(2 * (a.nmax + 1)) + Real("1.5");
        if (!a.scan_str.empty()) std::tie(lo, hi) = parse_scan(a.scan_str);
        OrthoBasis basis = make_basis(a.n);
        std::vector<Real> roots = am_energies(prob, a.n, basis, Bracket(lo, hi, Real(1e-15)), 800);
        rec.scan_lo = lo;
        rec.scan_hi = hi;
        std::vector<std::vector<Real>> rows;
        std::string line;
        for (size_t i = 0; i < roots.size(); ++i) {
            rec.results.emplace_back("E_" + std::to_string(i), roots[i]);
            rows.push_back({Real(static_cast<long>(i)), roots[i]});
            line += roots[i].str(14) + (i + 1 < roots.size() ? " " : "");
        }
        rec.wall_time_s = seconds_since(t0);
        std::printf("AM roots (N=%d): %s\n", a.n, line.c_str());
        write_outputs(rec, a.format, a.out_path, {"state", "E"}, rows);
        return 0;
    }
    if (a.mode == "bm-curve" || a.mode == "bm-min") {
        Real lo("0.55"), hi("8.6");
        long npts = 600;
        if (!a.grid_str.empty()) {
            auto c1 = a.grid_str.find(':');
            auto c2 = a.grid_str.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw UsageError("--grid expects lo:hi:npoints");
            lo = Real(a.grid_str.substr(0, c1));
            hi = Real(a.grid_str.substr(c1 + 1, c2 - c1 - 1));
            npts = std::stol(a.grid_str.substr(c2 + 1));
        }
        OrthoBasis basis = make_basis(a.n);
        std::vector<Real> grid(npts + 1);
        for (long k = 0; k <= npts; ++k) grid[k] = lo + (hi - lo) * Real(k) / Real(npts);
        Eigencurve curve = bm_curve(prob, a.n, basis, grid, Real(1e-12));
        rec.scan_lo = lo;
        rec.scan_hi = hi;
        std::vector<std::vector<Real>> rows;
        if (a.mode == "bm-curve") {
            for (const auto& s : curve.samples) rows.push_back({s.first, s.second});
            std::printf("eigencurve N=%d: %zu samples, %zu minima\n", a.n, curve.samples.size(),
                        curve.minima.size());
        }
        for (const auto& m : curve.minima) {
            rec.results.emplace_back("E_min_" + std::to_string(m.state), m.E);
            rec.results.emplace_back("lambda_" + std::to_string(m.state), m.lambda);
            if (a.mode == "bm-min") {
                rows.push_back({Real(m.state), m.E, log10(m.lambda)});
                std::printf("state %d: E_min = %s   log10 lambda = %s\n", m.state, m.E.str(14).c_str(),
                            log10(m.lambda).str(10).c_str());
            }
        }
        rec.wall_time_s = seconds_since(t0);
        if (a.mode == "bm-curve")
            write_outputs(rec, a.format, a.out_path, {"E", "lambda"}, rows);
        else
            write_outputs(rec, a.format, a.out_path, {"state", "E_min", "log10_lambda"}, rows);
        return 0;
    }
    if (a.mode == "bm-bounds") {
        if (a.bu_str.empty()) throw UsageError("--bu required for bm-bounds");
        Real BU = a.bu_str.rfind("10^", 0) == 0 ? pow10(Real(a.bu_str.substr(3))) : Real(a.bu_str);
        Real lo("0.55"), hi("8.6");
        if (!a.scan_str.empty()) std::tie(lo, hi) = parse_scan(a.scan_str);
        OrthoBasis basis = make_basis(a.n);
        EnergyInterval iv = bm_bounds(prob, a.state, a.n, basis, BU, Bracket(lo, hi, Real(1e-13)));
        rec.scan_lo = lo;
        rec.scan_hi = hi;
        rec.state = a.state;
        rec.results.emplace_back("E_lo", iv.lo);
        rec.results.emplace_back("E_hi", iv.hi);
        rec.results.emplace_back("B_U", BU);
        rec.wall_time_s = seconds_since(t0);
        std::printf("E in [%s, %s]  (BM N=%d, state %d)\n", iv.lo.str().c_str(), iv.hi.str().c_str(), a.n,
                    a.state);
        write_outputs(rec, a.format, a.out_path, {"state", "N", "E_lo", "E_hi"},
                      {{Real(a.state), Real(a.n), iv.lo, iv.hi}});
        return 0;
    }
    if (a.mode == "reconstruct") {
        int nstates = a.nmax + 1;
        Real lo("0.3"), hi = Real(2 * nstates) + Real("1.5");
        if (!a.scan_str.empty()) std::tie(lo, hi) = parse_scan(a.scan_str);
        OrthoBasis basis = make_basis(a.n);
        std::vector<Real> roots = am_energies(prob, a.n, basis, Bracket(lo, hi, Real(1e-15)), 800);
        if (static_cast<int>(roots.size()) < nstates)
            throw EmptyWindowError("reconstruct: AM found fewer states than requested");
        Real chi_hi = b + Real(12);
        long npts = 400;
        std::vector<Real> grid(npts + 1);
        for (long k = 0; k <= npts; ++k) grid[k] = chi_hi * Real(k) / Real(npts);
        std::vector<ReconstructedState> states;
        for (int s = 0; s < nstates; ++s)
            states.push_back(reconstruct(prob, roots[s], a.n, basis, grid, a.coeff_cap));
        rec.scan_lo = lo;
        rec.scan_hi = hi;
        std::vector<std::string> header = {"chi"};
        for (int s = 0; s < nstates; ++s) {
            header.push_back("Psi_" + std::to_string(s));
            rec.results.emplace_back("E_" + std::to_string(s), roots[s]);
        }
        header.push_back("V");
        std::vector<std::vector<Real>> rows;
        for (long k = 0; k <= npts; ++k) {
            std::vector<Real> row = {grid[k]};
            for (int s = 0; s < nstates; ++s) row.push_back(states[s].values[k]);
            Real V = grid[k].is_zero()
                         ? Real(0)
                         : (Real("0.75") / (grid[k] * grid[k]) + pow(grid[k] - b, 2)) / Real(2);
            row.push_back(V);
            rows.push_back(std::move(row));
        }
        rec.wall_time_s = seconds_since(t0);
        std::printf("reconstructed %d states at N=%d (grid %ld points)\n", nstates, a.n, npts + 1);
        write_outputs(rec, a.format, a.out_path, header, rows);
        return 0;
    }
    if (a.mode == "sweep") {
        std::vector<Real> bs = parse_range(a.b_str.empty() ? "0:0.5:10" : a.b_str);
        std::vector<std::vector<Real>> table = sweep_energies(bs, a.nmax, a.n);
        std::vector<std::string> header = {"b"};
        for (int n = 0; n <= a.nmax; ++n) header.push_back("E_" + std::to_string(n));
        std::vector<std::vector<Real>> rows;
        for (size_t i = 0; i < bs.size(); ++i) {
            std::vector<Real> row = {bs[i]};
            for (const Real& e : table[i]) row.push_back(e);
            rows.push_back(std::move(row));
            std::printf("b=%s:", bs[i].str(6).c_str());
            for (const Real& e : table[i]) std::printf(" %s", e.str(13).c_str());
            std::printf("\n");
        }
        for (size_t i = 0; i < bs.size(); ++i)
            rec.results.emplace_back("E0_at_b" + std::to_string(i), table[i][0]);
        rec.wall_time_s = seconds_since(t0);
        write_outputs(rec, a.format, a.out_path, header, rows);
        return 0;
    }
    throw UsageError("unknown --mode " + a.mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified eigenvalue bounds for the shifted spiked harmonic oscillator"};
    app.set_config("--config");

    long precision = 320;
    app.add_option("--precision", precision, "working precision in bits (>= 128)")
        ->envname("OSCBOUND_PRECISION");

    std::string format = "csv", out_path;

    auto* emm_cmd = app.add_subcommand("emm", "Hankel-positivity (EMM) energy bounds");
    std::string rep = "phi", b_str = "0", scan_str;
    int sigma = 0, pmax = 20, state = 0;
    emm_cmd->add_option("--rep", rep, "psi | phi | psi2");
    emm_cmd->add_option("--sigma", sigma, "phi variant: 0 or 3");
    emm_cmd->add_option("--b", b_str, "barrier displacement b >= 0");
    emm_cmd->add_option("--pmax", pmax, "maximum moment order");
    emm_cmd->add_option("--state", state, "state index (psi2 only)");
    emm_cmd->add_option("--scan", scan_str, "energy window lo,hi");
    emm_cmd->add_option("--format", format, "csv | json");
    emm_cmd->add_option("--out", out_path, "write run record / table here");

    auto* oppq_cmd = app.add_subcommand("oppq", "orthonormal-polynomial projection (OPPQ)");
    OppqArgs oa;
    oppq_cmd->add_option("--mode", oa.mode, "am | bm-curve | bm-min | bm-bounds | reconstruct | sweep")
        ->required();
    oppq_cmd->add_option("--b", oa.b_str, "b value (sweep: start:step:stop)");
    oppq_cmd->add_option("--n", oa.n, "expansion order N");
    oppq_cmd->add_option("--state", oa.state, "state index (bm-bounds)");
    oppq_cmd->add_option("--states", oa.states_str, "state list 0..k (sweep/reconstruct)");
    oppq_cmd->add_option("--nmax", oa.nmax, "highest state index");
    oppq_cmd->add_option("--bu", oa.bu_str, "coarse upper bound B_U (decimal or 10^x)");
    oppq_cmd->add_option("--grid", oa.grid_str, "energy grid lo:hi:npoints");
    oppq_cmd->add_option("--scan", oa.scan_str, "energy window lo,hi");
    oppq_cmd->add_option("--coeffs", oa.coeff_cap, "reconstruction coefficient cap");
    oppq_cmd->add_option("--format", format, "csv | json");
    oppq_cmd->add_option("--out", out_path, "write run record / artifacts here");

    auto* verify_cmd = app.add_subcommand("verify", "re-run embedded reference tables");
    std::string table_str = "T2";
    int max_order = 150;
    verify_cmd->add_option("table", table_str, "T1..T7 or FIG1")->required();
    verify_cmd->add_option("--max-order", max_order, "skip rows above this order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        oscb::Real::set_precision(precision);
        if (emm_cmd->parsed()) return run_emm(rep, sigma, b_str, pmax, state, scan_str, format, out_path);
        if (oppq_cmd->parsed()) {
            if (oa.states_str.size()) {
                auto dots = oa.states_str.find("..");
                oa.nmax = dots == std::string::npos ? std::stoi(oa.states_str)
                                                    : std::stoi(oa.states_str.substr(dots + 2));
            }
            return run_oppq(oa);
        }
        if (verify_cmd->parsed()) {
            oscb::VerifyOptions opt;
            opt.max_order = max_order;
            auto rows = oscb::verify_table(oscb::table_from_string(table_str), opt);
            std::printf("%s: %zu rows, %s\n", oscb::table_name(oscb::table_from_string(table_str)).c_str(),
                        rows.size(), oscb::all_passed(rows) ? "all passed" : "FAILURES");
            return oscb::all_passed(rows) ? 0 : 1;
        }
        std::fprintf(stderr, "no subcommand given (try --help)\n");
        return 2;
    } catch (const oscb::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const oscb::InvalidInputError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
