#include "oscbound/tables.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "oscbound/emm.hpp"
#include "oscbound/errors.hpp"
#include "oscbound/oppq.hpp"
#include "oscbound/util.hpp"

namespace oscb {

TableId table_from_string(const std::string& s) {
    if (s == "T1" || s == "t1") return TableId::T1;
    if (s == "T2" || s == "t2") return TableId::T2;
    if (s == "T3" || s == "t3") return TableId::T3;
    if (s == "T4" || s == "t4") return TableId::T4;
    if (s == "T5" || s == "t5") return TableId::T5;
    if (s == "T6" || s == "t6") return TableId::T6;
    if (s == "T7" || s == "t7") return TableId::T7;
    if (s == "FIG1" || s == "fig1") return TableId::FIG1;
    throw UsageError("unknown table id: " + s);
}

std::string table_name(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3: return "T3";
        case TableId::T4: return "T4";
        case TableId::T5: return "T5";
        case TableId::T6: return "T6";
        case TableId::T7: return "T7";
        case TableId::FIG1: return "FIG1";
    }
    return "?";
}

bool all_passed(const std::vector<RowReport>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

namespace {

void emit(const VerifyOptions& opt, const RowReport& r) {
    if (opt.quiet) return;
    std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.label.c_str(), r.detail.empty() ? "" : " : ",
                r.detail.c_str());
    std::fflush(stdout);
}

long bm_bits(int N) {
    double digits = 0.94 * N + 45;
    long bits = static_cast<long>((digits / 0.30103 + 63) / 64) * 64;
    return std::max(320L, bits);
}

// scan window for the ground state; large b uses the b->inf asymptote
Bracket ground_window(const Real& b, double tol) {
    double bd = b.to_double();
    if (bd < 5.0) return Bracket(Real("0.52"), Real("2.49"), Real(tol));
    Real delta = Real(3) / (Real(8) * b * b);
    return Bracket(Real("0.5") + delta / Real(5), Real("0.5") + Real(4) * delta, Real(tol));
}

struct BasisKey {
    std::string b;
    int n;
    long bits;
    bool operator<(const BasisKey& o) const {
        return std::tie(b, n, bits) < std::tie(o.b, o.n, o.bits);
    }
};

std::shared_ptr<const OrthoBasis> cached_basis(const Real& b, int N) {
    static std::mutex mtx;
    static std::map<BasisKey, std::shared_ptr<const OrthoBasis>> cache;
    BasisKey key{b.hex(), N, Real::precision()};
    {
        std::lock_guard<std::mutex> g(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    WeightMoments w = weight_moments(b, 2 * N + 2);
    auto basis = std::make_shared<const OrthoBasis>(build_basis(w, N + 1));
    std::lock_guard<std::mutex> g(mtx);
    cache[key] = basis;
    return basis;
}

Real parse(const char* s) { return Real(std::string(s)); }

// |x - printed| within `ulps` of the printed literal's last digit
bool near_printed(const Real& x, const char* printed, double ulps) {
    std::string p(printed);
    int decimals = 0;
    auto dot = p.find('.');
    if (dot != std::string::npos) decimals = static_cast<int>(p.size() - dot - 1);
    Real tol = pow10(Real(-decimals)) * Real(ulps);
    return abs(x - parse(printed)) <= tol;
}

bool overlaps(const EnergyInterval& iv, const Real& lo, const Real& hi) {
    return iv.lo <= hi && lo <= iv.hi;
}

std::string iv_str(const EnergyInterval& iv) {
    return "[" + iv.lo.str(16) + ", " + iv.hi.str(16) + "]";
}

// ---- Table 1: EMM-Psi ----------------------------------------------------

struct T1Row {
    const char* b;
    int sigma;  // -1: full order-4 recursion; 0/1: b=0 parity chain
    int pmax;
    const char* lo;
    const char* hi;
};

constexpr T1Row kT1[] = {
    {"0", -1, 29, "1.999415", "2.000489"},
    {"0", 0, 17, "1.882144", "2.065301"},
    {"0", 1, 17, "1.946320", "2.199344"},
    {"0.1", -1, 28, "1.870371", "1.871507"},
    {"0.5", -1, 30, "1.428965", "1.429646"},
    {"1", -1, 28, "1.032844", "1.033323"},
    {"5", -1, 23, "0.515648", "0.516333"},
    {"10", -1, 16, "0.496295", "0.524709"},
    {"20", -1, 13, "0.457391", "0.658807"},
};

std::vector<RowReport> run_t1(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T1Row& row : kT1) {
        if (row.pmax > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
        Real b = parse(row.b);
        Problem prob = row.sigma < 0 ? Problem(b, Representation::Psi)
                                     : Problem(b, Representation::PsiChain, row.sigma);
        Bracket scan = b.to_double() >= 5 ? Bracket(Real("0.40"), Real("0.90"), Real(1e-10))
                                          : Bracket(Real("1.00"), Real("2.49"), Real(1e-10));
        RowReport rep;
        rep.label = "T1 b=" + std::string(row.b) +
                    (row.sigma < 0 ? std::string(" [52]") : " sigma=" + std::to_string(row.sigma) + " [54]") +
                    " P=" + std::to_string(row.pmax);
        try {
            EnergyInterval iv = ground_bounds(prob, row.pmax, scan);
            // Table 1 was produced at ~14 digits; require overlap and
            // endpoint agreement at coarse print granularity
            bool ok = overlaps(iv, parse(row.lo), parse(row.hi)) && near_printed(iv.lo, row.lo, 400) &&
                      near_printed(iv.hi, row.hi, 400);
            rep.pass = ok;
            rep.detail = iv_str(iv) + " vs [" + row.lo + ", " + row.hi + "]";
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Table 2: EMM-Phi ----------------------------------------------------

struct T2Row {
    const char* b;
    int sigma;
    int pmax;
    const char* lo;
    const char* hi;
};

constexpr T2Row kT2[] = {
    {"0", 0, 27, "1.999714", "2.000244"},
    {"0", 3, 1, "2", "2"},
    {"0.001", 3, 16, "1.9986710464441", "1.9986710464498"},
    {"0.01", 3, 20, "1.9867452618193", "1.9867452618204"},
    {"0.1", 0, 27, "1.870636", "1.871151"},
    {"0.1", 3, 22, "1.8709141846102", "1.8709141846107"},
    {"0.5", 0, 30, "1.429056", "1.429492"},
    {"0.5", 3, 24, "1.4292927197475", "1.4292927197522"},
    {"1", 0, 27, "1.032928", "1.033250"},
    {"1", 3, 25, "1.0331033239001", "1.0331033239766"},
    {"5", 0, 18, "0.51598078", "0.51598081"},
    {"5", 3, 20, "0.51591386", "0.51598114"},
    {"10", 0, 13, "0.5038074052", "0.5038074090"},
    {"20", 0, 10, "0.5009410333", "0.5009410338"},
    {"100", 0, 7, "0.5000375056", "0.5000375257"},
    {"1000", 0, 7, "0.500000375000431", "0.500000375004431"},
    {"2500", 0, 6, "0.500000059999800", "0.500000060003038"},
};

std::vector<RowReport> run_t2(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T2Row& row : kT2) {
        if (row.pmax > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
        Real b = parse(row.b);
        Problem prob(b, Representation::Phi, row.sigma);
        Bracket scan = ground_window(b, 1e-16);
        RowReport rep;
        rep.label = "T2 b=" + std::string(row.b) + " sigma=" + std::to_string(row.sigma) +
                    " P=" + std::to_string(row.pmax);
        try {
            EnergyInterval iv = ground_bounds(prob, row.pmax, scan);
            bool ok = overlaps(iv, parse(row.lo), parse(row.hi)) && near_printed(iv.lo, row.lo, 4) &&
                      near_printed(iv.hi, row.hi, 4);
            rep.pass = ok;
            rep.detail = iv_str(iv) + " vs [" + row.lo + ", " + row.hi + "]";
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Table 3: EMM-Psi^2 --------------------------------------------------

struct T3Row {
    const char* b;
    int state;
    int pmax;
    const char* lo;
    const char* hi;
};

constexpr T3Row kT3[] = {
    {"0", 0, 26, "1.99998825", "2.00005739"},
    {"0", 1, 25, "3.99671544", "4.00447362"},
    {"0", 2, 26, "5.91768300", "6.04294214"},
    {"0.1", 0, 26, "1.87090202", "1.87092049"},
    {"0.1", 1, 28, "3.82074273", "3.82158281"},
    {"0.1", 2, 27, "5.75422040", "5.82182702"},
    {"0.5", 0, 30, "1.42928910", "1.42929704"},
    {"0.5", 1, 28, "3.18388603", "3.18432342"},
    {"0.5", 2, 27, "4.97456267", "5.02884966"},
    {"1", 0, 29, "1.03310195", "1.03310458"},
    {"1", 1, 27, "2.55658870", "2.55901222"},
    {"1", 2, 27, "4.12209511", "4.19851998"},
    {"5", 0, 22, "0.51278794", "0.52143406"},
    {"5", 1, 23, "1.475", "1.855"},
};

std::vector<RowReport> run_t3(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T3Row& row : kT3) {
        if (row.pmax > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
        Real b = parse(row.b);
        Real hi_scan = parse(row.hi) + Real(1);
        Bracket scan(b.to_double() >= 5 ? Real("0.505") : Real("0.60"), hi_scan, Real(1e-12));
        RowReport rep;
        rep.label = "T3 b=" + std::string(row.b) + " state=" + std::to_string(row.state) +
                    " P=" + std::to_string(row.pmax);
        try {
            EnergyInterval iv = psi2_state_bounds(b, row.state, row.pmax, scan);
            Real pw = parse(row.hi) - parse(row.lo);
            bool ok = overlaps(iv, parse(row.lo), parse(row.hi)) && iv.width() <= Real(3) * pw &&
                      Real(3) * iv.width() >= pw;
            rep.pass = ok;
            rep.detail = iv_str(iv) + " vs [" + row.lo + ", " + row.hi + "]";
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Table 4: OPPQ-AM, P_max = 100 ----------------------------------------

struct T4Row {
    const char* b;
    const char* e[4];
};

constexpr T4Row kT4[] = {
    {"0", {"2", "4", "6", "8"}},
    {"0.5", {"1.4292927197", "3.184017114", "4.987971463", "6.820440707"}},
    {"1.0", {"1.0331033239", "2.557261915", "4.169923329", "5.837014390"}},
    {"1.5", {"0.7847675572", "2.107433725", "3.538491138", "5.044354682"}},
    {"2.0", {"0.6481322228", "1.816590914", "3.084658976", "4.436894490"}},
    {"2.5", {"0.5818553905", "1.655297046", "2.794166923", "4.007820744"}},
    {"3.0", {"0.5509509520", "1.580121756", "2.638483895", "3.743614149"}},
    {"3.5", {"0.5351717068", "1.547741639", "2.570043163", "3.611459829"}},
    {"4.0", {"0.5259688826", "1.532318972", "2.541876785", "3.557419442"}},
    {"4.5", {"0.5200471427", "1.523670892", "2.528557218", "3.535449712"}},
    {"5.0", {"0.5159807819", "1.518222436", "2.521046746", "3.524694536"}},
    {"5.5", {"0.5130560157", "1.514525084", "2.516293284", "3.518454199"}},
    {"6.0", {"0.5108767399", "1.511882954", "2.513054951", "3.514433855"}},
    {"6.5", {"0.5092067728", "1.509920644", "2.510731970", "3.511660509"}},
    {"7.0", {"0.5078974472", "1.508418730", "2.509000073", "3.509651653"}},
    {"7.5", {"0.5068510767", "1.507241028", "2.507669464", "3.508141930"}},
    {"8.0", {"0.5060011798", "1.506298942", "2.506622186", "3.506974079"}},
    {"8.5", {"0.5053011643", "1.505532597", "2.505781384", "3.506049402"}},
    {"9.0", {"0.5047175513", "1.504900234", "2.505095024", "3.505303077"}},
    {"9.5", {"0.5042257611", "1.504371940", "2.504526749", "3.504690917"}},
    {"10.0", {"0.5038074053", "1.503925798", "2.504050459", "3.504181861"}},
};

std::vector<RowReport> run_t4(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    const int N = 100;
    if (N > opt.max_order) return out;
    for (const T4Row& row : kT4) {
        Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
        Real b = parse(row.b);
        RowReport rep;
        rep.label = "T4 b=" + std::string(row.b);
        try {
            auto basis = cached_basis(b, N);
            Problem prob(b, Representation::Psi);
            std::vector<Real> roots =
                am_energies(prob, N, *basis, Bracket(Real("0.3"), Real("9.5"), Real(1e-15)), 800);
            bool ok = roots.size() >= 4;
            std::string detail;
            for (int n = 0; n < 4 && ok; ++n) {
                ok = near_printed(roots[n], row.e[n], 2);
                if (!ok) detail = "state " + std::to_string(n) + ": " + roots[n].str(14) + " vs " + row.e[n];
            }
            rep.pass = ok;
            if (detail.empty() && ok)
                detail = roots[0].str(12) + " " + roots[1].str(12) + " " + roots[2].str(12) + " " +
                         roots[3].str(12);
            rep.detail = detail;
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Table 5: AM determinant factorization at b = 0 ------------------------

struct T5Row {
    int N;
    double scan_hi;
    int nroots;             // printed roots
    const char* roots[9];
};

constexpr T5Row kT5[] = {
    {4, 8.0, 1, {"2"}},
    {5, 10.0, 2, {"2", "4.254"}},
    {6, 12.0, 3, {"2", "4", "7.463"}},
    {7, 17.0, 4, {"2", "4", "5.708", "12.632"}},
    {8, 10.0, 3, {"2", "4", "6"}},
    {10, 11.0, 4, {"2", "4", "6", "8"}},
    {20, 19.0, 9, {"2", "4", "6", "8", "10", "12", "14", "16", "18"}},
    {30, 29.0, 9, {"2", "4", "6", "8", "10", "12", "14", "16", "18"}},
};

std::vector<RowReport> run_t5(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T5Row& row : kT5) {
        if (row.N > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
        RowReport rep;
        rep.label = "T5 N=" + std::to_string(row.N);
        try {
            auto basis = cached_basis(Real(0), row.N);
            Problem prob(Real(0), Representation::Psi);
            std::vector<Real> roots =
                am_energies(prob, row.N, *basis, Bracket(Real("0.3"), Real(row.scan_hi), Real(1e-12)), 1600);
            bool ok = true;
            std::string detail;
            for (int i = 0; i < row.nroots && ok; ++i) {
                Real want = parse(row.roots[i]);
                bool found = false;
                for (const Real& r : roots) found = found || abs(r - want) <= Real(1e-3);
                if (!found) {
                    ok = false;
                    detail = "missing root " + std::string(row.roots[i]);
                }
            }
            rep.pass = ok;
            if (ok) {
                for (const Real& r : roots) detail += r.str(8) + " ";
            }
            rep.detail = detail;
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Tables 6 & 7: OPPQ-BM at b = 0.5 --------------------------------------

struct T6Entry {
    const char* e;
    const char* l10;
};
struct T6Row {
    int N;
    int nstates;
    T6Entry s[4];
};

constexpr T6Row kT6[] = {
    {10, 2, {{"1.5150470", "-0.84559280"}, {"4.3969969", "-1.1623635"}, {}, {}}},
    {11, 2, {{"1.4199646", "-0.82806681"}, {"3.9889962", "-1.0852239"}, {}, {}}},
    {12, 3, {{"1.4156228", "-0.80336151"}, {"3.1875626", "-0.74234366"}, {"5.1889348", "-0.97331160"}, {}}},
    {13, 3, {{"1.4301144", "-0.79832277"}, {"3.1214643", "-0.51419926"}, {"4.8564978", "-0.91784021"}, {}}},
    {14, 3, {{"1.4290630", "-0.79825893"}, {"3.2393572", "-0.49476172"}, {"6.0745714", "-0.73221637"}, {}}},
    {15, 3, {{"1.4289479", "-0.79757698"}, {"3.1808773", "-0.48495873"}, {"5.5858837", "-0.66854618"}, {}}},
    {16, 4,
     {{"1.4294188", "-0.79745638"}, {"3.1790069", "-0.47258623"}, {"4.9600850", "-0.54416892"}, {"6.8883817", "-0.49025962"}}},
    {17, 4,
     {{"1.4293205", "-0.79744519"}, {"3.1863572", "-0.47115027"}, {"4.9543391", "-0.47566983"}, {"6.6591851", "-0.46057027"}}},
    {18, 4,
     {{"1.4292787", "-0.79740046"}, {"3.1841563", "-0.47087295"}, {"5.0040638", "-0.46768132"}, {"6.7008468", "-0.34041178"}}},
    {19, 4,
     {{"1.4292932", "-0.79738417"}, {"3.1837027", "-0.47025848"}, {"4.9868242", "-0.46552191"}, {"6.8641735", "-0.32407160"}}},
    {20, 4,
     {{"1.4292967", "-0.79738248"}, {"3.1840333", "-0.47013608"}, {"4.9851930", "-0.46121438"}, {"6.8069551", "-0.31888442"}}},
    {30, 4,
     {{"1.4292931", "-0.79738040"}, {"3.1840182", "-0.47012365"}, {"4.9879738", "-0.46026542"}, {"6.8204428", "-0.30655075"}}},
    {40, 4,
     {{"1.4292928", "-0.79738016"}, {"3.1840173", "-0.47012319"}, {"4.9879718", "-0.46026461"}, {"6.8204411", "-0.30655027"}}},
    {50, 4,
     {{"1.4292927", "-0.79738012"}, {"3.1840172", "-0.47012312"}, {"4.9879716", "-0.46026449"}, {"6.8204408", "-0.30655019"}}},
    {60, 4,
     {{"1.4292927", "-0.79738011"}, {"3.1840171", "-0.47012310"}, {"4.9879715", "-0.46026446"}, {"6.8204408", "-0.30655017"}}},
    {70, 4,
     {{"1.42929272246", "-0.79738011"}, {"3.18401712169", "-0.47012309"}, {"4.98797147862", "-0.46026445"}, {"6.82044072541", "-0.30655016"}}},
    {80, 4,
     {{"1.42929272103", "-0.79738011"}, {"3.18401711764", "-0.47012309"}, {"4.98797147036", "-0.46026444"}, {"6.82044071591", "-0.30655016"}}},
    {90, 4,
     {{"1.42929272042", "-0.79738011"}, {"3.18401711589", "-0.47012309"}, {"4.98797146679", "-0.46026444"}, {"6.82044071179", "-0.30655016"}}},
    {100, 4,
     {{"1.42929272012", "-0.79738011"}, {"3.18401711506", "-0.47012309"}, {"4.98797146508", "-0.46026444"}, {"6.82044070983", "-0.30655016"}}},
    {150, 4,
     {{"1.42929271979", "-0.79738011"}, {"3.18401711412", "-0.47012309"}, {"4.98797146316", "-0.46026444"}, {"6.82044070761", "-0.30655016"}}},
    {200, 4,
     {{"1.42929271976", "-0.79738011"}, {"3.18401711403", "-0.47012309"}, {"4.98797146298", "-0.46026444"}, {"6.82044070740", "-0.30655016"}}},
    {250, 4,
     {{"1.429292719754", "-0.79738011"}, {"3.18401711401", "-0.47012309"}, {"4.98797146294", "-0.46026444"}, {"6.82044070736", "-0.30655016"}}},
    {300, 4,
     {{"1.429292719752", "-0.79738011"}, {"3.18401711401", "-0.47012309"}, {"4.98797146293", "-0.46026444"}, {"6.82044070735", "-0.30655016"}}},
    {350, 4,
     {{"1.4292927197517", "-0.79738011"}, {"3.18401711400", "-0.47012309"}, {"4.98797146293", "-0.46026444"}, {"6.82044070734", "-0.30655016"}}},
};

std::vector<RowReport> run_t6(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T6Row& row : kT6) {
        if (row.N > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : bm_bits(row.N));
        RowReport rep;
        rep.label = "T6 N=" + std::to_string(row.N);
        try {
            Real b("0.5");
            auto basis = cached_basis(b, row.N);
            Problem prob(b, Representation::Psi);
            std::vector<Real> grid(601);
            for (int k = 0; k <= 600; ++k) grid[k] = Real("0.55") + (Real("8.6") - Real("0.55")) * Real(k) / Real(600);
            Eigencurve curve = bm_curve(prob, row.N, *basis, grid, Real(1e-11));
            bool ok = static_cast<int>(curve.minima.size()) == row.nstates;
            std::string detail;
            if (!ok) detail = "found " + std::to_string(curve.minima.size()) + " minima";
            double e_ulps = row.N >= 70 ? 4 : 40;  // print granularity differs across rows
            for (int s = 0; s < row.nstates && ok; ++s) {
                const auto& m = curve.minima[s];
                Real l10 = log10(m.lambda);
                if (!near_printed(m.E, row.s[s].e, e_ulps) || !near_printed(l10, row.s[s].l10, 4)) {
                    ok = false;
                    detail = "state " + std::to_string(s) + ": " + m.E.str(14) + " " + l10.str(10) + " vs " +
                             row.s[s].e + " " + row.s[s].l10;
                }
            }
            rep.pass = ok;
            if (ok) {
                for (const auto& m : curve.minima) detail += m.E.str(12) + " ";
            }
            rep.detail = detail;
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

const char* kBU[4] = {"-0.79738", "-0.470123", "-0.460264", "-0.30655"};
// per-state windows that isolate each minimum at N >= 50
const char* kStateWin[4][2] = {{"1.2", "1.9"}, {"2.9", "3.5"}, {"4.6", "5.4"}, {"6.4", "7.2"}};

struct T7Row {
    int N;
    int nstates;
    const char* lo[4];
    const char* hi[4];
};

constexpr T7Row kT7[] = {
    {10, 1, {"1.355213912"}, {"1.767314750"}},
    {50, 4,
     {"1.429292680", "3.184017055", "4.987971200", "6.820440400"},
     {"1.429292800", "3.184017276", "4.987972000", "6.820441200"}},
    {100, 4,
     {"1.4292927126", "3.184017100", "4.987971416", "6.820440664"},
     {"1.4292927276", "3.184017130", "4.987971512", "6.820440752"}},
    {150, 4,
     {"1.4292927172", "3.1840171096", "4.9879714476", "6.8204406948"},
     {"1.4292927224", "3.1840171186", "4.9879714784", "6.8204407212"}},
};

std::vector<RowReport> run_t7(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    for (const T7Row& row : kT7) {
        if (row.N > opt.max_order) continue;
        Real::set_precision(opt.precision_bits ? opt.precision_bits : bm_bits(row.N));
        RowReport rep;
        rep.label = "T7 N=" + std::to_string(row.N);
        try {
            Real b("0.5");
            auto basis = cached_basis(b, row.N);
            Problem prob(b, Representation::Psi);
            bool ok = true;
            std::string detail;
            for (int s = 0; s < row.nstates && ok; ++s) {
                Bracket win(row.N == 10 ? Real("0.9") : parse(kStateWin[s][0]),
                            row.N == 10 ? Real("2.6") : parse(kStateWin[s][1]), Real(1e-13));
                EnergyInterval iv = bm_bounds(prob, s, row.N, *basis, pow10(parse(kBU[s])), win);
                if (!near_printed(iv.lo, row.lo[s], 20) || !near_printed(iv.hi, row.hi[s], 20)) {
                    ok = false;
                    detail = "state " + std::to_string(s) + ": " + iv_str(iv) + " vs [" + row.lo[s] + ", " +
                             row.hi[s] + "]";
                }
            }
            rep.pass = ok;
            rep.detail = detail;
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        emit(opt, rep);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---- Fig. 1: energy sweep properties ---------------------------------------

std::vector<RowReport> run_fig1(const VerifyOptions& opt) {
    std::vector<RowReport> out;
    const int N = 100, nmax = 9;
    if (N > opt.max_order) return out;
    Real::set_precision(opt.precision_bits ? opt.precision_bits : 320);
    std::vector<Real> bs;
    for (int k = 0; k <= 20; ++k) bs.push_back(Real(k) / Real(2));
    RowReport rep;
    rep.label = "FIG1 b=0..10 n=0..9";
    try {
        std::vector<std::vector<Real>> table = sweep_energies(bs, nmax, N);
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= nmax && ok; ++n) {
            for (size_t i = 0; i < bs.size() && ok; ++i) {
                if (!(table[i][n] > Real(n) + Real("0.5"))) {
                    ok = false;
                    detail = "E_" + std::to_string(n) + "(b=" + bs[i].str(4) + ") <= n + 1/2";
                }
                if (i > 0 && !(table[i][n] < table[i - 1][n])) {
                    ok = false;
                    detail = "E_" + std::to_string(n) + " not decreasing at b=" + bs[i].str(4);
                }
            }
        }
        rep.pass = ok;
        rep.detail = detail;
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.detail = e.what();
    }
    emit(opt, rep);
    out.push_back(std::move(rep));
    return out;
}

}  // namespace

std::vector<RowReport> verify_table(TableId id, const VerifyOptions& opt) {
    long saved = Real::precision();
    std::vector<RowReport> out;
    switch (id) {
        case TableId::T1: out = run_t1(opt); break;
        case TableId::T2: out = run_t2(opt); break;
        case TableId::T3: out = run_t3(opt); break;
        case TableId::T4: out = run_t4(opt); break;
        case TableId::T5: out = run_t5(opt); break;
        case TableId::T6: out = run_t6(opt); break;
        case TableId::T7: out = run_t7(opt); break;
        case TableId::FIG1: out = run_fig1(opt); break;
    }
    Real::set_precision(saved);
    return out;
}

}  // namespace oscb
