#include "oscbound/real.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace oscb {

namespace {
std::atomic<long> g_nominal_bits{Real::kDefaultNominalBits};
constexpr mpfr_rnd_t RND = MPFR_RNDN;
}  // namespace

void Real::set_precision(long nominal_bits) {
    if (nominal_bits < kMinNominalBits)
        throw std::invalid_argument("Real::set_precision: precision below 128 bits");
    g_nominal_bits.store(nominal_bits);
}

long Real::precision() { return g_nominal_bits.load(); }
long Real::internal_bits() { return g_nominal_bits.load() + kGuardBits; }
long Real::decimal_digits() { return static_cast<long>(g_nominal_bits.load() * 0.30103); }

Real Real::eps() {
    Real e(1);
    mpfr_mul_2si(e.v_, e.v_, 1 - internal_bits(), RND);
    return e;
}

Real::Real() { mpfr_init2(v_, internal_bits()); mpfr_set_zero(v_, 1); }
Real::Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, RND); }
Real::Real(Real&& o) noexcept {
    v_[0] = o.v_[0];
    mpfr_init2(o.v_, MPFR_PREC_MIN);  // leave the source valid for its dtor
}
Real::Real(double x) { mpfr_init2(v_, internal_bits()); mpfr_set_d(v_, x, RND); }
Real::Real(long x) { mpfr_init2(v_, internal_bits()); mpfr_set_si(v_, x, RND); }
Real::Real(int x) { mpfr_init2(v_, internal_bits()); mpfr_set_si(v_, x, RND); }
Real::Real(const std::string& decimal) {
    mpfr_init2(v_, internal_bits());
    if (mpfr_set_str(v_, decimal.c_str(), 10, RND) != 0)
        throw std::invalid_argument("Real: cannot parse \"" + decimal + "\"");
}
Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, RND);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, RND); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, RND); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, RND); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, RND); return *this; }

Real Real::operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, RND); return r; }

bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }
bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }
int Real::sign() const { return mpfr_sgn(v_); }

double Real::to_double() const { return mpfr_get_d(v_, RND); }
long Real::to_long() const { return mpfr_get_si(v_, RND); }

std::string Real::str(int significant_digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", significant_digits, v_) < 0)
        throw std::runtime_error("Real::str: mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Real::hex() const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%Ra", v_) < 0)
        throw std::runtime_error("Real::hex: mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::from_hex(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.v_, s.c_str(), 16, RND) != 0)
        throw std::invalid_argument("Real::from_hex: cannot parse \"" + s + "\"");
    return r;
}

Real operator+(Real a, const Real& b) { a += b; return a; }
Real operator-(Real a, const Real& b) { a -= b; return a; }
Real operator*(Real a, const Real& b) { a *= b; return a; }
Real operator/(Real a, const Real& b) { a /= b; return a; }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

namespace {
constexpr mpfr_rnd_t R2 = MPFR_RNDN;
}

Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.raw(), x.raw(), R2); return r; }
Real abs(const Real& x) { Real r; mpfr_abs(r.raw(), x.raw(), R2); return r; }
Real exp(const Real& x) { Real r; mpfr_exp(r.raw(), x.raw(), R2); return r; }
Real log(const Real& x) { Real r; mpfr_log(r.raw(), x.raw(), R2); return r; }
Real log10(const Real& x) { Real r; mpfr_log10(r.raw(), x.raw(), R2); return r; }
Real pow(const Real& x, long n) { Real r; mpfr_pow_si(r.raw(), x.raw(), n, R2); return r; }
Real pow10(const Real& x) {
    Real ten(10), r;
    mpfr_pow(r.raw(), ten.raw(), x.raw(), R2);
    return r;
}
Real tgamma(const Real& x) { Real r; mpfr_gamma(r.raw(), x.raw(), R2); return r; }
Real floor(const Real& x) { Real r; mpfr_floor(r.raw(), x.raw()); return r; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real fma(const Real& a, const Real& b, const Real& c) {
    Real r;
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), R2);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

}  // namespace oscb
