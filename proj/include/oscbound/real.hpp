#ifndef OSCBOUND_REAL_HPP
#define OSCBOUND_REAL_HPP

#include <mpfr.h>

#include <string>
#include <iosfwd>

namespace oscb {

// Extended-precision scalar backed by MPFR. The working precision is fixed
// once per run (set_precision); every value carries nominal + 64 guard bits
// internally so that results quoted at nominal precision are fully accurate.
class Real {
  public:
    static constexpr long kGuardBits = 64;
    static constexpr long kMinNominalBits = 128;
    static constexpr long kDefaultNominalBits = 320;

    // Nominal working precision for the run, in bits (>= 128).
    static void set_precision(long nominal_bits);
    static long precision();            // nominal bits
    static long internal_bits();        // nominal + guard
    static long decimal_digits();       // ~ nominal * log10(2)
    // Smallest relative spacing at internal precision, as a Real (2^(1-bits)).
    static Real eps();

    Real();
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real(double x);
    Real(long x);
    Real(int x);
    explicit Real(const std::string& decimal);
    ~Real();

    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    Real operator-() const;

    bool is_finite() const;
    bool is_zero() const;
    int sign() const;  // -1, 0, +1

    double to_double() const;
    long to_long() const;

    // Decimal string with the given significant digits (round-trips at that
    // precision); hex() is the exact binary representation ("%Ra"), suitable
    // for bit-exact replay via from_hex().
    std::string str(int significant_digits = 20) const;
    std::string hex() const;
    static Real from_hex(const std::string& s);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real pow(const Real& x, long n);
Real pow10(const Real& x);  // 10^x
Real tgamma(const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// a*b + c without intermediate rounding
Real fma(const Real& a, const Real& b, const Real& c);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace oscb

#endif
