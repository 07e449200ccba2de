#pragma once

// Extended-precision scalar used for all norm arithmetic. Thin RAII wrapper
// over mpfr_t; precision is carried per value, binary operations round to
// nearest at the larger operand precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace jameslab {

/// Working precision in bits for newly created values (process-wide).
long default_precision();
void set_default_precision(long bits);

/// Default relative comparison tolerance for verification checks.
double default_rel_tolerance();

class Real {
  public:
    Real() : Real(default_precision()) {}
    explicit Real(long prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real of(double x, long prec = default_precision());
    static Real of(long x, long prec = default_precision());
    static Real of(int x, long prec = default_precision()) { return of(static_cast<long>(x), prec); }
    static Real of(const mpz_class& x, long prec = default_precision());
    static Real of(const mpq_class& x, long prec = default_precision());
    /// Parses a decimal literal; throws ConfigError on trailing garbage.
    static Real parse(const std::string& s, long prec = default_precision());

    long precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Deterministic scientific-notation rendering.
    std::string str(int sig_digits = 25) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

  private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
/// a^(num/den) for a >= 0, computed as rootn then integer power.
Real pow_q(const Real& a, const mpq_class& e);
Real rootn(const Real& a, unsigned long n);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

mpz_class floor_z(const Real& a);
mpz_class ceil_z(const Real& a);

/// |a - b| <= rel * max(|a|, |b|); for b == a == 0 this is true.
bool rel_close(const Real& a, const Real& b, double rel = default_rel_tolerance());

} // namespace jameslab
