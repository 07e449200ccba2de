#include "jameslab/real.hpp"

#include "jameslab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

namespace jameslab {

namespace {

constexpr long kMinPrec = MPFR_PREC_MIN;
constexpr long kMaxPrec = 1 << 20;

std::atomic<long> g_default_prec{128};

long clamp_prec(long p) { return std::max(kMinPrec, std::min(kMaxPrec, p)); }

long result_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

} // namespace

long default_precision() { return g_default_prec.load(); }

void set_default_precision(long bits) { g_default_prec.store(clamp_prec(bits)); }

double default_rel_tolerance() { return 1e-24; }

Real::Real(long prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(double x, long prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(long x, long prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(const mpz_class& x, long prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of(const mpq_class& x, long prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& s, long prec) {
    Real r(prec);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ConfigError("not a decimal literal: '" + s + "'");
    return r;
}

std::string Real::str(int sig_digits) const {
    int digits = std::max(1, sig_digits);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

#define JAMESLAB_BINOP(op, fn)                                   \
    Real operator op(const Real& a, const Real& b) {             \
        Real r(result_prec(a, b));                               \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                \
        return r;                                                \
    }                                                            \
    Real& Real::operator op##=(const Real& o) {                  \
        *this = *this op o;                                      \
        return *this;                                            \
    }

JAMESLAB_BINOP(+, mpfr_add)
JAMESLAB_BINOP(-, mpfr_sub)
JAMESLAB_BINOP(*, mpfr_mul)
JAMESLAB_BINOP(/, mpfr_div)

#undef JAMESLAB_BINOP

Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

Real rootn(const Real& a, unsigned long n) {
    Real r(a.precision());
    mpfr_rootn_ui(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}

Real pow_q(const Real& a, const mpq_class& e) {
    if (a.sign() < 0) throw Error("pow_q: negative base");
    mpq_class q(e);
    q.canonicalize();
    if (q == 0) return Real::of(1L, a.precision());
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    Real base = (den == 1) ? a : rootn(a, den.get_ui());
    Real r(a.precision());
    mpfr_pow_z(r.raw(), base.raw(), num.get_mpz_t(), MPFR_RNDN);
    return r;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
const Real& min(const Real& a, const Real& b) { return (b < a) ? b : a; }

mpz_class floor_z(const Real& a) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), a.raw(), MPFR_RNDD);
    return z;
}

mpz_class ceil_z(const Real& a) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), a.raw(), MPFR_RNDU);
    return z;
}

bool rel_close(const Real& a, const Real& b, double rel) {
    Real diff = abs(a - b);
    Real scale = max(abs(a), abs(b));
    if (scale.is_zero()) return true;
    return diff <= scale * Real::of(rel, a.precision());
}

} // namespace jameslab
