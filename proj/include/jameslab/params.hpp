#pragma once

// Parameters of the block construction: exact rationals p, r with
// r' < p < 2 < r, exact integer block sizes k_1..k_L, and the derived
// weights alpha_n = sqrt(n) * k_n^((1/p'-1/p)/2) cached at a stated
// precision.

#include "jameslab/real.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jameslab {

struct ConstructionParams {
    mpq_class p;
    mpq_class r;
    std::vector<mpz_class> k;
    long precision_bits = 128;

    // derived on construction
    std::vector<Real> alpha;     // alpha[i] is alpha_{i+1}
    std::vector<mpz_class> cum;  // cum[i] = k_1 + ... + k_i, cum[0] = 0

    int blocks() const { return static_cast<int>(k.size()); }
    const mpz_class& capacity() const { return cum.back(); }
    const Real& alpha_at(int n) const { return alpha[static_cast<size_t>(n) - 1]; }
    const mpz_class& k_at(int n) const { return k[static_cast<size_t>(n) - 1]; }

    mpq_class p_conj() const;       // p' = p/(p-1)
    mpq_class r_conj() const;       // r' = r/(r-1)
    mpq_class alpha_exponent() const; // (1/p' - 1/p)/2

    /// Validates the regime 1 < p < 2 < r, r' < p and k_i >= 1, then caches
    /// the alpha weights. Does not check the growth inequalities; that is
    /// check_feasibility's job.
    static ConstructionParams make(const mpq_class& p, const mpq_class& r,
                                   std::vector<mpz_class> k, long precision_bits = 128);

    std::string to_json_string() const;
    static ConstructionParams from_json_string(const std::string& text);
    static ConstructionParams load(const std::string& path);
    void save(const std::string& path) const;
};

/// Parses "num/den" or "num"; rejects decimals so exactness is never lost.
mpq_class parse_rational(const std::string& s);

} // namespace jameslab
