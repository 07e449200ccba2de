#pragma once

// Machine-readable verification reports: one assertion per checked
// inequality, with margins and witnesses, plus an echo of the resolved
// configuration for reproducibility.

#include "jameslab/real.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jameslab {

struct Assertion {
    std::string name;
    bool pass = false;
    std::string lhs, rhs, margin;
    nlohmann::json witness; // optional

    static Assertion compare(const std::string& name, bool pass, const Real& lhs, const Real& rhs);
};

struct Report {
    std::string suite;
    nlohmann::json config = nlohmann::json::object();
    std::vector<Assertion> assertions;

    void add(Assertion a) { assertions.push_back(std::move(a)); }
    bool all_pass() const;
    /// Deterministic body; the timestamp is the only nondeterministic field
    /// and is attached separately when requested.
    nlohmann::json to_json(bool with_timestamp) const;
    std::string dump(bool with_timestamp) const;
    /// Flat name,pass,lhs,rhs,margin table for external plotting.
    std::string to_csv() const;
};

std::string real_str(const Real& x, int digits = 25);
nlohmann::json coeffs_json(const std::vector<Real>& xs, int digits = 25);

} // namespace jameslab
