#include "jameslab/report.hpp"

#include <algorithm>
#include <chrono>

namespace jameslab {

Assertion Assertion::compare(const std::string& name, bool pass, const Real& lhs,
                             const Real& rhs) {
    Assertion a;
    a.name = name;
    a.pass = pass;
    a.lhs = real_str(lhs);
    a.rhs = real_str(rhs);
    a.margin = real_str(rhs - lhs);
    return a;
}

bool Report::all_pass() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.pass; });
}

nlohmann::json Report::to_json(bool with_timestamp) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["config"] = config;
    j["assertions"] = nlohmann::json::array();
    for (const auto& a : assertions) {
        nlohmann::json ja;
        ja["name"] = a.name;
        ja["pass"] = a.pass;
        ja["lhs"] = a.lhs;
        ja["rhs"] = a.rhs;
        ja["margin"] = a.margin;
        if (!a.witness.is_null()) ja["witness"] = a.witness;
        j["assertions"].push_back(std::move(ja));
    }
    int passed = 0;
    for (const auto& a : assertions)
        if (a.pass) ++passed;
    j["summary"] = {{"total", assertions.size()},
                    {"passed", passed},
                    {"failed", assertions.size() - static_cast<size_t>(passed)}};
    if (with_timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    return j;
}

std::string Report::dump(bool with_timestamp) const { return to_json(with_timestamp).dump(2); }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string Report::to_csv() const {
    std::string out = "name,pass,lhs,rhs,margin\n";
    for (const auto& a : assertions) {
        out += csv_field(a.name) + "," + (a.pass ? "1" : "0") + "," + csv_field(a.lhs) + "," +
               csv_field(a.rhs) + "," + csv_field(a.margin) + "\n";
    }
    return out;
}

std::string real_str(const Real& x, int digits) { return x.str(digits); }

nlohmann::json coeffs_json(const std::vector<Real>& xs, int digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(real_str(x, digits));
    return arr;
}

} // namespace jameslab
