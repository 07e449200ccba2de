#include "jameslab/params.hpp"

#include "jameslab/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace jameslab {

mpq_class ConstructionParams::p_conj() const { return p / (p - 1); }

mpq_class ConstructionParams::r_conj() const { return r / (r - 1); }

mpq_class ConstructionParams::alpha_exponent() const {
    mpq_class pc = p_conj();
    return (mpq_class(1) / pc - mpq_class(1) / p) / 2;
}

ConstructionParams ConstructionParams::make(const mpq_class& p, const mpq_class& r,
                                            std::vector<mpz_class> k, long precision_bits) {
    if (!(p > 1 && p < 2)) throw ConfigError("need 1 < p < 2, got p = " + p.get_str());
    if (!(r > 2)) throw ConfigError("need r > 2, got r = " + r.get_str());
    mpq_class rc = r / (r - 1);
    if (!(rc < p)) throw ConfigError("need r' < p; r' = " + rc.get_str() + ", p = " + p.get_str());
    if (k.empty()) throw ConfigError("need at least one block size");
    for (const auto& ki : k)
        if (ki < 1) throw ConfigError("block sizes must be positive");

    ConstructionParams cp;
    cp.p = p;
    cp.r = r;
    cp.k = std::move(k);
    cp.precision_bits = precision_bits;
    cp.cum.resize(cp.k.size() + 1);
    cp.cum[0] = 0;
    for (size_t i = 0; i < cp.k.size(); ++i) cp.cum[i + 1] = cp.cum[i] + cp.k[i];
    mpq_class e = cp.alpha_exponent();
    cp.alpha.reserve(cp.k.size());
    for (size_t i = 0; i < cp.k.size(); ++i) {
        Real root_n = sqrt(Real::of(static_cast<long>(i) + 1, precision_bits));
        cp.alpha.push_back(root_n * pow_q(Real::of(cp.k[i], precision_bits), e));
    }
    return cp;
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw ConfigError("rational must be 'num' or 'num/den' (no decimals): '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ConfigError("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string ConstructionParams::to_json_string() const {
    nlohmann::json j;
    j["p"] = p.get_str();
    j["r"] = r.get_str();
    j["k"] = nlohmann::json::array();
    for (const auto& ki : k) j["k"].push_back(ki.get_str());
    j["precision_bits"] = precision_bits;
    return j.dump(2);
}

ConstructionParams ConstructionParams::from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad params JSON: ") + e.what());
    }
    if (!j.contains("p") || !j.contains("r") || !j.contains("k"))
        throw ConfigError("params JSON needs fields p, r, k");
    mpq_class p = parse_rational(j["p"].get<std::string>());
    mpq_class r = parse_rational(j["r"].get<std::string>());
    std::vector<mpz_class> k;
    for (const auto& e : j["k"]) {
        mpz_class ki;
        if (ki.set_str(e.get<std::string>(), 10) != 0)
            throw ConfigError("bad block size in params JSON");
        k.push_back(ki);
    }
    long bits = j.value("precision_bits", 128);
    return make(p, r, std::move(k), bits);
}

ConstructionParams ConstructionParams::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open params file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_string(ss.str());
}

void ConstructionParams::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write params file: " + path);
    out << to_json_string() << "\n";
}

} // namespace jameslab
