#include "jameslab/specparse.hpp"

#include "jameslab/errors.hpp"

#include <memory>

namespace jameslab {

namespace {

// key=value fields separated by commas
std::string field(const std::string& body, const std::string& key) {
    size_t pos = 0;
    while (pos < body.size()) {
        size_t end = body.find(',', pos);
        if (end == std::string::npos) end = body.size();
        std::string part = body.substr(pos, end - pos);
        size_t eq = part.find('=');
        if (eq != std::string::npos && part.substr(0, eq) == key) return part.substr(eq + 1);
        pos = end + 1;
    }
    throw ConfigError("missing field '" + key + "' in spec '" + body + "'");
}

} // namespace

NormSpec parse_norm_spec(const std::string& text) {
    if (text.rfind("lp:", 0) == 0) {
        std::string body = text.substr(3);
        LpNorm n;
        // both lp:p=2 and the shorthand lp:2 are accepted
        n.p = parse_rational(body.find('=') == std::string::npos ? body : field(body, "p"));
        if (n.p < 1) throw ConfigError("lp spec needs p >= 1");
        return n;
    }
    if (text.rfind("lorentz:", 0) == 0) {
        std::string body = text.substr(8);
        LorentzNorm n;
        std::string w = field(body, "w");
        if (w != "harmonic")
            throw ConfigError("only w=harmonic weights are supported in the spec grammar");
        n.kind = LorentzNorm::Weights::harmonic;
        n.p = parse_rational(field(body, "p"));
        if (n.p < 1) throw ConfigError("lorentz spec needs p >= 1");
        return n;
    }
    if (text.rfind("blockt:", 0) == 0) {
        auto params = std::make_shared<ConstructionParams>(
            ConstructionParams::load(field(text.substr(7), "params")));
        set_default_precision(std::max(default_precision(), params->precision_bits));
        return BlockTNorm{std::move(params)};
    }
    if (text.rfind("symhull:", 0) == 0) {
        std::string inner = text.substr(8);
        if (inner.rfind("blockt:", 0) != 0)
            throw ConfigError("symhull inner norm must be blockt in this artifact");
        auto params = std::make_shared<ConstructionParams>(
            ConstructionParams::load(field(inner.substr(7), "params")));
        set_default_precision(std::max(default_precision(), params->precision_bits));
        return SymmetricHullNorm{std::move(params)};
    }
    throw ConfigError("unknown norm spec '" + text + "'");
}

PrimalSpace parse_space_spec(const std::string& text) {
    if (text.rfind("james:", 0) == 0) return PrimalSpace{parse_norm_spec(text.substr(6)), true};
    return PrimalSpace{parse_norm_spec(text), false};
}

} // namespace jameslab
