#include "invitelab/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invitelab {

std::vector<std::string> validate_params(const ModelParams& p, bool for_simulation) {
    std::vector<std::string> errs;
    const auto bad = [](double v) { return !std::isfinite(v); };

    if (bad(p.lambda) || p.lambda <= 0.0) errs.push_back("lambda must be > 0");
    if (bad(p.alpha) || p.alpha < 0.0) {
        errs.push_back("alpha must be >= 0");
    } else if (p.alpha >= 1.0) {
        errs.push_back("alpha must be < 1");
    }
    if (bad(p.beta) || p.beta <= 0.0) errs.push_back("beta must be > 0");
    if (bad(p.mu) || p.mu <= 0.0) errs.push_back("mu must be > 0");
    if (bad(p.gamma) || p.gamma <= 0.0) errs.push_back("gamma must be > 0");
    if (bad(p.epsilon) || p.epsilon <= 0.0) errs.push_back("epsilon must be > 0");
    if (bad(p.r) || p.r < 1.0) errs.push_back("r must be >= 1");
    if (for_simulation && !bad(p.gamma) && p.gamma > 0.0 && std::floor(p.gamma) != p.gamma)
        errs.push_back("gamma must be integer for simulation");
    return errs;
}

namespace {

struct FieldSlot {
    const char* name;
    double ModelParams::* member;
};

constexpr FieldSlot kFields[] = {
    {"lambda", &ModelParams::lambda}, {"alpha", &ModelParams::alpha},
    {"beta", &ModelParams::beta},     {"mu", &ModelParams::mu},
    {"gamma", &ModelParams::gamma},   {"epsilon", &ModelParams::epsilon},
    {"r", &ModelParams::r},
};

}  // namespace

ModelParams params_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParamsError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParamsError("parameter file must be a JSON object");

    ModelParams p;
    for (const auto& [key, value] : j.items()) {
        const FieldSlot* slot = nullptr;
        for (const auto& f : kFields)
            if (key == f.name) { slot = &f; break; }
        if (!slot) throw ParamsError("unknown key '" + key + "' in parameter file");
        if (!value.is_number()) throw ParamsError("key '" + key + "' must be a number");
        p.*(slot->member) = value.get<double>();
    }
    for (const auto& f : kFields)
        if (!j.contains(f.name)) throw ParamsError(std::string("missing key '") + f.name + "'");
    return p;
}

ModelParams load_params_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParamsError("cannot read parameter file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return params_from_json(buf.str());
}

std::string params_to_json(const ModelParams& p, int indent) {
    nlohmann::ordered_json j;
    for (const auto& f : kFields) j[f.name] = p.*(f.member);
    return j.dump(indent);
}

}  // namespace invitelab
