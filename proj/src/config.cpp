#include "hamsw/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hamsw/errors.hpp"

namespace hamsw {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + prefix + key + "'");
        }
    }
}

const json& require(const json& obj, const std::string& key, const std::string& prefix) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError("missing key " + prefix + key);
    }
    return *it;
}

double as_real(const json& v, const std::string& name) {
    if (!v.is_number()) {
        throw ConfigError("key '" + name + "' must be a number");
    }
    return v.get<double>();
}

std::size_t as_count(const json& v, const std::string& name) {
    if (!v.is_number_integer()) {
        throw ConfigError("key '" + name + "' must be an integer");
    }
    const auto i = v.get<long long>();
    if (i < 0) {
        throw ConfigError("key '" + name + "' must be non-negative");
    }
    return static_cast<std::size_t>(i);
}

std::string as_string(const json& v, const std::string& name) {
    if (!v.is_string()) {
        throw ConfigError("key '" + name + "' must be a string");
    }
    return v.get<std::string>();
}

double optional_real(const json& obj, const std::string& key, double fallback,
                     const std::string& prefix = "") {
    const auto it = obj.find(key);
    return it == obj.end() ? fallback : as_real(*it, prefix + key);
}

ModelKind parse_model(const std::string& name) {
    if (name == "new") {
        return ModelKind::NewSystem;
    }
    if (name == "gn") {
        return ModelKind::GreenNaghdi;
    }
    if (name == "swe") {
        return ModelKind::ClassicalShallowWater;
    }
    throw ConfigError("key 'model' must be one of new, gn, swe (got '" + name + "')");
}

InitialCondition parse_initial(const json& v) {
    if (!v.is_object()) {
        throw ConfigError("key 'initial' must be an object");
    }
    const std::string type = as_string(require(v, "type", "initial."), "initial.type");
    InitialCondition ic;
    if (type == "rest") {
        reject_unknown(v, {"type"}, "initial.");
        ic.type = InitialCondition::Type::Rest;
    } else if (type == "soliton") {
        reject_unknown(v, {"type", "c", "center"}, "initial.");
        ic.type = InitialCondition::Type::Soliton;
        ic.c = as_real(require(v, "c", "initial."), "initial.c");
        ic.center = optional_real(v, "center", 0.0, "initial.");
        if (!(ic.c > 1.0)) {
            throw ConfigError("initial.c: c must exceed 1");
        }
    } else if (type == "gaussian") {
        reject_unknown(v, {"type", "amplitude", "width", "center"}, "initial.");
        ic.type = InitialCondition::Type::Gaussian;
        ic.amplitude = as_real(require(v, "amplitude", "initial."), "initial.amplitude");
        ic.width = as_real(require(v, "width", "initial."), "initial.width");
        ic.center = optional_real(v, "center", 0.0, "initial.");
    } else {
        throw ConfigError("key 'initial.type' must be one of rest, soliton, gaussian (got '" +
                          type + "')");
    }
    return ic;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    reject_unknown(doc,
                   {"model", "n", "length", "t_end", "x0", "dt", "snapshot_every", "initial", "cfl",
                    "viscosity", "blowup_threshold", "momentum_form", "speeds", "levels"},
                   "");

    ExperimentConfig cfg;
    RunConfig& run = cfg.run;
    run.model = parse_model(as_string(require(doc, "model", ""), "model"));
    run.n = as_count(require(doc, "n", ""), "n");
    run.length = as_real(require(doc, "length", ""), "length");
    run.t_end = as_real(require(doc, "t_end", ""), "t_end");
    run.x0 = optional_real(doc, "x0", -0.5 * run.length);
    run.snapshot_every = optional_real(doc, "snapshot_every", run.t_end);
    run.cfl = optional_real(doc, "cfl", 0.4);
    run.viscosity = optional_real(doc, "viscosity", 0.0);
    run.blowup_threshold = optional_real(doc, "blowup_threshold", 1e3);

    if (const auto it = doc.find("dt"); it != doc.end()) {
        if (it->is_string()) {
            if (it->get<std::string>() != "auto") {
                throw ConfigError("key 'dt' must be a number or \"auto\"");
            }
        } else {
            run.dt = as_real(*it, "dt");
        }
    }
    if (const auto it = doc.find("initial"); it != doc.end()) {
        run.initial = parse_initial(*it);
    }
    if (const auto it = doc.find("momentum_form"); it != doc.end()) {
        const std::string form = as_string(*it, "momentum_form");
        if (form == "skew") {
            run.momentum_form = MomentumForm::SkewAdjoint;
        } else if (form == "flux") {
            run.momentum_form = MomentumForm::Flux;
        } else {
            throw ConfigError("key 'momentum_form' must be skew or flux");
        }
    }
    if (const auto it = doc.find("speeds"); it != doc.end()) {
        if (!it->is_array() || it->empty()) {
            throw ConfigError("key 'speeds' must be a non-empty array");
        }
        cfg.speeds.clear();
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string name = "speeds[" + std::to_string(i) + "]";
            const double c = as_real((*it)[i], name);
            if (!(c > 1.0)) {
                throw ConfigError(name + ": c must exceed 1");
            }
            cfg.speeds.push_back(c);
        }
    }
    if (const auto it = doc.find("levels"); it != doc.end()) {
        cfg.levels = as_count(*it, "levels");
        if (cfg.levels < 2) {
            throw ConfigError("key 'levels' must be at least 2");
        }
    }

    run.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string to_json(const ExperimentConfig& cfg) {
    const RunConfig& r = cfg.run;
    json doc;
    doc["model"] = std::string(to_string(r.model));
    doc["n"] = r.n;
    doc["length"] = r.length;
    doc["x0"] = r.x0;
    doc["t_end"] = r.t_end;
    doc["snapshot_every"] = r.snapshot_every;
    if (r.dt) {
        doc["dt"] = *r.dt;
    } else {
        doc["dt"] = "auto";
    }
    doc["cfl"] = r.cfl;
    doc["viscosity"] = r.viscosity;
    doc["blowup_threshold"] = r.blowup_threshold;
    doc["momentum_form"] = r.momentum_form == MomentumForm::Flux ? "flux" : "skew";
    json ic;
    switch (r.initial.type) {
        case InitialCondition::Type::Rest:
            ic["type"] = "rest";
            break;
        case InitialCondition::Type::Soliton:
            ic["type"] = "soliton";
            ic["c"] = r.initial.c;
            ic["center"] = r.initial.center;
            break;
        case InitialCondition::Type::Gaussian:
            ic["type"] = "gaussian";
            ic["amplitude"] = r.initial.amplitude;
            ic["width"] = r.initial.width;
            ic["center"] = r.initial.center;
            break;
    }
    doc["initial"] = ic;
    doc["speeds"] = cfg.speeds;
    doc["levels"] = cfg.levels;
    return doc.dump(2);
}

}  // namespace hamsw
