// SPDX-License-Identifier: Apache-2.0
//
// fdamimo: adaptive target detection for FDA-MIMO radar with training data.
// Copyright (C) 2026 The fdamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fdamimo/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fdamimo {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ConfigError(path + ": " + what);
}

std::string join(const std::string& base, const std::string& key)
{
    return base.empty() ? key : base + "." + key;
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed)
{
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!keys.count(it.key())) fail(join(path, it.key()), "unknown key");
    }
}

const json* member(const json& obj, const std::string& path, const char* key, json::value_t type)
{
    if (!obj.contains(key)) return nullptr;
    const json& v = obj.at(key);
    if (type == json::value_t::number_float) {
        if (!v.is_number()) fail(join(path, key), "expected a number");
    } else if (type == json::value_t::number_unsigned) {
        if (!v.is_number_integer()) fail(join(path, key), "expected an integer");
    } else if (type == json::value_t::object) {
        if (!v.is_object()) fail(join(path, key), "expected an object");
    } else if (type == json::value_t::array) {
        if (!v.is_array()) fail(join(path, key), "expected a list");
    } else if (type == json::value_t::string) {
        if (!v.is_string()) fail(join(path, key), "expected a string");
    } else if (type == json::value_t::boolean) {
        if (!v.is_boolean()) fail(join(path, key), "expected true or false");
    }
    return &v;
}

double number(const json& obj, const std::string& path, const char* key, double fallback)
{
    const json* v = member(obj, path, key, json::value_t::number_float);
    if (!v) return fallback;
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(join(path, key), "must be finite");
    return x;
}

long integer(const json& obj, const std::string& path, const char* key, std::optional<long> fallback)
{
    const json* v = member(obj, path, key, json::value_t::number_unsigned);
    if (!v) {
        if (!fallback) fail(join(path, key), "required field is missing");
        return *fallback;
    }
    return v->get<long>();
}

const json& section(const json& root, const char* key, const json& empty)
{
    const json* v = member(root, "", key, json::value_t::object);
    return v ? *v : empty;
}

template <class Enum>
Enum choice(const json& obj, const std::string& path, const char* key, Enum fallback,
            std::initializer_list<std::pair<const char*, Enum>> options)
{
    const json* v = member(obj, path, key, json::value_t::string);
    if (!v) return fallback;
    const std::string s = v->get<std::string>();
    std::string allowed;
    for (const auto& [name, value] : options) {
        if (s == name) return value;
        allowed += allowed.empty() ? name : std::string(", ") + name;
    }
    fail(join(path, key), "'" + s + "' is not one of " + allowed);
}

std::vector<Jammer> parse_jammers(const json& list)
{
    std::vector<Jammer> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "jammers[" + std::to_string(i) + "]";
        const json& j = list[i];
        if (!j.is_object()) fail(path, "expected an object");
        reject_unknown(j, path, {"kind", "range_m", "angle_deg", "jnr_db"});
        const JammerKind kind = choice(j, path, "kind", JammerKind::deceptive,
                                       {{"deceptive", JammerKind::deceptive}, {"suppressive", JammerKind::suppressive}});
        if (!j.contains("kind")) fail(join(path, "kind"), "required field is missing");
        if (!j.contains("angle_deg")) fail(join(path, "angle_deg"), "required field is missing");
        if (!j.contains("jnr_db")) fail(join(path, "jnr_db"), "required field is missing");
        const double angle = number(j, path, "angle_deg", 0.0);
        if (!(std::abs(angle) < 90.0)) fail(join(path, "angle_deg"), "must lie in (-90, 90)");
        const double jnr = number(j, path, "jnr_db", 0.0);
        if (kind == JammerKind::deceptive) {
            if (!j.contains("range_m")) fail(join(path, "range_m"), "required for a deceptive jammer");
            const double range = number(j, path, "range_m", 0.0);
            if (!(range >= 0.0)) fail(join(path, "range_m"), "must be >= 0");
            out.push_back(Jammer::deceptive(range, deg_to_rad(angle), jnr));
        } else {
            if (j.contains("range_m")) fail(join(path, "range_m"), "a suppressive jammer has no range");
            out.push_back(Jammer::suppressive(deg_to_rad(angle), jnr));
        }
    }
    return out;
}

std::vector<double> parse_grid(const json& list, const std::string& path)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!list[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(list[i].get<double>());
    }
    return out;
}

unsigned workers_from_json(const json& mc)
{
    if (!mc.contains("workers")) return 0;
    const json& w = mc.at("workers");
    if (w.is_string()) {
        try {
            return parse_workers(w.get<std::string>());
        } catch (const ArgumentError& e) {
            fail("mc.workers", e.what());
        }
    }
    if (!w.is_number_integer() || w.get<long>() < 1) fail("mc.workers", "expected \"auto\" or a positive integer");
    return static_cast<unsigned>(w.get<long>());
}

} // namespace

std::string_view to_string(SweepKind kind)
{
    switch (kind) {
    case SweepKind::snr: return "snr";
    case SweepKind::pfa: return "pfa";
    case SweepKind::mismatch: return "mismatch";
    case SweepKind::fda_vs_mimo: return "fda_vs_mimo";
    }
    return "?";
}

unsigned parse_workers(const std::string& text)
{
    if (text == "auto") return 0;
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || n < 1) throw ArgumentError("workers: expected \"auto\" or a positive integer");
    return static_cast<unsigned>(n);
}

ExperimentConfig parse_config(const std::string& json_text, const Overrides& overrides)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!root.is_object()) fail("config", "top level must be an object");
    reject_unknown(root, "", {"array", "waveform", "training", "target", "jammers", "noise_power", "mc", "detectors",
                              "sweep", "mismatch", "options", "validate"});
    const json empty = json::object();
    ExperimentConfig cfg;
    Scenario& sc = cfg.scenario;

    const json& array = section(root, "array", empty);
    reject_unknown(array, "array", {"m", "n", "f0_hz", "delta_f_hz", "d_t_m", "d_r_m"});
    const long m = integer(array, "array", "m", 4);
    const long n = integer(array, "array", "n", 3);
    if (m < 1) fail("array.m", "must be >= 1");
    if (n < 1) fail("array.n", "must be >= 1");
    const double f0 = number(array, "array", "f0_hz", 2.0e9);
    if (!(f0 > 0.0)) fail("array.f0_hz", "must be positive");
    sc.array = ArrayConfig::half_wavelength(static_cast<int>(m), static_cast<int>(n), f0,
                                            number(array, "array", "delta_f_hz", 1.0e6));
    sc.array.d_t = number(array, "array", "d_t_m", sc.array.d_t);
    sc.array.d_r = number(array, "array", "d_r_m", sc.array.d_r);

    if (!root.contains("waveform")) fail("waveform.k_snapshots", "required field is missing");
    const json& waveform = section(root, "waveform", empty);
    reject_unknown(waveform, "waveform", {"k_snapshots", "f_d"});
    const long k = integer(waveform, "waveform", "k_snapshots", std::nullopt);
    if (k < 1) fail("waveform.k_snapshots", "must be >= 1");
    sc.k_snapshots = static_cast<int>(k);
    sc.f_d = number(waveform, "waveform", "f_d", 0.2);

    if (!root.contains("training")) fail("training.l_cells", "required field is missing");
    const json& training = section(root, "training", empty);
    reject_unknown(training, "training", {"l_cells"});
    const long l = integer(training, "training", "l_cells", std::nullopt);
    if (l < 1) fail("training.l_cells", "must be >= 1");
    sc.l_cells = static_cast<int>(l);

    const json& target = section(root, "target", empty);
    reject_unknown(target, "target", {"range_m", "angle_deg"});
    sc.target_range = number(target, "target", "range_m", 15.12e3);
    const double angle = number(target, "target", "angle_deg", 30.0);
    if (!(std::abs(angle) < 90.0)) fail("target.angle_deg", "must lie in (-90, 90)");
    sc.target_angle = deg_to_rad(angle);

    if (const json* jl = member(root, "", "jammers", json::value_t::array)) {
        sc.jammers = parse_jammers(*jl);
    } else {
        sc.jammers = Scenario::jamming_defaults(sc.l_cells, sc.k_snapshots).jammers;
    }
    sc.noise_power = number(root, "", "noise_power", 1.0);

    const json& mc = section(root, "mc", empty);
    reject_unknown(mc, "mc", {"pfa", "trials_threshold", "trials_pd", "seed", "workers"});
    cfg.mc.pfa = number(mc, "mc", "pfa", 1e-3);
    const long tt = integer(mc, "mc", "trials_threshold", 0);
    const long tp = integer(mc, "mc", "trials_pd", 10000);
    if (tt < 0) fail("mc.trials_threshold", "must be >= 0");
    if (tp < 1) fail("mc.trials_pd", "must be >= 1");
    cfg.mc.trials_threshold = static_cast<std::size_t>(tt);
    cfg.mc.trials_pd = static_cast<std::size_t>(tp);
    if (const json* s = member(mc, "mc", "seed", json::value_t::number_unsigned)) {
        if (s->is_number_integer() && !s->is_number_unsigned() && s->get<long>() < 0) fail("mc.seed", "must be >= 0");
        cfg.mc.seed = s->get<std::uint64_t>();
    }
    cfg.mc.workers = workers_from_json(mc);

    if (const json* d = member(root, "", "detectors", json::value_t::array)) {
        if (d->empty()) fail("detectors", "list is empty");
        cfg.options.detectors.clear();
        for (std::size_t i = 0; i < d->size(); ++i) {
            const std::string path = "detectors[" + std::to_string(i) + "]";
            if (!(*d)[i].is_string()) fail(path, "expected a detector name");
            try {
                cfg.options.detectors.push_back(parse_detector((*d)[i].get<std::string>()));
            } catch (const ArgumentError& e) {
                fail(path, e.what());
            }
        }
    }

    const json& sweep = section(root, "sweep", empty);
    reject_unknown(sweep, "sweep", {"kind", "grid"});
    if (sweep.contains("kind")) {
        cfg.sweep_kind = choice(sweep, "sweep", "kind", SweepKind::snr,
                                {{"snr", SweepKind::snr},
                                 {"pfa", SweepKind::pfa},
                                 {"mismatch", SweepKind::mismatch},
                                 {"fda_vs_mimo", SweepKind::fda_vs_mimo}});
    }
    if (const json* g = member(sweep, "sweep", "grid", json::value_t::array)) {
        cfg.grid = parse_grid(*g, "sweep.grid");
        if (cfg.grid.empty()) fail("sweep.grid", "list is empty");
    }

    const json& mismatch = section(root, "mismatch", empty);
    reject_unknown(mismatch, "mismatch", {"cos2_spatial", "cos2_doppler"});
    cfg.cos2_spatial = number(mismatch, "mismatch", "cos2_spatial", 1.0);
    cfg.cos2_doppler = number(mismatch, "mismatch", "cos2_doppler", 1.0);
    if (!(cfg.cos2_spatial > 0.0 && cfg.cos2_spatial <= 1.0)) fail("mismatch.cos2_spatial", "must lie in (0, 1]");
    if (!(cfg.cos2_doppler > 0.0 && cfg.cos2_doppler <= 1.0)) fail("mismatch.cos2_doppler", "must lie in (0, 1]");

    const json& options = section(root, "options", empty);
    reject_unknown(options, "options", {"thresholds", "closed_form", "dof", "glrt_no_form"});
    cfg.options.thresholds = choice(options, "options", "thresholds", ThresholdSource::monte_carlo,
                                    {{"monte_carlo", ThresholdSource::monte_carlo},
                                     {"closed_form", ThresholdSource::closed_form}});
    if (const json* cf = member(options, "options", "closed_form", json::value_t::boolean)) {
        cfg.options.closed_form = cf->get<bool>();
    }
    cfg.options.dof = choice(options, "options", "dof", DofConvention::exact,
                             {{"exact", DofConvention::exact}, {"printed", DofConvention::printed}});
    cfg.options.glrt_no_form = choice(options, "options", "glrt_no_form", GlrtNoForm::plain,
                                      {{"plain", GlrtNoForm::plain}, {"whitened", GlrtNoForm::whitened}});

    const json& validate = section(root, "validate", empty);
    reject_unknown(validate, "validate", {"tolerance"});
    cfg.validate_tolerance = number(validate, "validate", "tolerance", 0.02);
    if (!(cfg.validate_tolerance > 0.0)) fail("validate.tolerance", "must be positive");

    if (overrides.seed) cfg.mc.seed = *overrides.seed;
    if (overrides.pfa) cfg.mc.pfa = *overrides.pfa;
    if (overrides.workers) cfg.mc.workers = *overrides.workers;

    try {
        sc.validate();
        cfg.mc.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path, const Overrides& overrides)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides);
}

std::string resolved_json(const ExperimentConfig& cfg)
{
    const Scenario& sc = cfg.scenario;
    json j;
    j["array"] = {{"m", sc.array.m_tx},           {"n", sc.array.n_rx},   {"f0_hz", sc.array.f0},
                  {"delta_f_hz", sc.array.delta_f}, {"d_t_m", sc.array.d_t}, {"d_r_m", sc.array.d_r}};
    j["waveform"] = {{"k_snapshots", sc.k_snapshots}, {"f_d", sc.f_d}};
    j["training"] = {{"l_cells", sc.l_cells}};
    j["target"] = {{"range_m", sc.target_range}, {"angle_deg", sc.target_angle * 180.0 / kPi}};
    j["jammers"] = json::array();
    for (const Jammer& jm : sc.jammers) {
        json e = {{"kind", jm.kind == JammerKind::deceptive ? "deceptive" : "suppressive"},
                  {"angle_deg", jm.angle * 180.0 / kPi},
                  {"jnr_db", jm.jnr_db}};
        if (jm.kind == JammerKind::deceptive) e["range_m"] = jm.range;
        j["jammers"].push_back(e);
    }
    j["noise_power"] = sc.noise_power;
    // workers is left out: it never changes results.
    j["mc"] = {{"pfa", cfg.mc.pfa},
               {"trials_threshold", cfg.mc.threshold_trials()},
               {"trials_pd", cfg.mc.trials_pd},
               {"seed", cfg.mc.seed}};
    j["detectors"] = json::array();
    for (DetectorKind d : cfg.options.detectors) j["detectors"].push_back(std::string(to_string(d)));
    if (cfg.sweep_kind) j["sweep"]["kind"] = std::string(to_string(*cfg.sweep_kind));
    j["sweep"]["grid"] = cfg.grid;
    j["mismatch"] = {{"cos2_spatial", cfg.cos2_spatial}, {"cos2_doppler", cfg.cos2_doppler}};
    j["options"] = {
        {"thresholds", cfg.options.thresholds == ThresholdSource::closed_form ? "closed_form" : "monte_carlo"},
        {"closed_form", cfg.options.closed_form},
        {"dof", cfg.options.dof == DofConvention::exact ? "exact" : "printed"},
        {"glrt_no_form", cfg.options.glrt_no_form == GlrtNoForm::plain ? "plain" : "whitened"}};
    j["validate"] = {{"tolerance", cfg.validate_tolerance}};
    return j.dump(2) + "\n";
}

} // namespace fdamimo
