/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "hexplace.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "engine.hpp"
#include "presets.hpp"
#include "scenario.hpp"
#include "stats.hpp"

struct hxp_scenario {
    hexplace::ScenarioConfig config;
};

struct hxp_result {
    hexplace::RunResult run;
};

namespace {

thread_local std::string t_last_error;

hxp_status fail(hxp_status status, std::string message) {
    t_last_error = std::move(message);
    return status;
}

// Runs the body under a catch-all so exceptions never cross the C boundary.
template <typename Body>
hxp_status guarded(Body&& body) {
    try {
        return body();
    } catch (const hexplace::ParseError& e) {
        return fail(HXP_ERROR_PARSE, e.what());
    } catch (const hexplace::ValidationError& e) {
        return fail(HXP_ERROR_VALIDATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HXP_ERROR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(HXP_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(HXP_ERROR_INTERNAL, "unknown error");
    }
}

// C-heap copy so callers release strings with hxp_string_free alone.
hxp_status copy_out(const std::string& text, char** out) {
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) return fail(HXP_ERROR_OUT_OF_MEMORY, "out of memory");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
    return HXP_OK;
}

}  // namespace

extern "C" {

const char* hxp_version_string(void) { return "1.0.0"; }

const char* hxp_status_name(hxp_status status) {
    switch (status) {
        case HXP_OK: return "HXP_OK";
        case HXP_ERROR_INVALID_ARGUMENT: return "HXP_ERROR_INVALID_ARGUMENT";
        case HXP_ERROR_PARSE: return "HXP_ERROR_PARSE";
        case HXP_ERROR_VALIDATION: return "HXP_ERROR_VALIDATION";
        case HXP_ERROR_UNKNOWN_PRESET: return "HXP_ERROR_UNKNOWN_PRESET";
        case HXP_ERROR_OUT_OF_MEMORY: return "HXP_ERROR_OUT_OF_MEMORY";
        case HXP_ERROR_INTERNAL: return "HXP_ERROR_INTERNAL";
    }
    return "HXP_ERROR_INTERNAL";
}

const char* hxp_last_error_message(void) { return t_last_error.c_str(); }

hxp_status hxp_scenario_parse(const char* json_text, hxp_scenario** out_scenario) {
    if (json_text == nullptr || out_scenario == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        auto scenario = std::make_unique<hxp_scenario>();
        scenario->config = hexplace::parse_scenario(json_text);
        *out_scenario = scenario.release();
        return HXP_OK;
    });
}

hxp_status hxp_scenario_from_preset(const char* name, hxp_scenario** out_scenario) {
    if (name == nullptr || out_scenario == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&]() -> hxp_status {
        auto config = hexplace::make_preset(name);
        if (!config.has_value()) {
            std::ostringstream message;
            message << "unknown preset '" << name << "'; valid presets:";
            for (const std::string_view candidate : hexplace::preset_names()) {
                message << ' ' << candidate;
            }
            return fail(HXP_ERROR_UNKNOWN_PRESET, message.str());
        }
        auto scenario = std::make_unique<hxp_scenario>();
        scenario->config = *std::move(config);
        *out_scenario = scenario.release();
        return HXP_OK;
    });
}

size_t hxp_preset_count(void) { return hexplace::preset_names().size(); }

const char* hxp_preset_name(size_t index) {
    const auto names = hexplace::preset_names();
    // Preset names are whole string literals, so data() is NUL-terminated.
    return index < names.size() ? names[index].data() : nullptr;
}

hxp_status hxp_scenario_to_json(const hxp_scenario* scenario, char** out_json) {
    if (scenario == nullptr || out_json == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] { return copy_out(hexplace::write_scenario(scenario->config), out_json); });
}

hxp_status hxp_scenario_set_max_steps(hxp_scenario* scenario, uint64_t max_steps) {
    if (scenario == nullptr) return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    if (max_steps == 0) return fail(HXP_ERROR_INVALID_ARGUMENT, "max_steps must be at least 1");
    scenario->config.max_steps = max_steps;
    return HXP_OK;
}

void hxp_scenario_free(hxp_scenario* scenario) { delete scenario; }

hxp_status hxp_run(const hxp_scenario* scenario, uint64_t seed, hxp_result** out_result) {
    if (scenario == nullptr || out_result == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        auto result = std::make_unique<hxp_result>();
        result->run = hexplace::run(scenario->config, seed);
        *out_result = result.release();
        return HXP_OK;
    });
}

hxp_status hxp_result_summary(const hxp_result* result, hxp_summary* out_summary) {
    if (result == nullptr || out_summary == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    const hexplace::Summary& summary = result->run.summary;
    out_summary->initial_population = summary.initial_population;
    out_summary->simulation_period = summary.simulation_period;
    out_summary->total_immune = summary.total_immune;
    out_summary->total_dead = summary.total_dead;
    out_summary->truncated = summary.truncated ? 1 : 0;
    return HXP_OK;
}

hxp_status hxp_result_timeseries_csv(const hxp_result* result, char** out_csv) {
    if (result == nullptr || out_csv == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] {
        std::ostringstream sink;
        hexplace::write_timeseries(result->run.timeseries, result->run.region_ids, sink);
        return copy_out(sink.str(), out_csv);
    });
}

hxp_status hxp_result_summary_json(const hxp_result* result, char** out_json) {
    if (result == nullptr || out_json == nullptr) {
        return fail(HXP_ERROR_INVALID_ARGUMENT, "NULL argument");
    }
    return guarded([&] { return copy_out(hexplace::summary_to_json(result->run.summary), out_json); });
}

void hxp_result_free(hxp_result* result) { delete result; }

void hxp_string_free(char* text) { std::free(text); }

}  // extern "C"
