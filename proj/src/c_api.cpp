// Copyright 2026 The semiring-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semiring_lab/c_api.h"

#include "semiring_lab/golden.hpp"
#include "semiring_lab/report.hpp"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

struct slab_semiring {
    slab::FiniteSemiring semiring;
    slab::InputDescriptor input;
};

namespace {

thread_local std::string last_error;

slab_status status_of(slab::ErrorCode code) {
    switch (code) {
    case slab::ErrorCode::Parse: return SLAB_ERR_PARSE;
    case slab::ErrorCode::AxiomViolation: return SLAB_ERR_AXIOM;
    case slab::ErrorCode::CapExceeded: return SLAB_ERR_CAP;
    case slab::ErrorCode::BudgetExceeded: return SLAB_ERR_BUDGET;
    case slab::ErrorCode::Io: return SLAB_ERR_IO;
    default: return SLAB_ERR_BAD_PARAMS;
    }
}

template <class F>
slab_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return SLAB_OK;
    } catch (const slab::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return SLAB_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SLAB_ERR_INTERNAL;
    }
}

slab_status null_arg(const char* what) {
    last_error = std::string("null argument: ") + what;
    return SLAB_ERR_NULL;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string render(const slab::ClassificationReport& r, slab_format format) {
    return format == SLAB_FORMAT_TEXT ? slab::to_text(r) : slab::to_json(r).dump(2) + "\n";
}

} // namespace

extern "C" {

const char* slab_version(void) { return "1.0.0"; }

const char* slab_status_name(slab_status status) {
    switch (status) {
    case SLAB_OK: return "ok";
    case SLAB_ERR_PARSE: return "parse";
    case SLAB_ERR_AXIOM: return "axiom_violation";
    case SLAB_ERR_BAD_PARAMS: return "bad_params";
    case SLAB_ERR_CAP: return "cap_exceeded";
    case SLAB_ERR_BUDGET: return "budget_exceeded";
    case SLAB_ERR_IO: return "io";
    case SLAB_ERR_NULL: return "null_argument";
    case SLAB_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* slab_last_error(void) { return last_error.c_str(); }

void slab_string_free(char* s) { std::free(s); }

void slab_classify_options_init(slab_classify_options* options) {
    if (!options) return;
    const slab::ClassifyOptions d;
    options->degree_bound = d.degree_bound;
    options->lattice_cap = d.lattice_cap;
    options->parallel = d.parallel ? 1 : 0;
    options->threads = d.threads;
    options->seed = d.seed;
    options->timing = d.timing ? 1 : 0;
}

slab_status slab_semiring_from_json(const char* json, slab_semiring** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guard([&] {
        const slab::Json j = slab::parse_json(json);
        const bool catalog = j.is_object() && j.contains("family");
        std::string name = catalog ? slab::describe(slab::catalog_spec_from_json(j)) : "";
        *out = new slab_semiring{slab::load_semiring(j), {catalog ? "catalog" : "tables", name}};
    });
}

slab_status slab_semiring_from_file(const char* path, slab_semiring** out) {
    if (!path) return null_arg("path");
    if (!out) return null_arg("out");
    return guard([&] {
        const slab::Json j = slab::parse_json(slab::read_file(path));
        const bool catalog = j.is_object() && j.contains("family");
        *out = new slab_semiring{slab::load_semiring(j), {catalog ? "catalog" : "tables", path}};
    });
}

slab_status slab_semiring_from_catalog(const char* expr, const char* const* keys,
                                       const char* const* values, size_t count, slab_semiring** out) {
    if (!expr) return null_arg("expr");
    if (!out) return null_arg("out");
    if (count > 0 && (!keys || !values)) return null_arg("keys/values");
    return guard([&] {
        std::map<std::string, std::string> params;
        for (size_t k = 0; k < count; ++k) {
            if (!keys[k] || !values[k]) throw slab::BadParams("null parameter entry");
            params[keys[k]] = values[k];
        }
        const slab::CatalogSpec spec = slab::parse_catalog(expr, params);
        *out = new slab_semiring{slab::build_catalog(spec), {"catalog", slab::describe(spec)}};
    });
}

void slab_semiring_free(slab_semiring* s) { delete s; }

size_t slab_semiring_size(const slab_semiring* s) { return s ? s->semiring.size() : 0; }

slab_status slab_semiring_to_json(const slab_semiring* s, char** out) {
    if (!s) return null_arg("semiring");
    if (!out) return null_arg("out");
    return guard([&] { *out = dup(slab::semiring_to_json(s->semiring).dump(2)); });
}

slab_status slab_classify(const slab_semiring* s, const slab_classify_options* options, slab_format format,
                          char** out) {
    if (!s) return null_arg("semiring");
    if (!out) return null_arg("out");
    return guard([&] {
        slab::ClassifyOptions o;
        if (options) {
            o.degree_bound = options->degree_bound;
            o.lattice_cap = options->lattice_cap;
            o.parallel = options->parallel != 0;
            o.threads = options->threads;
            o.seed = options->seed;
            o.timing = options->timing != 0;
        }
        *out = dup(render(slab::classify(s->semiring, s->input, o), format));
    });
}

slab_status slab_report_render(const char* report_json, slab_format format, char** out) {
    if (!report_json) return null_arg("report_json");
    if (!out) return null_arg("out");
    return guard([&] { *out = dup(render(slab::replay_report(slab::parse_json(report_json)), format)); });
}

slab_status slab_golden_suite(const char* filter, int parallel, char** out, int* all_pass) {
    if (!out) return null_arg("out");
    return guard([&] {
        std::vector<std::string> only;
        if (filter) {
            std::string f = filter;
            std::size_t start = 0;
            while (start <= f.size()) {
                const std::size_t comma = f.find(',', start);
                const std::string part = f.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (!part.empty()) only.push_back(part);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        slab::GoldenOptions o;
        o.parallel = parallel != 0;
        const auto rows = slab::run_golden_suite(only, o);
        slab::Json arr = slab::Json::array();
        bool pass = true;
        for (const auto& r : rows) {
            arr.push_back({{"id", r.id},
                           {"description", r.description},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
            pass = pass && r.pass;
        }
        *out = dup(arr.dump(2));
        if (all_pass) *all_pass = pass ? 1 : 0;
    });
}

slab_status slab_golden_row_ids(char** out) {
    if (!out) return null_arg("out");
    return guard([&] { *out = dup(slab::Json(slab::golden_row_ids()).dump()); });
}

} // extern "C"
