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

// semiring-lab classify | verify-paper | report
//
// Exit codes: 0 success, 1 golden mismatch, 2 input error.

#include "semiring_lab/c_api.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Failure {
    int code;
    std::string message;
};

using OwnedString = std::unique_ptr<char, decltype(&slab_string_free)>;
using OwnedSemiring = std::unique_ptr<slab_semiring, decltype(&slab_semiring_free)>;

void check(slab_status st, const std::string& context) {
    if (st == SLAB_OK) return;
    const int code = (st == SLAB_ERR_INTERNAL) ? kMismatch : kInputError;
    throw Failure{code, context + ": " + slab_status_name(st) + ": " + slab_last_error()};
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInputError, "cannot read " + path};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Failure{kInputError, "cannot write " + out_path};
    out << text;
}

slab_format parse_format(const std::string& f) { return f == "text" ? SLAB_FORMAT_TEXT : SLAB_FORMAT_JSON; }

struct InputArgs {
    std::string catalog;
    std::string input;
    std::vector<std::string> params;
};

OwnedSemiring load(const InputArgs& a) {
    slab_semiring* raw = nullptr;
    if (!a.catalog.empty()) {
        std::vector<std::string> keys, values;
        for (const auto& p : a.params) {
            const auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0) throw Failure{kInputError, "--param expects key=value, got " + p};
            keys.push_back(p.substr(0, eq));
            values.push_back(p.substr(eq + 1));
        }
        std::vector<const char*> kp, vp;
        for (std::size_t k = 0; k < keys.size(); ++k) {
            kp.push_back(keys[k].c_str());
            vp.push_back(values[k].c_str());
        }
        check(slab_semiring_from_catalog(a.catalog.c_str(), kp.data(), vp.data(), kp.size(), &raw), "catalog");
    } else if (!a.input.empty()) {
        if (!a.params.empty()) throw Failure{kInputError, "--param applies to --catalog only"};
        check(slab_semiring_from_file(a.input.c_str(), &raw), a.input);
    } else {
        throw Failure{kInputError, "one of --catalog or --input is required"};
    }
    return OwnedSemiring(raw, &slab_semiring_free);
}

void add_input_flags(CLI::App* cmd, InputArgs& a) {
    auto* cat = cmd->add_option("--catalog", a.catalog, "Catalog family, e.g. nil_chain or b_n_i(4,2)");
    auto* in = cmd->add_option("--input", a.input, "JSON file with tables or a catalog document");
    cat->excludes(in);
    cmd->add_option("--param", a.params, "Catalog parameter key=value (n, i, k, factors)");
}

struct ClassifyArgs {
    unsigned degree_bound = 3;
    std::size_t lattice_cap = 12;
    bool parallel = false;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool timing = false;
};

void add_classify_flags(CLI::App* cmd, ClassifyArgs& c) {
    cmd->add_option("--degree-bound", c.degree_bound, "Degree bound D for bounded sweeps")
        ->check(CLI::Range(1u, 8u));
    cmd->add_option("--lattice-cap", c.lattice_cap, "Largest |S| for ideal lattice enumeration")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd->add_flag("--parallel", c.parallel, "Run sweeps on several threads");
    cmd->add_option("--threads", c.threads, "Thread count for --parallel (0 = hardware)");
    cmd->add_option("--seed", c.seed, "Seed recorded for sampled sweeps");
    cmd->add_flag("--timing", c.timing, "Record wall-clock time in the report");
}

slab_classify_options to_options(const ClassifyArgs& c) {
    slab_classify_options o;
    slab_classify_options_init(&o);
    o.degree_bound = c.degree_bound;
    o.lattice_cap = c.lattice_cap;
    o.parallel = c.parallel ? 1 : 0;
    o.threads = c.threads;
    o.seed = c.seed;
    o.timing = c.timing ? 1 : 0;
    return o;
}

std::string golden_table(const nlohmann::json& rows, bool& all_pass) {
    std::ostringstream os;
    std::size_t passed = 0;
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r["id"].get<std::string>().size());
    for (const auto& r : rows) {
        const bool ok = r["pass"].get<bool>();
        passed += ok ? 1 : 0;
        const std::string id = r["id"];
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3fs", r["seconds"].get<double>());
        os << (ok ? "PASS  " : "FAIL  ") << id << std::string(width - id.size() + 2, ' ')
           << r["description"].get<std::string>() << "  [" << secs << "]\n";
        const std::string detail = r["detail"];
        if (!detail.empty()) os << "      " << detail << '\n';
    }
    all_pass = passed == rows.size();
    os << passed << "/" << rows.size() << " rows pass\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring-lab: finite semiring ideal theory and content verdicts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(slab_version()));

    std::string format = "json";
    std::string out_path;

    InputArgs classify_in;
    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "Classify a semiring and print its report");
    add_input_flags(classify, classify_in);
    add_classify_flags(classify, classify_args);
    classify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    classify->add_option("-o,--output", out_path, "Write the report to a file");

    std::vector<std::string> rows;
    bool golden_parallel = false;
    bool list_rows = false;
    std::string golden_format = "text";
    auto* verify = app.add_subcommand("verify-paper", "Replay every golden example and the acceptance gate");
    verify->add_option("--row", rows, "Run only rows whose id starts with this prefix");
    verify->add_flag("--parallel", golden_parallel, "Run sweeps on several threads");
    verify->add_flag("--list", list_rows, "List row ids and exit");
    verify->add_option("--format", golden_format, "text or json")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("-o,--output", out_path, "Write the table to a file");

    InputArgs report_in;
    ClassifyArgs report_args;
    auto* report = app.add_subcommand("report", "Serialize a report; --input may also be a saved JSON report");
    add_input_flags(report, report_in);
    add_classify_flags(report, report_args);
    report->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    report->add_option("-o,--output", out_path, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (classify->parsed() || report->parsed()) {
            const InputArgs& in = classify->parsed() ? classify_in : report_in;
            const ClassifyArgs& ca = classify->parsed() ? classify_args : report_args;
            char* text = nullptr;
            bool replay = false;
            if (report->parsed() && !in.input.empty()) {
                const std::string content = read_text(in.input);
                const auto j = nlohmann::json::parse(content, nullptr, false);
                replay = !j.is_discarded() && j.is_object() && j.contains("schema");
                if (replay) check(slab_report_render(content.c_str(), parse_format(format), &text), in.input);
            }
            if (!replay) {
                OwnedSemiring s = load(in);
                const slab_classify_options o = to_options(ca);
                check(slab_classify(s.get(), &o, parse_format(format), &text), "classify");
            }
            OwnedString owned(text, &slab_string_free);
            emit(owned.get(), out_path);
            return 0;
        }

        if (verify->parsed()) {
            char* text = nullptr;
            if (list_rows) {
                check(slab_golden_row_ids(&text), "verify-paper");
                OwnedString owned(text, &slab_string_free);
                std::string lines;
                for (const auto& id : nlohmann::json::parse(owned.get())) lines += id.get<std::string>() + "\n";
                emit(lines, out_path);
                return 0;
            }
            std::string filter;
            for (const auto& r : rows) filter += (filter.empty() ? "" : ",") + r;
            int all_pass = 0;
            check(slab_golden_suite(rows.empty() ? nullptr : filter.c_str(), golden_parallel ? 1 : 0, &text,
                                    &all_pass),
                  "verify-paper");
            OwnedString owned(text, &slab_string_free);
            bool pass = all_pass != 0;
            if (golden_format == "json") {
                emit(owned.get(), out_path);
            } else {
                emit(golden_table(nlohmann::json::parse(owned.get()), pass), out_path);
            }
            return pass ? 0 : kMismatch;
        }
    } catch (const Failure& f) {
        std::cerr << "semiring-lab: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "semiring-lab: " << e.what() << '\n';
        return kInputError;
    }
    return 0;
}
