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

#include "semiring_lab/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace slab {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (e.is_string()) out.push_back(e.get<std::string>());
        else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
        else throw ParseError(std::string(what) + " entries must be strings");
    }
    return out;
}

std::vector<std::vector<long long>> table(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<long long>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
            r.push_back(v.get<long long>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

long long integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Json table_json(std::size_t rows, std::size_t cols, const std::function<Elem(Elem, Elem)>& op) {
    Json t = Json::array();
    for (std::size_t a = 0; a < rows; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < cols; ++b) row.push_back(op(static_cast<Elem>(a), static_cast<Elem>(b)));
        t.push_back(std::move(row));
    }
    return t;
}

Elem coefficient(const FiniteSemiring& s, const Json& c) {
    if (c.is_string()) {
        auto e = s.find(c.get<std::string>());
        if (!e) throw ParseError("unknown coefficient label \"" + c.get<std::string>() + "\"");
        return *e;
    }
    if (c.is_number_integer()) {
        const long long v = c.get<long long>();
        if (v < 0 || v >= static_cast<long long>(s.size())) throw ParseError("coefficient index out of range");
        return static_cast<Elem>(v);
    }
    throw ParseError("coefficient must be a label or an index");
}

Monomial monomial(const Json& j) {
    if (!j.is_object()) throw ParseError("monomial must be an object");
    Monomial m;
    for (const auto& [name, e] : j.items()) m.multiply(name, static_cast<int>(integer(e, "exponent")));
    return m;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

Family family_named(const std::string& name) {
    for (auto f : {Family::Boolean, Family::ChainLattice, Family::PowerSetLattice, Family::ChainC,
                   Family::LaGrassa, Family::BNI, Family::Truncation, Family::NilChain,
                   Family::IdempotentMonoidExt, Family::Product}) {
        if (lower(name) == lower(to_string(f))) return f;
    }
    throw ParseError("unknown catalog family \"" + name + "\"");
}

// Recursive-descent parser for catalog expressions.
class ExprParser {
public:
    explicit ExprParser(std::string text) : t_(std::move(text)) {}

    CatalogSpec parse_all() {
        CatalogSpec s = parse();
        skip();
        if (p_ != t_.size()) fail("trailing characters");
        return s;
    }

    std::vector<CatalogSpec> parse_list() {
        std::vector<CatalogSpec> out{parse()};
        for (skip(); p_ < t_.size() && t_[p_] == ','; skip()) {
            ++p_;
            out.push_back(parse());
        }
        skip();
        if (p_ != t_.size()) fail("trailing characters");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("catalog expression \"" + t_ + "\": " + why);
    }
    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    std::string ident() {
        skip();
        const std::size_t start = p_;
        while (p_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[p_])) || t_[p_] == '_')) ++p_;
        if (start == p_) fail("expected a name");
        return t_.substr(start, p_ - start);
    }
    int number() {
        skip();
        const std::size_t start = p_;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
        if (start == p_) fail("expected an integer");
        return std::stoi(t_.substr(start, p_ - start));
    }
    void expect(char c) {
        skip();
        if (p_ >= t_.size() || t_[p_] != c) fail(std::string("expected '") + c + "'");
        ++p_;
    }
    bool peek(char c) {
        skip();
        return p_ < t_.size() && t_[p_] == c;
    }

    CatalogSpec parse() {
        const Family f = family_named(ident());
        CatalogSpec s = CatalogSpec::make(f);
        if (!peek('(')) return s;
        expect('(');
        switch (f) {
        case Family::ChainLattice:
        case Family::PowerSetLattice:
        case Family::NilChain:
            s.n = number();
            break;
        case Family::BNI:
            s.n = number();
            expect(',');
            s.i = number();
            break;
        case Family::Truncation:
            s.k = number();
            break;
        case Family::Product:
            s.factors.push_back(parse());
            while (peek(',')) {
                expect(',');
                s.factors.push_back(parse());
            }
            break;
        case Family::IdempotentMonoidExt: {
            // The printed form lists the default monoid; any content is accepted.
            int depth = 1;
            while (p_ < t_.size() && depth > 0) {
                if (t_[p_] == '(') ++depth;
                if (t_[p_] == ')') --depth;
                if (depth > 0) ++p_;
            }
            break;
        }
        default:
            break;
        }
        expect(')');
        return s;
    }

    std::string t_;
    std::size_t p_ = 0;
};

int int_param(const std::map<std::string, std::string>& params, const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw BadParams(std::string("missing parameter ") + key);
    try {
        std::size_t used = 0;
        const int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("parameter ") + key + " must be an integer");
    }
}

} // namespace

Json semiring_to_json(const FiniteSemiring& s) {
    Json j;
    j["elements"] = s.labels();
    j["add"] = table_json(s.size(), s.size(), [&](Elem a, Elem b) { return s.add(a, b); });
    j["mul"] = table_json(s.size(), s.size(), [&](Elem a, Elem b) { return s.mul(a, b); });
    j["zero"] = s.zero();
    j["one"] = s.one();
    return j;
}

FiniteSemiring semiring_from_json(const Json& j) {
    RawTables t;
    t.elements = string_list(field(j, "elements"), "elements");
    t.add = table(field(j, "add"), "add");
    t.mul = table(field(j, "mul"), "mul");
    t.zero = integer(field(j, "zero"), "zero");
    t.one = integer(field(j, "one"), "one");
    return FiniteSemiring::create(t);
}

Json catalog_spec_to_json(const CatalogSpec& spec) {
    Json j;
    j["family"] = to_string(spec.family);
    Json params = Json::object();
    switch (spec.family) {
    case Family::ChainLattice:
    case Family::PowerSetLattice:
    case Family::NilChain:
        params["n"] = spec.n;
        break;
    case Family::BNI:
        params["n"] = spec.n;
        params["i"] = spec.i;
        break;
    case Family::Truncation:
        params["k"] = spec.k;
        break;
    case Family::IdempotentMonoidExt:
        if (spec.monoid) {
            Json m;
            m["elements"] = spec.monoid->elements;
            m["add"] = spec.monoid->add;
            m["zero"] = spec.monoid->zero;
            params["monoid"] = std::move(m);
        }
        break;
    case Family::Product: {
        Json fs = Json::array();
        for (const auto& f : spec.factors) fs.push_back(catalog_spec_to_json(f));
        params["factors"] = std::move(fs);
        break;
    }
    default:
        break;
    }
    j["params"] = std::move(params);
    return j;
}

CatalogSpec catalog_spec_from_json(const Json& j) {
    const Json& fam = field(j, "family");
    if (!fam.is_string()) throw ParseError("family must be a string");
    CatalogSpec s = CatalogSpec::make(family_named(fam.get<std::string>()));
    const Json params = j.contains("params") ? j.at("params") : Json::object();
    if (!params.is_object()) throw ParseError("params must be an object");
    auto get_int = [&](const char* key) {
        if (!params.contains(key)) throw BadParams(std::string("missing parameter ") + key);
        return static_cast<int>(integer(params.at(key), key));
    };
    switch (s.family) {
    case Family::ChainLattice:
    case Family::PowerSetLattice:
    case Family::NilChain:
        s.n = get_int("n");
        break;
    case Family::BNI:
        s.n = get_int("n");
        s.i = get_int("i");
        break;
    case Family::Truncation:
        s.k = get_int("k");
        break;
    case Family::IdempotentMonoidExt:
        if (params.contains("monoid")) {
            const Json& m = params.at("monoid");
            MonoidTable t;
            t.elements = string_list(field(m, "elements"), "monoid elements");
            t.add = table(field(m, "add"), "monoid add");
            t.zero = integer(field(m, "zero"), "monoid zero");
            s.monoid = std::move(t);
        }
        break;
    case Family::Product: {
        const Json& fs = field(params, "factors");
        if (!fs.is_array()) throw ParseError("factors must be an array");
        for (const auto& f : fs) s.factors.push_back(catalog_spec_from_json(f));
        break;
    }
    default:
        break;
    }
    return s;
}

FiniteSemiring load_semiring(const Json& j) {
    if (j.is_object() && j.contains("family")) return build_catalog(catalog_spec_from_json(j));
    return semiring_from_json(j);
}

CatalogSpec parse_catalog(const std::string& expr, const std::map<std::string, std::string>& params) {
    CatalogSpec s = ExprParser(expr).parse_all();
    if (params.empty()) return s;
    switch (s.family) {
    case Family::ChainLattice:
    case Family::PowerSetLattice:
    case Family::NilChain:
        s.n = int_param(params, "n");
        break;
    case Family::BNI:
        s.n = int_param(params, "n");
        s.i = int_param(params, "i");
        break;
    case Family::Truncation:
        s.k = int_param(params, "k");
        break;
    case Family::Product: {
        auto it = params.find("factors");
        if (it == params.end()) throw BadParams("missing parameter factors");
        s.factors = ExprParser(it->second).parse_list();
        break;
    }
    default:
        break;
    }
    for (const auto& [key, value] : params) {
        static const std::set<std::string> known{"n", "i", "k", "factors"};
        if (!known.contains(key)) throw BadParams("unknown parameter " + key);
    }
    return s;
}

Json ideal_to_json(const FiniteSemiring& s, ElementSet members) {
    return s.labels_of(members);
}

ElementSet ideal_from_json(const FiniteSemiring& s, const Json& j) {
    ElementSet out;
    for (const auto& label : string_list(j, "ideal")) {
        auto e = s.find(label);
        if (!e) throw ParseError("unknown element label \"" + label + "\"");
        out.insert(*e);
    }
    return out;
}

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["laurent"] = Json(std::vector<std::string>(p.laurent().begin(), p.laurent().end()));
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [name, e] : m.exponents()) mono[name] = e;
        Json t;
        t["monomial"] = std::move(mono);
        t["coeff"] = p.semiring().label(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const FiniteSemiring& s, const Json& j) {
    std::set<std::string> laurent;
    if (j.is_object() && j.contains("laurent")) {
        for (auto& v : string_list(j.at("laurent"), "laurent")) laurent.insert(v);
    }
    Polynomial p(s, laurent);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) p.add_term(monomial(field(t, "monomial")), coefficient(s, field(t, "coeff")));
    return p;
}

Json series_to_json(const TruncatedSeries& f) {
    Json j = polynomial_to_json(f.to_polynomial());
    j["order"] = f.order();
    return j;
}

TruncatedSeries series_from_json(const FiniteSemiring& s, const Json& j) {
    const long long order = integer(field(j, "order"), "order");
    if (order < 0) throw ParseError("order must be nonnegative");
    TruncatedSeries f(s, static_cast<unsigned>(order));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) f.add_term(monomial(field(t, "monomial")), coefficient(s, field(t, "coeff")));
    return f;
}

Json semimodule_to_json(const FiniteSemimodule& m) {
    Json j;
    j["elements"] = m.labels();
    j["add"] = table_json(m.size(), m.size(), [&](Elem a, Elem b) { return m.add(a, b); });
    j["scalar"] = table_json(m.semiring().size(), m.size(), [&](Elem a, Elem x) { return m.act(a, x); });
    j["zero"] = m.zero();
    return j;
}

FiniteSemimodule semimodule_from_json(const FiniteSemiring& s, const Json& j) {
    RawSemimodule r;
    r.elements = string_list(field(j, "elements"), "elements");
    r.add = table(field(j, "add"), "add");
    r.scalar = table(field(j, "scalar"), "scalar");
    r.zero = integer(field(j, "zero"), "zero");
    return FiniteSemimodule::create(s, r);
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("cannot write " + path);
}

} // namespace slab
