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

#pragma once

// JSON encodings. Decoders throw ParseError on malformed documents and
// ValidationError when tables violate an axiom.

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/power_series.hpp"
#include "semiring_lab/semimodule.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace slab {

using Json = nlohmann::ordered_json;

/// {"elements", "add", "mul", "zero", "one"}.
Json semiring_to_json(const FiniteSemiring& s);
FiniteSemiring semiring_from_json(const Json& j);

/// {"family": name, "params": {...}}; products list "factors", the monoid
/// extension takes an optional "monoid" {"elements", "add", "zero"}.
Json catalog_spec_to_json(const CatalogSpec& spec);
CatalogSpec catalog_spec_from_json(const Json& j);

/// Accepts either encoding above.
FiniteSemiring load_semiring(const Json& j);

/// Parses "nil_chain(4)", "b_n_i(4,2)", "product(nil_chain(3),boolean)" and
/// bare names with parameters supplied separately ("n", "i", "k", "factors").
CatalogSpec parse_catalog(const std::string& expr,
                          const std::map<std::string, std::string>& params = {});

/// Element labels in index order.
Json ideal_to_json(const FiniteSemiring& s, ElementSet members);
ElementSet ideal_from_json(const FiniteSemiring& s, const Json& j);

/// {"laurent": [...], "terms": [{"monomial": {"X": 2}, "coeff": "u"}]}.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const FiniteSemiring& s, const Json& j);

/// Polynomial encoding plus "order".
Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const FiniteSemiring& s, const Json& j);

/// {"elements", "add", "scalar", "zero"}.
Json semimodule_to_json(const FiniteSemimodule& m);
FiniteSemimodule semimodule_from_json(const FiniteSemiring& s, const Json& j);

/// Parses text; throws ParseError.
Json parse_json(const std::string& text);
/// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace slab
