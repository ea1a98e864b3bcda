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

#include <stdexcept>
#include <string>

namespace slab {

enum class ErrorCode {
    Parse,
    AxiomViolation,
    BadParams,
    EmptyProduct,
    MixedSemirings,
    MixedOrders,
    CapExceeded,
    BudgetExceeded,
    FoldTooSmall,
    LaurentViolation,
    NotWeakGaussian,
    Io,
};

const char* to_string(ErrorCode code);

/// Base of every exception the library throws on a contract violation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define SLAB_DEFINE_ERROR(Name)                                               \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {} \
    }

SLAB_DEFINE_ERROR(BadParams);
SLAB_DEFINE_ERROR(EmptyProduct);
SLAB_DEFINE_ERROR(MixedSemirings);
SLAB_DEFINE_ERROR(MixedOrders);
SLAB_DEFINE_ERROR(CapExceeded);
SLAB_DEFINE_ERROR(BudgetExceeded);
SLAB_DEFINE_ERROR(FoldTooSmall);
SLAB_DEFINE_ERROR(LaurentViolation);
SLAB_DEFINE_ERROR(NotWeakGaussian);

#undef SLAB_DEFINE_ERROR

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

} // namespace slab
