/*
 * Copyright 2026 The legvar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace legvar {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape mismatch: non-square input, wrong coordinate count, |I| != |J|, ...
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

/// Structural violation: non-skew input to a Pfaffian, odd size, ...
class structure_error : public error {
public:
    explicit structure_error(const std::string& msg) : error(msg) {}
};

/// Invalid argument value: k out of range, zero scaling factor, ...
class argument_error : public error {
public:
    explicit argument_error(const std::string& msg) : error(msg) {}
};

/// Wrong polynomial degree (e.g. a quadric constructor fed a cubic).
class degree_error : public error {
public:
    explicit degree_error(const std::string& msg) : error(msg) {}
};

/// Input undefined for the operation (zero polynomial, constant curve, ...).
class undefined_input_error : public error {
public:
    explicit undefined_input_error(const std::string& msg) : error(msg) {}
};

/// Point is not on the scheme/variety the operation requires.
class membership_error : public error {
public:
    explicit membership_error(const std::string& msg) : error(msg) {}
};

/// A check ran but certifies nothing (codimension mismatch at a sample point).
class inconclusive_error : public error {
public:
    explicit inconclusive_error(const std::string& msg) : error(msg) {}
};

/// Wrong stratum kind for the operation (e.g. canonical form of an INV point).
class stratum_error : public error {
public:
    explicit stratum_error(const std::string& msg) : error(msg) {}
};

/// Bounded random search gave up.
class sampling_exhausted_error : public error {
public:
    explicit sampling_exhausted_error(const std::string& msg) : error(msg) {}
};

/// Malformed textual input (polynomial or JSON point files).
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace legvar
