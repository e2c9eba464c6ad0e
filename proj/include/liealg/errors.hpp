/*
 * Copyright 2026 the lie-frattini authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
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

namespace liealg {

/// Refusal to start a computation whose estimated cost exceeds a configured
/// cap. Carries the estimate so callers can report it.
class cost_error : public std::runtime_error {
public:
    cost_error(std::string what, std::string estimate)
        : std::runtime_error(std::move(what)), estimate_(std::move(estimate)) {}

    const std::string& estimate() const { return estimate_; }

private:
    std::string estimate_;
};

/// Malformed user input: bad field parameters, inconsistent dimensions,
/// unparseable JSON, tables that fail validation.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace liealg
