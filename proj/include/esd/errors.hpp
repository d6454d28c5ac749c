// Copyright 2026 The esdsim Authors
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

namespace esd {

// Shape or dimension mismatch between operands, or an unsupported subsystem size.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A parameter outside its admissible range (negative time, p outside [0,1], ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative numerical routine failed, or produced output violating an invariant.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No closed-form expression exists for the requested channel and dimensions.
class NoFormulaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace esd
