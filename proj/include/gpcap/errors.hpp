// Copyright 2026 The gpcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPCAP_ERRORS_HPP
#define GPCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpcap {

/// Base of every error caused by bad caller input. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class InvalidDistribution : public InputError {
   public:
    using InputError::InputError;
};

class InvalidState : public InputError {
   public:
    using InputError::InputError;
};

class NotCompletelyPositive : public InputError {
   public:
    using InputError::InputError;
};

class UnsupportedDimension : public InputError {
   public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
   public:
    using InputError::InputError;
};

class IndexOutOfRange : public InputError {
   public:
    using InputError::InputError;
};

}  // namespace gpcap

#endif
