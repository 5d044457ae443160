// Copyright 2026 The detmit Authors
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

#ifndef DETMIT_ERRORS_H
#define DETMIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace detmit {

/// Malformed input: bad dimensions, out-of-range indices, unparsable files,
/// mismatched measurement settings, invalid graph colorings.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A detector model with p0 + p1 = 1 (within tolerance) has no inverse.
class SingularModelError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Calibration records do not cover a rate that must be estimated.
class NoDataError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Request exceeds a dense-storage limit (full distributions, dense simulation).
class ResourceLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Mean spin too close to zero for the squeezing parameter to be defined.
class DegenerateMeanSpinError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace detmit

#endif
