// Copyright 2026 The domsolve Authors
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

#ifndef DOMSOLVE_ERRORS_HPP_
#define DOMSOLVE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace domsolve {

// Bad arguments and precondition violations use std::invalid_argument;
// negative payoffs under a power transform use std::domain_error.

// A request exceeds a hard size limit (exact arithmetic or enumeration).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The dominance LP failed (unbounded, iteration limit, or a certificate that
// did not re-verify).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace domsolve

#endif  // DOMSOLVE_ERRORS_HPP_
