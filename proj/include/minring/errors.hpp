// Copyright 2026 The minring Authors
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

#ifndef MINRING_ERRORS_HPP_
#define MINRING_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace minring {

enum class ErrorKind {
  kInvalidModulus,
  kNotInvertible,
  kUnsupportedRing,
  kZeroHasNoValuation,
  kWrongClass,
  kShape,
  kTooLarge,
  kMembership,
  kZeroCodeword,
  kOmissionViolated,
  kParse,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace minring

#endif  // MINRING_ERRORS_HPP_
