// Copyright 2026 The qent authors
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

namespace qent {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct NotPSD : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct ParamOutOfRange : Error {
  using Error::Error;
};
struct NonUnitVector : Error {
  using Error::Error;
};
struct NotDiagonal : Error {
  using Error::Error;
};
struct COutOfRange : Error {
  using Error::Error;
};
struct InvalidSetting : Error {
  using Error::Error;
};
struct IncompletePlan : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qent
