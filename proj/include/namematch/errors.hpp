// Copyright 2026 The Namematch Authors.
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

#ifndef NAMEMATCH_ERRORS_HPP_
#define NAMEMATCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace namematch {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input data violates an operation's precondition (empty name, bad UTF-8).
class InputError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or one of its rows could not be parsed.
class LoadError : public Error {
 public:
  using Error::Error;
};

// I/O failures are reported separately from parse failures so the CLI can
// map them to distinct exit codes.
class IoError : public LoadError {
 public:
  using LoadError::LoadError;
};

}  // namespace namematch

#endif  // NAMEMATCH_ERRORS_HPP_
