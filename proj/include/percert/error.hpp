// Copyright 2026 The percert Authors
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

#ifndef PERCERT_ERROR_HPP
#define PERCERT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace percert {

enum class ErrorCode {
  parse,
  parameter,
  precondition,
  io,
  cap_exceeded,
  internal,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code and the module that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message)
      : std::runtime_error(message), code_(code), module_(std::move(module)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

}  // namespace percert

#endif  // PERCERT_ERROR_HPP
