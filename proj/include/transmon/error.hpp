// Copyright 2026 The transmon-wh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSMON_ERROR_HPP
#define TRANSMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace transmon {

// Exit codes used by the command-line tool. Library errors carry one so the
// CLI can map an exception straight to a process status.
enum class ExitCode : int {
  ok = 0,
  config_error = 2,
  size_cap = 3,
  numerical_failure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Invalid arguments and malformed configuration.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(what, ExitCode::config_error) {}
};

// A requested problem exceeds a configured size limit.
class SizeCapExceeded : public Error {
 public:
  explicit SizeCapExceeded(const std::string& what)
      : Error(what, ExitCode::size_cap) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what)
      : Error(what, ExitCode::numerical_failure) {}
};

}  // namespace transmon

#endif  // TRANSMON_ERROR_HPP
