// Copyright 2026 The wirecut Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wirecut {

// Malformed circuit or cut-spec text. The message carries the line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &detail, const std::string &source = "")
        : std::runtime_error((source.empty() ? "" : source + ": ") + "line " +
                             std::to_string(line) + ": " + detail),
          line_(line),
          detail_(detail) {}

    int line() const { return line_; }
    const std::string &detail() const { return detail_; }

  private:
    int line_;
    std::string detail_;
};

// A cut plan that cannot be executed without classical communication.
class CutPlanError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// No cut plan satisfies the requested width bound.
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace wirecut
