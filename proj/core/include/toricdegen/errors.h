// Copyright 2026 The toricdegen Authors
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

#ifndef TORICDEGEN_ERRORS_H_
#define TORICDEGEN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toricdegen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A semigroup operation that needs S ∩ (-S) = {0} got a non-pointed one.
class NotPointed : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Preconditions of a closed Möbius formula do not hold.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class MissingUniqueBetti : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

class MissingDegenerationData : public HypothesisViolated {
 public:
  using HypothesisViolated::HypothesisViolated;
};

// A constructed certificate failed its own verification.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

// A computed instance contradicts a proven statement; always a bug.
class TheoryViolation : public Error {
 public:
  using Error::Error;
};

// Enumeration refused because it would be exponentially large.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0,
             const std::string& source = "")
      : Error(Format(message, line, column, source)),
        message_(message),
        line_(line),
        column_(column) {}
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column, const std::string& source) {
    std::string out = source.empty() ? "" : source + ":";
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ":";
    return out.empty() ? message : out + " " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace toricdegen

#endif  // TORICDEGEN_ERRORS_H_
