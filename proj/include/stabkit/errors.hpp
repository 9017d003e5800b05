// Copyright 2026 The stabkit Authors
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

#ifndef STABKIT_ERRORS_HPP_
#define STABKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// An AxiomRef that does not resolve in its context.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (disconnected graph, even labeling, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size or time budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvalidProofError : public Error {
 public:
  using Error::Error;
};

class InvalidCertificateError : public Error {
 public:
  using Error::Error;
};

// A proof is not of the shape an operation requires (e.g. not tree-like).
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace stabkit

#endif  // STABKIT_ERRORS_HPP_
