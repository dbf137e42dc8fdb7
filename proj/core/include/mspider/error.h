// Copyright 2026 The mspider Authors
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

#ifndef MSPIDER_ERROR_H_
#define MSPIDER_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mspider {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `offset` is a byte offset into the file when known.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t offset, const std::string& what)
      : Error(path + ":" + std::to_string(offset) + ": " + what),
        path_(std::move(path)),
        offset_(offset) {}

  const std::string& path() const { return path_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string path_;
  std::size_t offset_;
};

// Well-formed input that violates a data invariant (duplicate db_id,
// dangling key, unknown database referenced by examples, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what,
                     std::vector<std::string> offending = {})
      : Error(what), offending_(std::move(offending)) {}

  const std::vector<std::string>& offending() const { return offending_; }

 private:
  std::vector<std::string> offending_;
};

// Invalid user configuration (bad thresholds, unknown language, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mspider

#endif  // MSPIDER_ERROR_H_
