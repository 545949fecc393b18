// Copyright 2026 The libsdt Authors
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

#ifndef SDT_ERROR_HPP_
#define SDT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol outside the governing alphabet, or two operands over different
// alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Malformed machine or dataset text. Carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The distinct-query budget of a budgeted oracle ran out.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// Folding a merged subtree would need two distinct output sets on one
// (state, symbol) slot; the data was insufficient for the attempted merge.
class FoldConflict : public Error {
 public:
  using Error::Error;
};

// A sampler search exceeded its configured future bound.
class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};

// Enumeration would emit more pairs than the configured cap.
class PairCapExceeded : public Error {
 public:
  PairCapExceeded(const std::string& what, std::size_t count)
      : Error(what), count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

// Canonicalization failed to stabilize within the round limit.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace sdt

#endif  // SDT_ERROR_HPP_
