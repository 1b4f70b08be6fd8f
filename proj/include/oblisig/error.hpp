/*
 * Copyright 2026 The Oblisig Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBLISIG_ERROR_HPP_
#define OBLISIG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace oblisig {

// Coded runtime error. The code is a stable machine-readable slug
// (e.g. "duplicate-message"); what() prepends it to the detail text.
// Protocol-level rejection and malformed-input conditions all surface
// through this type so call sites can dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  explicit Error(std::string code) : Error(std::move(code), "") {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace oblisig

#endif  // OBLISIG_ERROR_HPP_
