/*
   Copyright 2026 the cartdiff authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartdiff {

// Root of the library's exception hierarchy.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed. Carries the offending token and its
// 0-based character position so frontends can point at the exact spot.
class parse_error : public error {
public:
    parse_error(std::string message, std::size_t position, std::string token)
        : error(message + " at position " + std::to_string(position) +
                (token.empty() ? std::string{} : " near '" + token + "'")),
          position_(position), token_(std::move(token)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string &token() const noexcept { return token_; }

private:
    std::size_t position_;
    std::string token_;
};

// A value or operation violated a structural invariant (arity mismatch,
// mixed semiring instances, malformed sequence, ...). The message names
// the violated invariant.
class validation_error : public error {
public:
    explicit validation_error(const std::string &invariant)
        : error(invariant), invariant_(invariant) {}

    const std::string &invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

} // namespace cartdiff
