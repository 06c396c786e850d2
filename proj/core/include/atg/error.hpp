/*
 * Copyright 2026 The atg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATG_ERROR_HPP
#define ATG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace atg {

enum class errc {
    // input errors (CLI exit code 1)
    parse_error,
    unknown_clock,
    unknown_location,
    unknown_action,
    invalid_automaton,
    invalid_game,
    // definedness / resource errors (CLI exit code 2)
    bound_exceeded,
    left_state_zone,
    not_enabled,
    target_outside_s,
    not_in_future,
    no_time_successor,
    empty_window,
    strategy_undefined,
    explosion_guard,
    too_large,
    ambiguous_rounding,
    solver_stalled,
    overflow,
};

/// All library failures are reported through this exception type.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

    /// True for malformed-input failures, false for resource/definedness ones.
    bool is_input_error() const {
        switch (code_) {
        case errc::parse_error:
        case errc::unknown_clock:
        case errc::unknown_location:
        case errc::unknown_action:
        case errc::invalid_automaton:
        case errc::invalid_game:
            return true;
        default:
            return false;
        }
    }

  private:
    errc code_;
};

} // namespace atg

#endif
