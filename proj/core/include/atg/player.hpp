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

#ifndef ATG_PLAYER_HPP
#define ATG_PLAYER_HPP

namespace atg {

/// Min minimizes the limit average weight per transition, Max maximizes it.
enum class Player { Min, Max };

inline Player opponent(Player p) { return p == Player::Min ? Player::Max : Player::Min; }

inline const char* player_name(Player p) { return p == Player::Min ? "min" : "max"; }

} // namespace atg

#endif
