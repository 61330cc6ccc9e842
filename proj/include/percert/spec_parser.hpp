// Copyright 2026 The percert Authors
//
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

#ifndef PERCERT_SPEC_PARSER_HPP
#define PERCERT_SPEC_PARSER_HPP

#include <string_view>

#include "percert/graph.hpp"

namespace percert {

/// Graph DSL:
///   spec   := family '(' int {',' int} ')' | 'prod' '(' spec {',' spec} ')' | 'file:' PATH
///   family := path | star | cycle | complete | theta
/// Whitespace between tokens is ignored. A PATH runs to the next ',' or ')'.
Graph parse_spec(std::string_view text);

}  // namespace percert

#endif  // PERCERT_SPEC_PARSER_HPP
