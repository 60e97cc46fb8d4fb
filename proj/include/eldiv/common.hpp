/*
   Copyright 2026 The eldiv authors

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

#ifndef ELDIV_COMMON_HPP
#define ELDIV_COMMON_HPP

#include <stdexcept>
#include <string>

namespace eldiv {

// Thrown when a computation contradicts a structural fact the library relies
// on (e.g. no admissible Frobenius charpoly, or a divisibility that must hold
// fails). Such violations are never swallowed: they indicate a bug or corrupt
// input, not a recoverable condition.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eldiv

#endif  // ELDIV_COMMON_HPP
