// Copyright 2026 The pdoenc Authors
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


#pragma once

#include <string>

#include "pdoenc/circuit.hpp"
#include "pdoenc/simulate.hpp"

namespace pdoenc {

// Line-per-gate text listing: "KIND targets=.. controls=.. [key=value ...]".
// Open controls carry a '~' prefix; lists are comma separated and '-' when
// empty. Numbers use 17 significant digits so parsing is lossless.
std::string write_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

// Encoding metadata lines followed by the circuit listing.
std::string write_encoding(const BlockEncoding& be);
BlockEncoding parse_encoding(const std::string& text);

}  // namespace pdoenc
