// Copyright 2026 The qautomata Authors
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

// JSON formats.
//
//   complex matrix   [[ [re,im], ... ], ...]       (array of rows)
//   channel          {"dim": d, "kraus": [matrix, ...]}
//   quantum automaton
//     {"type": "quantum", "phi0": channel, "phi1": channel,
//      "rho0": matrix, "e_fair": matrix}
//   classical automaton
//     {"type": "classical", "s0": [[x,...],...], "s1": ..., "pi0": [x,...],
//      "e_fair": [0|1,...]}
//   decomposition
//     {"decaying_dim": n,
//      "blocks": [{"m": m_i, "d": d_i, "enclosure_bases": [matrix, ...],
//                  "rho": matrix}]}
//
// Channels and automata are validated on load.

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "qautomata/automaton.hpp"
#include "qautomata/channel.hpp"
#include "qautomata/enclosures.hpp"

namespace qautomata {

using json = nlohmann::json;
using CoinAutomaton = std::variant<QuantumCoinAutomaton, ClassicalCoinAutomaton>;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& what);

json channel_to_json(const KrausChannel& ch);
/// Parses and re-validates (trace preservation and Choi positivity).
KrausChannel channel_from_json(const json& j);

json automaton_to_json(const CoinAutomaton& a);
CoinAutomaton automaton_from_json(const json& j);

json decomposition_to_json(const EnclosureDecomposition& dec);
/// D is reconstructed as the orthogonal complement of the enclosures.
EnclosureDecomposition decomposition_from_json(const json& j);

/// Reads a file and parses it; ParseError names the file on failure.
json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

}  // namespace qautomata
