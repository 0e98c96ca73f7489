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

#include "qautomata/io.hpp"

#include <fstream>
#include <sstream>

#include "qautomata/errors.hpp"

namespace qautomata {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + ": expected a number");
  return j.get<double>();
}

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a nonempty array of rows");
  const auto rows = static_cast<Index>(j.size());
  if (!j[0].is_array()) throw ParseError(what + ": rows must be arrays");
  const auto cols = static_cast<Index>(j[0].size());
  RealMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(what + ": ragged rows");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

json real_vector_to_json(const RealVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RealVector real_vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  RealVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = number(j[i], what);
  return v;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of rows");
  const auto rows = static_cast<Index>(j.size());
  const Index cols = rows == 0 ? 0 : static_cast<Index>(j[0].is_array() ? j[0].size() : 0);
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(what + ": ragged or malformed rows");
    }
    for (Index c = 0; c < cols; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2) {
        throw ParseError(what + ": complex entries must be [re, im]");
      }
      m(r, c) = Complex(number(z[0], what), number(z[1], what));
    }
  }
  return m;
}

json channel_to_json(const KrausChannel& ch) {
  json ops = json::array();
  for (const ComplexMatrix& k : ch.kraus()) ops.push_back(matrix_to_json(k));
  return json{{"dim", ch.dim()}, {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j) {
  const json& dim_field = field(j, "dim", "channel");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw ParseError("channel: \"dim\" must be a positive integer");
  }
  const auto d = static_cast<Index>(dim_field.get<long long>());
  const json& ops = field(j, "kraus", "channel");
  if (!ops.is_array() || ops.empty()) throw ParseError("channel: \"kraus\" must be a nonempty array");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    ComplexMatrix k = matrix_from_json(ops[i], "channel kraus[" + std::to_string(i) + "]");
    if (k.rows() != d || k.cols() != d) {
      throw DimensionMismatch("channel kraus[" + std::to_string(i) + "] is not " +
                              std::to_string(d) + "x" + std::to_string(d));
    }
    kraus.push_back(std::move(k));
  }
  KrausChannel ch(std::move(kraus));
  validate_loaded(ch);
  return ch;
}

json automaton_to_json(const CoinAutomaton& a) {
  if (const auto* q = std::get_if<QuantumCoinAutomaton>(&a)) {
    return json{{"type", "quantum"},
                {"phi0", channel_to_json(q->phi0())},
                {"phi1", channel_to_json(q->phi1())},
                {"rho0", matrix_to_json(q->rho0().matrix())},
                {"e_fair", matrix_to_json(q->e_fair())}};
  }
  const auto& c = std::get<ClassicalCoinAutomaton>(a);
  return json{{"type", "classical"},
              {"s0", real_matrix_to_json(c.s0())},
              {"s1", real_matrix_to_json(c.s1())},
              {"pi0", real_vector_to_json(c.pi0())},
              {"e_fair", real_vector_to_json(c.e_fair())}};
}

CoinAutomaton automaton_from_json(const json& j) {
  const json& type = field(j, "type", "automaton");
  if (type == "quantum") {
    return QuantumCoinAutomaton(
        channel_from_json(field(j, "phi0", "automaton")),
        channel_from_json(field(j, "phi1", "automaton")),
        DensityOperator(matrix_from_json(field(j, "rho0", "automaton"), "rho0")),
        matrix_from_json(field(j, "e_fair", "automaton"), "e_fair"));
  }
  if (type == "classical") {
    return ClassicalCoinAutomaton(real_matrix_from_json(field(j, "s0", "automaton"), "s0"),
                                  real_matrix_from_json(field(j, "s1", "automaton"), "s1"),
                                  real_vector_from_json(field(j, "pi0", "automaton"), "pi0"),
                                  real_vector_from_json(field(j, "e_fair", "automaton"), "e_fair"));
  }
  throw ParseError("automaton: \"type\" must be \"quantum\" or \"classical\"");
}

json decomposition_to_json(const EnclosureDecomposition& dec) {
  json blocks = json::array();
  for (const EnclosureBlock& b : dec.blocks) {
    json bases = json::array();
    for (const Subspace& v : b.enclosures) bases.push_back(matrix_to_json(v.basis()));
    blocks.push_back(json{{"m", b.multiplicity()},
                          {"d", b.block_dim()},
                          {"enclosure_bases", std::move(bases)},
                          {"rho", matrix_to_json(b.rho.matrix())}});
  }
  return json{{"decaying_dim", dec.decaying.dim()}, {"blocks", std::move(blocks)}};
}

EnclosureDecomposition decomposition_from_json(const json& j) {
  const json& blocks = field(j, "blocks", "decomposition");
  if (!blocks.is_array()) throw ParseError("decomposition: \"blocks\" must be an array");
  std::vector<EnclosureBlock> out;
  Index ambient = -1;
  ComplexMatrix all;
  for (const json& b : blocks) {
    std::vector<Subspace> enclosures;
    for (const json& basis : field(b, "enclosure_bases", "block")) {
      Subspace v(matrix_from_json(basis, "enclosure basis"));
      if (ambient < 0) {
        ambient = v.ambient_dim();
        all.resize(ambient, 0);
      }
      if (v.ambient_dim() != ambient) throw DimensionMismatch("decomposition: mixed ambient dims");
      all.conservativeResize(Eigen::NoChange, all.cols() + v.dim());
      all.rightCols(v.dim()) = v.basis();
      enclosures.push_back(std::move(v));
    }
    DensityOperator rho(matrix_from_json(field(b, "rho", "block"), "rho"));
    const auto m = field(b, "m", "block").get<Index>();
    const auto d = field(b, "d", "block").get<Index>();
    if (m != static_cast<Index>(enclosures.size()) || d != rho.dim()) {
      throw ParseError("decomposition: block m/d disagree with its bases");
    }
    out.push_back(EnclosureBlock{std::move(enclosures), std::move(rho)});
  }
  const auto decaying_dim = field(j, "decaying_dim", "decomposition").get<Index>();
  if (ambient < 0) throw ParseError("decomposition: no enclosures");
  EnclosureDecomposition dec{orthogonal_complement(Subspace(all)), std::move(out)};
  if (dec.decaying.dim() != decaying_dim) {
    throw ParseError("decomposition: decaying_dim disagrees with the enclosures");
  }
  return dec;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump(j);
}

}  // namespace qautomata
