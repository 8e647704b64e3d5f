// Copyright 2026 The vncorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vncorr/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace vncorr {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kBlochOrdering =
    "row i <-> X_i, column j <-> Y_j; X_0 = I/sqrt(d), then symmetric, antisymmetric and "
    "diagonal generalized Gell-Mann matrices divided by sqrt(2), each in lexicographic order";

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto head = text.substr(0, upto);
    const int line = 1 + static_cast<int>(std::count(head.begin(), head.end(), '\n'));
    const auto last_nl = head.rfind('\n');
    const int column = static_cast<int>(last_nl == std::string_view::npos ? upto + 1 : upto - last_nl);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...: " prefix.
    if (const auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(what, line, column);
  }
}

[[noreturn]] void schema_error(const std::string& message) { throw ParseError(message, 0, 0); }

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) schema_error("document must be a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) schema_error(std::string("missing field '") + name + "'");
  return *it;
}

void expect_kind(const Json& doc, std::string_view kind) {
  const Json& k = field(doc, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    schema_error("field 'kind' must be \"" + std::string(kind) + "\"");
  }
}

BipartiteDims read_dims(const Json& doc) {
  const Json& d = field(doc, "dims");
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
    schema_error("field 'dims' must be [m, n] with integer entries");
  }
  try {
    return BipartiteDims(d[0].get<int>(), d[1].get<int>());
  } catch (const InvalidInput& e) {
    throw ValidationError("dimensions", e.what());
  }
}

Complex read_complex(const Json& entry, const std::string& where) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    schema_error(where + " must be a [re, im] pair of numbers");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

Vector read_amplitudes(const Json& list, std::size_t expected, const std::string& where) {
  if (!list.is_array() || list.size() != expected) {
    schema_error(where + " must hold " + std::to_string(expected) + " [re, im] entries");
  }
  Vector v(static_cast<Eigen::Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) {
    v(static_cast<Eigen::Index>(i)) = read_complex(list[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

Json complex_list(const Complex* data, std::size_t count) {
  Json out = Json::array();
  for (std::size_t i = 0; i < count; ++i) out.push_back(Json::array({data[i].real(), data[i].imag()}));
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : InvalidInput(line > 0 ? "parse error at line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message
                            : "invalid document: " + message),
      line_(line),
      column_(column) {}

StateDocument parse_state(std::string_view text) {
  const Json doc = parse_json(text);
  expect_kind(doc, "state");
  const BipartiteDims dims = read_dims(doc);
  const auto d = static_cast<std::size_t>(dims.total());
  const Vector flat = read_amplitudes(field(doc, "matrix"), d * d, "field 'matrix'");
  Matrix rho(dims.total(), dims.total());
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          flat(static_cast<Eigen::Index>(r * d + c));
    }
  }
  std::optional<std::string> label;
  if (const auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) schema_error("field 'label' must be a string");
    label = it->get<std::string>();
  }
  return {DensityMatrix(std::move(rho), dims), std::move(label)};
}

std::string format_state(const DensityMatrix& rho, const std::optional<std::string>& label) {
  Json doc;
  doc["kind"] = "state";
  doc["dims"] = {rho.dims().m, rho.dims().n};
  if (label) doc["label"] = *label;
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = rho.matrix();
  doc["matrix"] = complex_list(rows.data(), static_cast<std::size_t>(rows.size()));
  return doc.dump(1) + "\n";
}

Ensemble parse_ensemble(std::string_view text) {
  const Json doc = parse_json(text);
  expect_kind(doc, "ensemble");
  const BipartiteDims dims = read_dims(doc);
  const Json& probs = field(doc, "probabilities");
  const Json& states = field(doc, "states");
  if (!probs.is_array()) schema_error("field 'probabilities' must be an array");
  if (!states.is_array()) schema_error("field 'states' must be an array");
  std::vector<double> p;
  for (const Json& x : probs) {
    if (!x.is_number()) schema_error("field 'probabilities' must hold numbers");
    p.push_back(x.get<double>());
  }
  std::vector<PureStateVec> vecs;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    try {
      vecs.emplace_back(read_amplitudes(states[i], static_cast<std::size_t>(dims.total()), where), dims);
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ValidationError("unit norm", where + ": " + e.what());
    }
  }
  try {
    return Ensemble(std::move(vecs), std::move(p));
  } catch (const InvalidInput& e) {
    throw ValidationError("ensemble", e.what());
  }
}

std::string format_ensemble(const Ensemble& e) {
  Json doc;
  doc["kind"] = "ensemble";
  doc["dims"] = {e.dims().m, e.dims().n};
  doc["probabilities"] = e.probabilities();
  Json states = Json::array();
  for (const auto& s : e.states()) {
    states.push_back(complex_list(s.amplitudes().data(), static_cast<std::size_t>(s.amplitudes().size())));
  }
  doc["states"] = std::move(states);
  return doc.dump(1) + "\n";
}

std::string format_bloch(const BlochDecomposition& c) {
  Json doc;
  doc["kind"] = "bloch";
  doc["dims"] = {c.dims.m, c.dims.n};
  doc["shape"] = {c.c.rows(), c.c.cols()};
  doc["ordering"] = kBlochOrdering;
  Json flat = Json::array();
  for (Eigen::Index i = 0; i < c.c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.c.cols(); ++j) flat.push_back(c.c(i, j));
  }
  doc["matrix"] = std::move(flat);
  return doc.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vncorr
