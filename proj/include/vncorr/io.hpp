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

#ifndef VNCORR_IO_HPP
#define VNCORR_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "vncorr/applications.hpp"
#include "vncorr/closedform.hpp"
#include "vncorr/statekit.hpp"

namespace vncorr {

/// Malformed input text; line and column are 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct StateDocument {
  DensityMatrix rho;
  std::optional<std::string> label;
};

/// { "kind": "state", "dims": [m, n], "label": "...", "matrix": [[re, im], ...] }
/// with the (mn)^2 entries in row-major order. The label is optional.
StateDocument parse_state(std::string_view text);
std::string format_state(const DensityMatrix& rho, const std::optional<std::string>& label = {});

/// { "kind": "ensemble", "dims": [m, n], "probabilities": [...],
///   "states": [[[re, im], ...], ...] }
Ensemble parse_ensemble(std::string_view text);
std::string format_ensemble(const Ensemble& e);

/// { "kind": "bloch", "dims": [m, n], "shape": [m^2, n^2], "ordering": "...",
///   "matrix": [c_11, c_12, ...] } with C row-major.
std::string format_bloch(const BlochDecomposition& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace vncorr

#endif  // VNCORR_IO_HPP
