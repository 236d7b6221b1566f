// Copyright 2026 The Photonlift Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "photonlift/circuits.hpp"
#include "photonlift/fock.hpp"
#include "photonlift/matrix.hpp"

namespace photonlift {

// Matrix text format: one row per line, entries separated by single
// spaces, each complex entry as <re><sign><im>i (e.g. 0.5-0.5i, 1+0i).
// Blank lines and lines starting with # are ignored. Writers emit 17
// significant digits; readers also accept bare reals.

std::string format_complex(Complex z);
Complex parse_complex(const std::string& token);

Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& matrix);
void write_matrix_file(const std::string& path, const Matrix& matrix);

// State text format: one nonzero term per line, "n1 n2 ... nm : re+imi".

struct StateTerms {
  std::vector<OccupationVector> terms;
  std::vector<Complex> weights;
};

StateTerms read_state(std::istream& in);
StateTerms read_state_file(const std::string& path);
void write_state(std::ostream& out, const StateVector& state);
void write_state_file(const std::string& path, const StateVector& state);

// Basis listing: one occupation vector per line, "n1 n2 ... nm".

void write_basis(std::ostream& out, const FockBasis& in_basis);
void write_basis_file(const std::string& path, const FockBasis& in_basis);

// Element list format: header "modes m", then one element per line:
// "T k l theta phi [inv]", "D phi_1 ... phi_m", "LOSS k d", "GAIN k d".

ElementList read_elements(std::istream& in);
ElementList read_elements_file(const std::string& path);
void write_elements(std::ostream& out, const ElementList& list);
void write_elements_file(const std::string& path, const ElementList& list);

}  // namespace photonlift
