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

#include <variant>
#include <vector>

#include "photonlift/lift.hpp"
#include "photonlift/matrix.hpp"

namespace photonlift {

/**
 * Generalized beam splitter T_{k,l}(theta, phi) embedding the block
 *   [ e^{i phi} cos theta   -sin theta ]
 *   [ e^{i phi} sin theta    cos theta ]
 * at rows/columns (k, l) of the identity, 1 <= k < l <= m. When
 * `inverted` the element contributes its inverse (a -theta splitter
 * followed by a -phi shift).
 */
struct BeamSplitter {
  int mode_k;
  int mode_l;
  double theta;
  double phi;
  bool inverted = false;
};

/** One phase shifter per mode: diag(e^{i phases_j}). */
struct PhaseShifters {
  std::vector<double> phases;
};

/** Attenuation on one mode: transmission amplitude d in [0, 1]. */
struct LossChannel {
  int mode;
  double amplitude;
};

/** Two-mode-squeezer gain on one mode: amplitude d > 1 (cosh r = d). */
struct GainChannel {
  int mode;
  double amplitude;
};

using OpticalElement =
    std::variant<BeamSplitter, PhaseShifters, LossChannel, GainChannel>;

/** Physical netlist; elements[0] is applied first at the input. */
struct ElementList {
  int modes;
  std::vector<OpticalElement> elements;
};

/** m x m matrix of one unitary element (loss/gain are not embeddable). */
Matrix embed_element(const OpticalElement& element, int modes);

/** Product of the embedded elements, last element leftmost. */
ScatteringMatrix reconstruct(const ElementList& list);

/**
 * Rectangular mesh: m(m-1)/2 beam splitters (plain on odd anti-diagonals,
 * inverted on even ones) around one set of output phase shifters.
 * Emitted angles are normalized to theta in [0, pi/2], phi in [0, 2 pi).
 */
ElementList clements_decompose(const ScatteringMatrix& s);

/** Triangular mesh: m(m-1)/2 plain beam splitters then phase shifters. */
ElementList reck_decompose(const ScatteringMatrix& s);

/** Doubled-size matrix with S G S^dagger = G, G = diag(I, -I). */
struct QuasiUnitary {
  int modes;    // m'; the matrix is 2m' x 2m'
  Matrix matrix;

  Eigen::Block<const Matrix> block_a() const {
    return matrix.topLeftCorner(modes, modes);
  }
  Eigen::Block<const Matrix> block_b() const {
    return matrix.topRightCorner(modes, modes);
  }
};

/** Max-norm deviation from S G S^dagger = G, plus the verdict. */
UnitarityReport is_quasiunitary(const Matrix& s, double tolerance = kUnitaryTol);

struct QuasiDecomposition {
  /** Netlist: W's mesh, then loss/gain channels, then U's mesh. */
  ElementList elements;
  QuasiUnitary quasi;
  /** Square factors of the padded singular value decomposition. */
  Matrix u_factor;
  Matrix w_factor;
  /** Diagonal of the padded D (pad positions carry 1). */
  RealVector singular_values;
  std::vector<LossChannel> losses;
  std::vector<GainChannel> gains;
  int total_modes;  // N + #loss + #gain

  bool passive() const { return gains.empty(); }
};

/**
 * Factors an arbitrary nonzero complex matrix into unitary meshes plus
 * loss/gain channels: M = U D W by singular value decomposition (square
 * factors; pad directions carry unit transmission), with d < 1 realized
 * as a beam splitter into a loss ancilla and d > 1 as a two-mode
 * squeezer onto a conjugate ancilla. The assembled quasiunitary obeys
 * S G S^dagger = G and its A block holds M in the top-left corner.
 */
QuasiDecomposition quasi_decompose(const Matrix& m_in);

}  // namespace photonlift
