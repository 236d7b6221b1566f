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

#include "photonlift/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace photonlift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  return phi;
}

Matrix beam_splitter_block(double theta, double phi) {
  Matrix t(2, 2);
  const Complex shift = std::exp(Complex(0.0, phi));
  t(0, 0) = shift * std::cos(theta);
  t(0, 1) = -std::sin(theta);
  t(1, 0) = shift * std::sin(theta);
  t(1, 1) = std::cos(theta);
  return t;
}

/** Nulling angles so that e^{-i phi} cos(theta) a - sin(theta) b = 0. */
std::pair<double, double> column_null_angles(Complex a, Complex b) {
  const double theta = std::atan2(std::abs(a), std::abs(b));
  double phi = 0.0;
  if (std::abs(a) > 0.0 && std::abs(b) > 0.0) {
    phi = std::arg(a) - std::arg(b);
  } else if (std::abs(a) > 0.0) {
    phi = std::arg(a);
  }
  return {theta, wrap_phase(phi)};
}

/** Nulling angles so that e^{i phi} sin(theta) a + cos(theta) b = 0. */
std::pair<double, double> row_null_angles(Complex a, Complex b) {
  const double theta = std::atan2(std::abs(b), std::abs(a));
  double phi = 0.0;
  if (std::abs(a) > 0.0 && std::abs(b) > 0.0) {
    phi = std::arg(-b) - std::arg(a);
  } else if (std::abs(b) > 0.0) {
    phi = std::arg(-b);
  }
  return {theta, wrap_phase(phi)};
}

/** work <- work * T_{k,l}(theta, phi)^{-1}, columns k and l (0-based). */
void apply_inverse_right(Matrix& work, int k, int l, double theta, double phi) {
  const Matrix t = beam_splitter_block(theta, phi).adjoint();
  const Vector col_k = work.col(k);
  const Vector col_l = work.col(l);
  work.col(k) = col_k * t(0, 0) + col_l * t(1, 0);
  work.col(l) = col_k * t(0, 1) + col_l * t(1, 1);
}

/** work <- T_{k,l}(theta, phi) * work, rows k and l (0-based). */
void apply_left(Matrix& work, int k, int l, double theta, double phi) {
  const Matrix t = beam_splitter_block(theta, phi);
  const Eigen::RowVectorXcd row_k = work.row(k);
  const Eigen::RowVectorXcd row_l = work.row(l);
  work.row(k) = t(0, 0) * row_k + t(0, 1) * row_l;
  work.row(l) = t(1, 0) * row_k + t(1, 1) * row_l;
}

PhaseShifters diagonal_phases(const Matrix& work) {
  PhaseShifters d;
  d.phases.reserve(static_cast<std::size_t>(work.rows()));
  for (Eigen::Index i = 0; i < work.rows(); ++i) {
    d.phases.push_back(wrap_phase(std::arg(work(i, i))));
  }
  return d;
}

}  // namespace

Matrix embed_element(const OpticalElement& element, int modes) {
  if (modes < 1) {
    throw DimensionError("embed_element requires m >= 1");
  }
  if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
    if (bs->mode_k < 1 || bs->mode_l <= bs->mode_k || bs->mode_l > modes) {
      throw ArgumentError("beam splitter requires 1 <= k < l <= m, got k = " +
                          std::to_string(bs->mode_k) + ", l = " +
                          std::to_string(bs->mode_l));
    }
    Matrix out = Matrix::Identity(modes, modes);
    Matrix block = beam_splitter_block(bs->theta, bs->phi);
    if (bs->inverted) block = block.adjoint().eval();
    const int k = bs->mode_k - 1;
    const int l = bs->mode_l - 1;
    out(k, k) = block(0, 0);
    out(k, l) = block(0, 1);
    out(l, k) = block(1, 0);
    out(l, l) = block(1, 1);
    return out;
  }
  if (const auto* ps = std::get_if<PhaseShifters>(&element)) {
    if (static_cast<int>(ps->phases.size()) != modes) {
      throw ArgumentError("phase shifter list has " +
                          std::to_string(ps->phases.size()) + " phases for " +
                          std::to_string(modes) + " modes");
    }
    Matrix out = Matrix::Zero(modes, modes);
    for (int i = 0; i < modes; ++i) {
      out(i, i) = std::exp(Complex(0.0, ps->phases[static_cast<std::size_t>(i)]));
    }
    return out;
  }
  throw ArgumentError(
      "loss/gain channels have no unitary embedding; use the quasiunitary "
      "pipeline");
}

ScatteringMatrix reconstruct(const ElementList& list) {
  Matrix product = Matrix::Identity(list.modes, list.modes);
  for (const OpticalElement& element : list.elements) {
    if (std::holds_alternative<LossChannel>(element) ||
        std::holds_alternative<GainChannel>(element)) {
      throw ArgumentError(
          "reconstruct only covers unitary element lists; loss/gain networks "
          "are reassembled by quasi_decompose");
    }
    product = embed_element(element, list.modes) * product;
  }
  return ScatteringMatrix(std::move(product));
}

ElementList clements_decompose(const ScatteringMatrix& s) {
  const int m = s.modes();
  Matrix work = s.matrix();
  std::vector<BeamSplitter> odd_side;   // right-multiplied inverses
  std::vector<BeamSplitter> even_side;  // left-multiplied, in application order

  for (int diag = 1; diag < m; ++diag) {
    if (diag % 2 == 1) {
      for (int j = 0; j < diag; ++j) {
        const int row = m - 1 - j;      // 0-based
        const int col = diag - 1 - j;   // 0-based; null via columns (col, col+1)
        const auto [theta, phi] =
            column_null_angles(work(row, col), work(row, col + 1));
        apply_inverse_right(work, col, col + 1, theta, phi);
        odd_side.push_back(BeamSplitter{col + 1, col + 2, theta, phi, false});
      }
    } else {
      for (int j = 1; j <= diag; ++j) {
        const int row = m - 1 + j - diag;  // 0-based
        const int col = j - 1;             // 0-based; null via rows (row-1, row)
        const auto [theta, phi] =
            row_null_angles(work(row - 1, col), work(row, col));
        apply_left(work, row - 1, row, theta, phi);
        even_side.push_back(BeamSplitter{row, row + 1, theta, phi, true});
      }
    }
  }

  ElementList list{m, {}};
  for (const BeamSplitter& bs : odd_side) list.elements.emplace_back(bs);
  list.elements.emplace_back(diagonal_phases(work));
  for (auto it = even_side.rbegin(); it != even_side.rend(); ++it) {
    list.elements.emplace_back(*it);
  }
  return list;
}

ElementList reck_decompose(const ScatteringMatrix& s) {
  const int m = s.modes();
  Matrix work = s.matrix();
  ElementList list{m, {}};
  for (int row = m - 1; row >= 1; --row) {
    for (int col = row - 1; col >= 0; --col) {
      // Null (row, col) against the diagonal pivot via columns (col, row).
      const auto [theta, phi] =
          column_null_angles(work(row, col), work(row, row));
      apply_inverse_right(work, col, row, theta, phi);
      list.elements.emplace_back(
          BeamSplitter{col + 1, row + 1, theta, phi, false});
    }
  }
  list.elements.emplace_back(diagonal_phases(work));
  return list;
}

UnitarityReport is_quasiunitary(const Matrix& s, double tolerance) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
    throw ArgumentError("is_quasiunitary requires a square matrix of even dimension");
  }
  const Eigen::Index half = s.rows() / 2;
  Vector g(s.rows());
  g.head(half).setConstant(1.0);
  g.tail(half).setConstant(-1.0);
  const Matrix gram = s * g.asDiagonal() * s.adjoint();
  const double dev = (gram - Matrix(g.asDiagonal())).cwiseAbs().maxCoeff();
  return UnitarityReport{dev, tolerance, dev <= tolerance};
}

QuasiDecomposition quasi_decompose(const Matrix& m_in) {
  if (m_in.rows() < 1 || m_in.cols() < 1) {
    throw DimensionError("quasi_decompose requires a nonempty matrix");
  }
  if (m_in.cwiseAbs().maxCoeff() == 0.0) {
    throw DegenerateStateError("quasi_decompose: input matrix is zero");
  }
  const Eigen::Index n1 = m_in.rows();
  const Eigen::Index n2 = m_in.cols();
  const Eigen::Index n = std::max(n1, n2);
  const Eigen::Index rank_bound = std::min(n1, n2);

  const Eigen::JacobiSVD<Matrix> svd(
      m_in, Eigen::ComputeFullU | Eigen::ComputeFullV);

  Matrix u_factor = Matrix::Identity(n, n);
  u_factor.topLeftCorner(n1, n1) = svd.matrixU();
  Matrix w_factor = Matrix::Identity(n, n);
  w_factor.topLeftCorner(n2, n2) = svd.matrixV().adjoint();
  RealVector d = RealVector::Ones(n);
  d.head(rank_bound) = svd.singularValues();

  // Deterministic gauge: largest entry of each left column real positive;
  // the compensating phase moves into W through the diagonal.
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index arg_max = 0;
    u_factor.col(j).cwiseAbs().maxCoeff(&arg_max);
    const Complex top = u_factor(arg_max, j);
    if (std::abs(top) > 0.0) {
      const Complex phase = top / std::abs(top);
      u_factor.col(j) *= std::conj(phase);
      w_factor.row(j) *= phase;
    }
  }

  // Classify the diagonal; pad positions are exactly 1 by construction.
  std::vector<LossChannel> losses;
  std::vector<GainChannel> gains;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::abs(d(j) - 1.0) <= 1e-10) continue;
    if (d(j) < 1.0) {
      losses.push_back(LossChannel{static_cast<int>(j) + 1, d(j)});
    } else {
      gains.push_back(GainChannel{static_cast<int>(j) + 1, d(j)});
    }
  }
  const int total =
      static_cast<int>(n) + static_cast<int>(losses.size() + gains.size());

  // Middle factor on the doubled space: loss beam splitters couple the
  // mode to its ancilla inside A; squeezers couple across A and B.
  Matrix a_mid = Matrix::Identity(total, total);
  Matrix b_mid = Matrix::Zero(total, total);
  int ancilla = static_cast<int>(n);
  for (const LossChannel& loss : losses) {
    const int j = loss.mode - 1;
    const double t = loss.amplitude;
    const double r = std::sqrt(std::max(1.0 - t * t, 0.0));
    a_mid(j, j) = t;
    a_mid(j, ancilla) = r;
    a_mid(ancilla, j) = -r;
    a_mid(ancilla, ancilla) = t;
    ++ancilla;
  }
  for (const GainChannel& gain : gains) {
    const int j = gain.mode - 1;
    const double cosh_r = gain.amplitude;
    const double sinh_r = std::sqrt(cosh_r * cosh_r - 1.0);
    a_mid(j, j) = cosh_r;
    a_mid(ancilla, ancilla) = cosh_r;
    b_mid(j, ancilla) = sinh_r;
    b_mid(ancilla, j) = sinh_r;
    ++ancilla;
  }

  Matrix u_wide = Matrix::Identity(total, total);
  u_wide.topLeftCorner(n, n) = u_factor;
  Matrix w_wide = Matrix::Identity(total, total);
  w_wide.topLeftCorner(n, n) = w_factor;

  const Matrix a_block = u_wide * a_mid * w_wide;
  const Matrix b_block = u_wide * b_mid * w_wide.conjugate();

  Matrix quasi(2 * total, 2 * total);
  quasi.topLeftCorner(total, total) = a_block;
  quasi.topRightCorner(total, total) = b_block;
  quasi.bottomLeftCorner(total, total) = b_block.conjugate();
  quasi.bottomRightCorner(total, total) = a_block.conjugate();

  // Netlist: W's mesh first, channels in the middle, U's mesh last. The
  // meshes are decomposed over the N padded modes; their phase lines are
  // widened to the full mode count (zero shift on ancillas).
  const auto append_mesh = [total](ElementList& out, const ElementList& mesh) {
    for (const auto& element : mesh.elements) {
      if (const auto* ps = std::get_if<PhaseShifters>(&element)) {
        PhaseShifters widened = *ps;
        widened.phases.resize(static_cast<std::size_t>(total), 0.0);
        out.elements.emplace_back(std::move(widened));
      } else {
        out.elements.push_back(element);
      }
    }
  };
  ElementList netlist{total, {}};
  append_mesh(netlist, clements_decompose(ScatteringMatrix(w_factor)));
  for (const LossChannel& loss : losses) netlist.elements.emplace_back(loss);
  for (const GainChannel& gain : gains) netlist.elements.emplace_back(gain);
  append_mesh(netlist, clements_decompose(ScatteringMatrix(u_factor)));

  return QuasiDecomposition{std::move(netlist),
                            QuasiUnitary{total, std::move(quasi)},
                            std::move(u_factor),
                            std::move(w_factor),
                            std::move(d),
                            std::move(losses),
                            std::move(gains),
                            total};
}

}  // namespace photonlift
