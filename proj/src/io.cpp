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

#include "photonlift/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace photonlift {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double parse_double(const std::string& text, std::size_t line) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + text.size() || text.empty()) {
    throw IoError("malformed number '" + text + "'", line);
  }
  return value;
}

int parse_int(const std::string& text, std::size_t line) {
  const double value = parse_double(text, line);
  const int rounded = static_cast<int>(value);
  if (static_cast<double>(rounded) != value) {
    throw IoError("expected an integer, got '" + text + "'", line);
  }
  return rounded;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return stream;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream stream(path);
  if (!stream) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return stream;
}

}  // namespace

std::string format_complex(Complex z) {
  const double re = (z.real() == 0.0) ? 0.0 : z.real();
  const double im = (z.imag() == 0.0) ? 0.0 : z.imag();
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gi", re, im);
  return buffer;
}

Complex parse_complex(const std::string& token) {
  if (token.empty()) {
    throw IoError("empty complex entry");
  }
  if (token.back() != 'i') {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double re = std::strtod(begin, &end);
    if (end != begin + token.size()) {
      throw IoError("malformed complex entry '" + token + "'");
    }
    return Complex(re, 0.0);
  }
  const std::string body = token.substr(0, token.size() - 1);
  // The split sign is the last '+'/'-' not belonging to an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
    }
  }
  std::string re_text;
  std::string im_text;
  if (split == std::string::npos) {
    re_text = "0";
    im_text = body;
  } else {
    re_text = body.substr(0, split);
    im_text = body.substr(split);
  }
  if (im_text == "+" || im_text == "-" || im_text.empty()) {
    im_text += "1";
  }
  const auto to_double = [&token](const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size()) {
      throw IoError("malformed complex entry '" + token + "'");
    }
    return value;
  };
  return Complex(to_double(re_text), to_double(im_text));
}

Matrix read_matrix(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::vector<Complex> row;
    for (const std::string& token : split_ws(line)) {
      try {
        row.push_back(parse_complex(token));
      } catch (const IoError& err) {
        throw IoError(err.what(), line_no);
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError("row has " + std::to_string(row.size()) +
                        " entries, expected " +
                        std::to_string(rows.front().size()),
                    line_no);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw IoError("no matrix rows found");
  }
  Matrix out(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return out;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream stream = open_input(path);
  return read_matrix(stream);
}

void write_matrix(std::ostream& out, const Matrix& matrix) {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_complex(matrix(i, j));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const Matrix& matrix) {
  std::ofstream stream = open_output(path);
  write_matrix(stream, matrix);
}

StateTerms read_state(std::istream& in) {
  StateTerms out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw IoError("state line lacks ':'", line_no);
    }
    OccupationVector ket;
    for (const std::string& token : split_ws(line.substr(0, colon))) {
      ket.push_back(parse_int(token, line_no));
    }
    if (ket.empty()) {
      throw IoError("state line lacks occupations", line_no);
    }
    const auto amp_tokens = split_ws(line.substr(colon + 1));
    if (amp_tokens.size() != 1) {
      throw IoError("state line needs exactly one amplitude", line_no);
    }
    try {
      out.weights.push_back(parse_complex(amp_tokens.front()));
    } catch (const IoError& err) {
      throw IoError(err.what(), line_no);
    }
    out.terms.push_back(std::move(ket));
  }
  if (out.terms.empty()) {
    throw IoError("no state terms found");
  }
  return out;
}

StateTerms read_state_file(const std::string& path) {
  std::ifstream stream = open_input(path);
  return read_state(stream);
}

void write_state(std::ostream& out, const StateVector& state) {
  for (std::size_t i = 0; i < state.basis.size(); ++i) {
    const Complex amp = state.amplitudes(static_cast<Eigen::Index>(i));
    if (amp == Complex(0.0)) continue;
    const OccupationVector& ket = state.basis.state(i);
    for (std::size_t j = 0; j < ket.size(); ++j) {
      if (j > 0) out << ' ';
      out << ket[j];
    }
    out << " : " << format_complex(amp) << '\n';
  }
}

void write_state_file(const std::string& path, const StateVector& state) {
  std::ofstream stream = open_output(path);
  write_state(stream, state);
}

void write_basis(std::ostream& out, const FockBasis& in_basis) {
  for (const OccupationVector& ket : in_basis.states()) {
    for (std::size_t j = 0; j < ket.size(); ++j) {
      if (j > 0) out << ' ';
      out << ket[j];
    }
    out << '\n';
  }
}

void write_basis_file(const std::string& path, const FockBasis& in_basis) {
  std::ofstream stream = open_output(path);
  write_basis(stream, in_basis);
}

ElementList read_elements(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int modes = 0;
  std::vector<OpticalElement> elements;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "modes") {
        throw IoError("expected header 'modes m'", line_no);
      }
      modes = parse_int(tokens[1], line_no);
      if (modes < 1) throw IoError("mode count must be >= 1", line_no);
      have_header = true;
      continue;
    }
    if (tokens[0] == "T") {
      if (tokens.size() != 5 && !(tokens.size() == 6 && tokens[5] == "inv")) {
        throw IoError("expected 'T k l theta phi [inv]'", line_no);
      }
      elements.emplace_back(BeamSplitter{
          parse_int(tokens[1], line_no), parse_int(tokens[2], line_no),
          parse_double(tokens[3], line_no), parse_double(tokens[4], line_no),
          tokens.size() == 6});
    } else if (tokens[0] == "D") {
      if (static_cast<int>(tokens.size()) != modes + 1) {
        throw IoError("expected 'D' with " + std::to_string(modes) + " phases",
                      line_no);
      }
      PhaseShifters ps;
      for (int i = 1; i <= modes; ++i) {
        ps.phases.push_back(parse_double(tokens[static_cast<std::size_t>(i)], line_no));
      }
      elements.emplace_back(std::move(ps));
    } else if (tokens[0] == "LOSS") {
      if (tokens.size() != 3) throw IoError("expected 'LOSS k d'", line_no);
      elements.emplace_back(LossChannel{parse_int(tokens[1], line_no),
                                        parse_double(tokens[2], line_no)});
    } else if (tokens[0] == "GAIN") {
      if (tokens.size() != 3) throw IoError("expected 'GAIN k d'", line_no);
      elements.emplace_back(GainChannel{parse_int(tokens[1], line_no),
                                        parse_double(tokens[2], line_no)});
    } else {
      throw IoError("unknown element '" + tokens[0] + "'", line_no);
    }
  }
  if (!have_header) {
    throw IoError("missing 'modes m' header");
  }
  return ElementList{modes, std::move(elements)};
}

ElementList read_elements_file(const std::string& path) {
  std::ifstream stream = open_input(path);
  return read_elements(stream);
}

void write_elements(std::ostream& out, const ElementList& list) {
  char buffer[64];
  const auto fmt = [&buffer](double value) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return std::string(buffer);
  };
  out << "modes " << list.modes << '\n';
  for (const OpticalElement& element : list.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
      out << "T " << bs->mode_k << ' ' << bs->mode_l << ' ' << fmt(bs->theta)
          << ' ' << fmt(bs->phi);
      if (bs->inverted) out << " inv";
      out << '\n';
    } else if (const auto* ps = std::get_if<PhaseShifters>(&element)) {
      out << "D";
      for (double phase : ps->phases) out << ' ' << fmt(phase);
      out << '\n';
    } else if (const auto* loss = std::get_if<LossChannel>(&element)) {
      out << "LOSS " << loss->mode << ' ' << fmt(loss->amplitude) << '\n';
    } else if (const auto* gain = std::get_if<GainChannel>(&element)) {
      out << "GAIN " << gain->mode << ' ' << fmt(gain->amplitude) << '\n';
    }
  }
}

void write_elements_file(const std::string& path, const ElementList& list) {
  std::ofstream stream = open_output(path);
  write_elements(stream, list);
}

}  // namespace photonlift
