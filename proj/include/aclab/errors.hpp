#pragma once

#include <stdexcept>
#include <string>

namespace aclab {

/// Structural misuse: operands from different ambient dimensions.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structural misuse: operand of the wrong form degree.
struct DegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Text input rejected; carries a 1-based position when known.
struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int line_ = 0, int column_ = 0)
      : std::runtime_error(what), line(line_), column(column_) {}
};

/// d∘d ≠ 0 for the proposed structure equations.
struct JacobiError : std::runtime_error {
  int basis_index;  // 1-based index i with d(de^i) ≠ 0
  std::string residual;
  JacobiError(int index, std::string residual_text)
      : std::runtime_error("structure equations violate d^2 = 0 at de^" + std::to_string(index) +
                           ": d(de^" + std::to_string(index) + ") = " + residual_text),
        basis_index(index),
        residual(std::move(residual_text)) {}
};

/// A cohomology operation was fed a non-closed representative.
struct NotClosedError : std::runtime_error {
  std::string differential;
  explicit NotClosedError(std::string d_text)
      : std::runtime_error("representative is not closed: d = " + d_text),
        differential(std::move(d_text)) {}
};

/// Candidate matrix does not square to -Id.
struct NotAComplexStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The given (1,0)-forms do not span half of the complexified dual space.
struct NotACoframe : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Metric input rejected (not symmetric / not positive definite / wrong dim).
struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Skew pairing degenerate, or frame input unusable.
struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aclab
