#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aclab/acs.hpp"
#include "aclab/frames.hpp"
#include "aclab/liealg.hpp"

namespace aclab {

/// One parsed problem description, enough to drive every subcommand that its
/// sections cover. Parsing validates as it goes: the algebra passes the
/// Jacobi check, J squares to -Id, the metric is symmetric positive definite.
struct ProblemSpec {
  std::optional<LieAlgebraSpec> algebra;
  std::optional<AlmostComplexStructure> structure;
  std::vector<ComplexKForm> psis;  // nonempty iff J was given through (1,0)-forms
  std::optional<MetricSpec> metric;
  std::optional<Mat<Rational>> frame_omega;
  std::optional<Mat<Rational>> frame_vectors;

  bool operator==(const ProblemSpec& o) const {
    return algebra == o.algebra &&
           ((structure.has_value() && o.structure.has_value() && *structure == *o.structure) ||
            (!structure && !o.structure)) &&
           ((metric.has_value() && o.metric.has_value() && metric->matrix() == o.metric->matrix()) ||
            (!metric && !o.metric)) &&
           frame_omega == o.frame_omega && frame_vectors == o.frame_vectors;
  }
};

/// Key = value lines; '#' comments; values are quoted strings, lists of
/// quoted strings, or (possibly multi-line) rational matrices. Keys:
/// algebra, J.psi, J.matrix, metric, frame.omega, frame.vectors.
/// Throws ParseError (with line), JacobiError, NotAComplexStructure,
/// MetricError or FrameError.
ProblemSpec parse_spec(std::string_view text);

/// Canonical text whose parse reproduces the spec value.
std::string print_spec(const ProblemSpec& spec);

}  // namespace aclab
