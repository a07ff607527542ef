// Command-line front end: reads a problem spec file, dispatches analyses,
// emits text reports and optional key=value blocks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aclab/cohomology.hpp"
#include "aclab/invariant.hpp"
#include "aclab/ranklab.hpp"
#include "aclab/specfile.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;

struct Options {
  std::string spec_path;
  std::string format = "text";
};

aclab::ProblemSpec load_spec(const Options& opt) {
  if (opt.spec_path.empty())
    throw aclab::ParseError("this subcommand needs --spec PATH");
  std::ifstream in(opt.spec_path);
  if (!in) throw aclab::ParseError("cannot open spec file '" + opt.spec_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return aclab::parse_spec(buf.str());
}

const aclab::LieAlgebraSpec& need_algebra(const aclab::ProblemSpec& spec) {
  if (!spec.algebra) throw aclab::ParseError("spec file has no 'algebra' section");
  return *spec.algebra;
}

const aclab::AlmostComplexStructure& need_structure(const aclab::ProblemSpec& spec) {
  if (!spec.structure) throw aclab::ParseError("spec file has no J section (J.psi or J.matrix)");
  return *spec.structure;
}

void kv_separator(std::ostream& os) { os << "---\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_validate(const Options& opt) {
  aclab::ProblemSpec spec = load_spec(opt);
  std::ostringstream kv;
  std::cout << "spec: ok\n";
  if (spec.algebra) {
    std::cout << "algebra: dim " << spec.algebra->dim() << ", structure constants "
              << spec.algebra->salamon_string() << "\n";
    std::cout << "jacobi: d^2 = 0 holds on every basis form\n";
    kv << "dim=" << spec.algebra->dim() << "\n"
       << "jacobi=ok\n"
       << "abelian=" << bool_text(spec.algebra->is_abelian()) << "\n";
  }
  if (spec.structure) {
    std::cout << "J: squares to -Id in dimension " << spec.structure->dim() << "\n";
    kv << "j_squared=-id\n";
    if (spec.algebra && spec.algebra->dim() == spec.structure->dim()) {
      bool integrable = aclab::nijenhuis(*spec.algebra, *spec.structure).is_zero();
      std::cout << "nijenhuis tensor: " << (integrable ? "zero (integrable)" : "nonzero (non-integrable)")
                << "\n";
      kv << "nijenhuis_zero=" << bool_text(integrable) << "\n";
    }
  }
  if (spec.metric) {
    std::cout << "metric: symmetric positive definite\n";
    kv << "metric=ok\n";
  }
  if (spec.frame_omega) {
    std::cout << "frame pairing: " << spec.frame_omega->size() << "x"
              << spec.frame_omega->size() << " matrix present\n";
  }
  if (opt.format == "kv") {
    kv_separator(std::cout);
    std::cout << kv.str();
  }
  return kExitOk;
}

int cmd_cohomology(const Options& opt) {
  aclab::ProblemSpec spec = load_spec(opt);
  const aclab::LieAlgebraSpec& g = need_algebra(spec);
  std::cout << "invariant (Lie-algebra) cohomology of " << g.salamon_string() << "\n";
  std::ostringstream kv;
  for (int k = 0; k <= g.dim(); ++k) {
    aclab::CohomologySpace s = aclab::cohomology(g, k);
    std::cout << "b" << k << "=" << s.betti;
    if (!s.quotient_basis.empty()) {
      std::cout << "  representatives: ";
      for (std::size_t i = 0; i < s.quotient_basis.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << "[" << aclab::to_string(s.quotient_basis[i]) << "]";
      }
    }
    std::cout << "\n";
    kv << "b" << k << "=" << s.betti << "\n";
  }
  if (opt.format == "kv") {
    kv_separator(std::cout);
    std::cout << kv.str();
  }
  return kExitOk;
}

int cmd_invariant(const Options& opt) {
  aclab::ProblemSpec spec = load_spec(opt);
  const aclab::LieAlgebraSpec& g = need_algebra(spec);
  const aclab::AlmostComplexStructure& j = need_structure(spec);
  if (g.dim() != j.dim()) throw aclab::ParseError("algebra and J dimensions differ");
  aclab::PurityReport rep = aclab::purity_report(g, j);
  std::cout << "invariant-cohomology type decomposition at degree 2\n";
  std::cout << "  b2                 " << rep.betti2 << "\n";
  std::cout << "  dim H+             " << rep.h_plus.dim() << "\n";
  std::cout << "  dim H-             " << rep.h_minus.dim() << "\n";
  std::cout << "  dim intersection   " << rep.dim_intersection << "\n";
  std::cout << "  dim sum            " << rep.dim_sum << "\n";
  std::cout << "  pure=" << bool_text(rep.is_pure) << " full=" << bool_text(rep.is_full) << "\n";
  if (opt.format == "kv") {
    kv_separator(std::cout);
    std::cout << "betti2=" << rep.betti2 << "\n"
              << "dim_h_plus=" << rep.h_plus.dim() << "\n"
              << "dim_h_minus=" << rep.h_minus.dim() << "\n"
              << "dim_intersection=" << rep.dim_intersection << "\n"
              << "dim_sum=" << rep.dim_sum << "\n"
              << "pure=" << bool_text(rep.is_pure) << "\n"
              << "full=" << bool_text(rep.is_full) << "\n";
  }
  return kExitOk;
}

int cmd_frame(const Options& opt) {
  aclab::ProblemSpec spec = load_spec(opt);
  if (!spec.frame_omega) throw aclab::ParseError("spec file has no 'frame.omega' section");
  const int dim = static_cast<int>(spec.frame_omega->size());
  aclab::Mat<aclab::Rational> vectors =
      spec.frame_vectors ? *spec.frame_vectors : aclab::identity_matrix<aclab::Rational>(dim);
  aclab::FrameSet frame = aclab::symplectic_gram_schmidt(vectors, *spec.frame_omega);
  std::cout << "symplectic frame (rows V1..Vn, W1..Wn):\n";
  for (const auto& v : frame.vectors) {
    std::cout << "  [";
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) std::cout << ", ";
      std::cout << aclab::to_string(v[c]);
    }
    std::cout << "]\n";
  }
  std::cout << "pairing: standard symplectic block form (verified exactly)\n";

  const int n = dim / 2;
  std::ostringstream kv;
  kv << "dim=" << dim << "\nframe=ok\n";
  if (n % 2 == 0) {
    aclab::AntiInvariantPair pair = aclab::anti_invariant_pair_from_frame(frame);
    std::cout << "anti-invariant pair (" << pair.construction_note << "):\n";
    std::cout << "  omega = " << aclab::to_string(pair.omega) << "\n";
    std::cout << "  J matrix rows:\n";
    for (const auto& row : pair.structure.matrix()) {
      std::cout << "    [";
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) std::cout << ", ";
        std::cout << aclab::to_string(row[c]);
      }
      std::cout << "]\n";
    }
    std::cout << "  J^2 = -Id and J(omega) = -omega verified exactly\n";
    kv << "anti_invariant=ok\n";
    if (opt.format == "kv") {
      kv_separator(std::cout);
      std::cout << kv.str();
    }
    return kExitOk;
  }
  std::cout << "anti-invariant construction rejected: n = " << n
            << " is odd (the built form would satisfy J(omega) = -omega with omega^n != 0, "
               "which cannot happen)\n";
  if (opt.format == "kv") {
    kv_separator(std::cout);
    kv << "anti_invariant=rejected_n_odd\n";
    std::cout << kv.str();
  }
  return kExitDataError;
}

int cmd_hodge(const Options& opt) {
  aclab::ProblemSpec spec = load_spec(opt);
  if (!spec.metric) throw aclab::ParseError("spec file has no 'metric' section");
  aclab::Mat<aclab::Rational> star = aclab::hodge_star_2_matrix(*spec.metric);
  std::cout << "star operator on 2-forms (rows, lexicographic 2-index basis):\n";
  for (const auto& row : star) {
    std::cout << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) std::cout << ", ";
      std::cout << aclab::to_string(row[c]);
    }
    std::cout << "]\n";
  }
  aclab::Mat<aclab::Rational> plus = star;
  for (int i = 0; i < 6; ++i) plus[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= aclab::Rational(1);
  const int self_dual_dim = static_cast<int>(aclab::kernel_basis(plus, 6).size());
  std::cout << "self-dual dimension: " << self_dual_dim << "\n";
  std::ostringstream kv;
  kv << "self_dual_dim=" << self_dual_dim << "\n";

  int exit_code = kExitOk;
  if (spec.structure && spec.structure->dim() == 4) {
    if (!spec.metric->compatible_with(*spec.structure)) {
      std::cout << "J present but not compatible with the metric; span identity skipped\n";
      kv << "span_identity=skipped\n";
    } else {
      aclab::KForm omega = aclab::fundamental_2form(*spec.metric, *spec.structure);
      std::cout << "fundamental form: " << aclab::to_string(omega) << "\n";
      auto basis2 = aclab::multi_index_basis(4, 2);
      aclab::Mat<aclab::Rational> span_rows;
      span_rows.push_back(aclab::coordinate_row(omega, basis2));
      for (const auto& f : aclab::lambda_eigenspace_basis(*spec.structure, -1))
        span_rows.push_back(aclab::coordinate_row(f, basis2));
      auto span_ech = aclab::rref(span_rows, 6);
      auto self_dual = aclab::rref(aclab::kernel_basis(plus, 6), 6);
      const bool identity = span_ech.rows == self_dual.rows;
      std::cout << "self-dual space equals span{omega} + anti-invariants: "
                << (identity ? "verified" : "FAILED") << "\n";
      kv << "span_identity=" << (identity ? "ok" : "failed") << "\n";
      if (!identity) exit_code = kExitVerificationFailure;
    }
  }
  if (opt.format == "kv") {
    kv_separator(std::cout);
    std::cout << kv.str();
  }
  return exit_code;
}

struct RankScanArgs {
  int samples = 10000;
  double tol = 1e-8;
  double rho = 0.25;
  std::uint64_t seed = 20240801;
  std::string report_path;
  std::string csv_path;
};

int cmd_rank_scan(const Options& opt, const RankScanArgs& args) {
  aclab::BumpProfile bump;
  bump.rho = args.rho;
  aclab::RankScanResult scan = aclab::rank_scan(bump, args.samples, args.tol, args.seed);
  std::vector<aclab::TorusPoint> id_points =
      aclab::sample_points(args.seed + 1, std::min(args.samples, 1000));
  aclab::IdentityReport identities = aclab::identity_check(bump, id_points);
  std::vector<aclab::TorusPoint> fd_points = aclab::sample_points(args.seed + 2, 40);
  aclab::ClosednessReport closed_h = aclab::closedness_check(bump, fd_points, 1e-3);
  aclab::ClosednessReport closed_h2 = aclab::closedness_check(bump, fd_points, 5e-4);
  const double order_ratio =
      closed_h2.max_residual > 0 ? closed_h.max_residual / closed_h2.max_residual : 4.0;

  std::ostringstream rep;
  rep << "rank scan over " << args.samples << " uniform points (seed " << args.seed
      << ", tolerance " << args.tol << ", rho " << args.rho << ")\n";
  rep << "histogram:\n";
  for (const auto& [rank, count] : scan.histogram)
    rep << "  rank " << rank << ": " << count << "\n";
  rep << "rank dichotomy {0,4}: " << (scan.dichotomy_holds() ? "holds" : "VIOLATED") << "\n";
  for (const auto& v : scan.rank_violations) {
    rep << "  violation at (";
    for (int c = 0; c < 6; ++c) rep << (c ? "," : "") << v.point.x[static_cast<std::size_t>(c)];
    rep << ") rank " << v.rank << ", singular values";
    for (double sv : v.singular_values) rep << " " << sv;
    rep << "\n";
  }
  rep << "pointwise identities at " << id_points.size() << " points:\n";
  rep << "  max |omega^2 - 2r(tau + dr^sigma)^dsigma| = " << identities.max_square_residual
      << "\n";
  rep << "  max |omega^3| = " << identities.max_cube_residual << "\n";
  rep << "  max |dsigma^dsigma| = " << identities.max_dsigma_sq_residual << "\n";
  rep << "  within tolerances: " << (identities.ok() ? "yes" : "NO") << "\n";
  rep << "closedness (central differences, d omega = 0):\n";
  rep << "  max residual at h=1e-3: " << closed_h.max_residual << "\n";
  rep << "  max residual at h=5e-4: " << closed_h2.max_residual << "\n";
  rep << "  residual ratio (expect ~4 for order 2): " << order_ratio << "\n";
  rep << "fiber integral of the dx5^dx6 component: " << aclab::fiber_integral(bump) << "\n";
  rep << aclab::no_anti_invariant_note();

  std::cout << rep.str();
  if (!args.report_path.empty()) {
    std::ofstream out(args.report_path);
    out << rep.str();
  }
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path);
    csv << "x1,x2,x3,x4,x5,x6,rank,smallest_retained_sv\n";
    for (const auto& s : scan.samples) {
      for (int c = 0; c < 6; ++c) csv << s.point.x[static_cast<std::size_t>(c)] << ",";
      csv << s.rank << "," << s.smallest_retained_sv << "\n";
    }
  }

  const bool order2 = order_ratio > 3.0 && order_ratio < 5.0;
  if (opt.format == "kv") {
    kv_separator(std::cout);
    std::cout << "samples=" << args.samples << "\n";
    for (const auto& [rank, count] : scan.histogram)
      std::cout << "rank" << rank << "=" << count << "\n";
    std::cout << "dichotomy=" << (scan.dichotomy_holds() ? "ok" : "violated") << "\n"
              << "identities=" << (identities.ok() ? "ok" : "violated") << "\n"
              << "fd_order2=" << (order2 ? "ok" : "violated") << "\n";
  }
  if (!scan.dichotomy_holds() || !identities.ok() || !order2) return kExitVerificationFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost complex structure laboratory"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--spec", opt.spec_path, "problem spec file");
  app.add_option("--format", opt.format, "output format: text or kv")
      ->check(CLI::IsMember({"text", "kv"}));

  auto* validate = app.add_subcommand("validate", "parse and validate the spec file");
  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers and representatives");
  auto* invariant = app.add_subcommand("invariant", "purity/fullness report at degree 2");
  auto* frame = app.add_subcommand("frame", "symplectic frame and anti-invariant pair");
  auto* hodge = app.add_subcommand("hodge", "star operator on 2-forms (dimension 4)");
  auto* rank_scan = app.add_subcommand("rank-scan", "pointwise rank scan on the 6-torus");

  RankScanArgs rs;
  rank_scan->add_option("--samples", rs.samples, "number of sample points")
      ->check(CLI::PositiveNumber);
  rank_scan->add_option("--tol", rs.tol, "relative singular value tolerance")
      ->check(CLI::PositiveNumber);
  rank_scan->add_option("--rho", rs.rho, "bump support radius in (0, 1/2)");
  rank_scan->add_option("--seed", rs.seed, "sampling seed");
  rank_scan->add_option("--report", rs.report_path, "write the text report to this path");
  rank_scan->add_option("--csv", rs.csv_path, "write per-sample CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (cohomology->parsed()) return cmd_cohomology(opt);
    if (invariant->parsed()) return cmd_invariant(opt);
    if (frame->parsed()) return cmd_frame(opt);
    if (hodge->parsed()) return cmd_hodge(opt);
    if (rank_scan->parsed()) {
      if (rs.rho <= 0.0 || rs.rho >= 0.5) {
        std::cerr << "error: --rho must lie in (0, 1/2)\n";
        return kExitUsage;
      }
      return cmd_rank_scan(opt, rs);
    }
  } catch (const aclab::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}
