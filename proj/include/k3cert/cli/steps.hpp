#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "k3cert/cli/config.hpp"
#include "k3cert/cli/report.hpp"
#include "k3cert/gitcurve.hpp"
#include "k3cert/linsys/dump.hpp"
#include "k3cert/rng.hpp"
#include "k3cert/scroll.hpp"

namespace k3cert::cli {

struct StepContext {
  const RunConfig& config;
  std::ostream* dump = nullptr;  // null unless --dump
};

class ReportBuilder {
 public:
  ReportBuilder(std::string step, const RunConfig& config, std::uint64_t trials) {
    report_.step = std::move(step);
    report_.seed = config.seed;
    report_.trials = trials;
  }

  bool check(std::string name, bool pass, std::string detail = {}) {
    report_.checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  }

  template <typename T>
  void expect_eq(const std::string& name, const T& actual, const T& expected) {
    check(name, actual == expected, "got " + std::to_string(actual) + ", expected " + std::to_string(expected));
  }

  Json& details() { return report_.details; }
  void trial_failed() { ++report_.failures; }

  /// Deterministic steps count failed checks as failures.
  Report finish(bool count_checks) {
    bool checks_ok = true;
    for (const auto& c : report_.checks) {
      checks_ok = checks_ok && c.pass;
      if (count_checks && !c.pass) ++report_.failures;
    }
    report_.pass = checks_ok && report_.failures == 0;
    return std::move(report_);
  }

 private:
  Report report_;
};

namespace detail {

inline std::string count_detail(std::uint64_t failures, std::uint64_t total) {
  return std::to_string(total - failures) + "/" + std::to_string(total) + " trials";
}

inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());
}

inline Json int_matrix_json(const gitcurve::IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

inline SplitMix64 trial_rng(const RunConfig& cfg, const std::string& stream, std::uint64_t index) {
  return SplitMix64(trial_seed(stream_seed(cfg.seed, stream), index));
}

/// Generic curve for the orbit steps: sampled until both it and its flip
/// have a normal form and the invariants are defined.
struct GenericCurve {
  gitcurve::CurveCoeffs coeffs;
  std::uint64_t resamples = 0;
};

inline GenericCurve sample_generic_curve(SplitMix64& rng, std::int64_t bound) {
  GenericCurve out;
  for (;;) {
    out.coeffs = gitcurve::sample_generic(rng, bound);
    try {
      gitcurve::normal_form(out.coeffs);
      gitcurve::normal_form(gitcurve::act(gitcurve::flip_elem(), out.coeffs));
      const auto s = gitcurve::normalize_slice(out.coeffs).coeffs;
      gitcurve::invariants(s);
      if (!s.at({3, 0, 2}).is_zero() && !s.at({3, 2, 0}).is_zero()) return out;
    } catch (const Degenerate&) {
    }
    ++out.resamples;
  }
}

}  // namespace detail

inline Report step_dims(const StepContext& ctx) {
  ReportBuilder b("dims", ctx.config, 1);
  const auto& chain = scroll::standard_chain();
  const GradedPiece cubics = monomial_basis(rings::P5(), {3});
  const GradedPiece q33 = monomial_basis(rings::Q3(), {3, 3});
  const GradedPiece q31 = monomial_basis(rings::Q3(), {3, 1});
  const GradedPiece o32 = monomial_basis(rings::Q2(), {3, 2});
  const LinMapQ segre = map_from_substitution(chain.sigma_segre, cubics);
  const LinMapQ scroll_map = map_from_substitution(chain.sigma_scroll, cubics);
  const LinMapQ conic = map_from_substitution(chain.sigma_conic, q31);
  const Subspace ir3 = scroll_map.kernel();
  const Subspace it3 = segre.kernel();

  auto& d = b.details();
  d["h0_P5_3"] = cubics.dim();
  d["h0_Q3_33"] = q33.dim();
  d["I_R3"] = ir3.dim();
  d["I_T3"] = it3.dim();
  d["O32"] = o32.dim();
  d["rank_sigma_segre_3"] = segre.rank();
  d["rank_sigma_scroll_3"] = scroll_map.rank();
  d["O31"] = q31.dim();
  d["rank_sigma_conic_31"] = conic.rank();

  b.expect_eq<std::size_t>("h0(O_P5(3))", cubics.dim(), 56);
  b.expect_eq<std::size_t>("h0(O(3,3)) on P1xP2", q33.dim(), 40);
  b.expect_eq<std::size_t>("dim I_R(3)", ir3.dim(), 28);
  b.expect_eq<std::size_t>("dim I_T(3)", it3.dim(), 16);
  b.expect_eq<std::size_t>("h0(O(3,2)) on P1xP1", o32.dim(), 12);
  b.check("sigma_segre surjective in degree 3", segre.is_surjective(),
          "rank " + std::to_string(segre.rank()) + " onto " + q33.label());
  b.check("sigma_scroll surjective in degree 3", scroll_map.is_surjective(),
          "rank " + std::to_string(scroll_map.rank()) + " onto " + scroll_map.target().label());
  b.check("sigma_conic bijective on Q3(3,1)", conic.is_injective() && conic.is_surjective(),
          "rank " + std::to_string(conic.rank()) + " of " + std::to_string(q31.dim()));
  b.check("rank-nullity", segre.rank() + it3.dim() == cubics.dim() && scroll_map.rank() + ir3.dim() == cubics.dim());
  b.check("I_T(3) inside I_R(3)", ir3.contains(it3));

  if (ctx.dump != nullptr) {
    dump(*ctx.dump, "sigma_segre_3", segre);
    dump(*ctx.dump, "sigma_scroll_3", scroll_map);
    dump(*ctx.dump, "sigma_conic_31", conic);
    dump(*ctx.dump, "I_R3", ir3);
    dump(*ctx.dump, "I_T3", it3);
  }
  return b.finish(true);
}

inline Report step_pi_factorization(const StepContext& ctx) {
  ReportBuilder b("pi-factorization", ctx.config, 1);
  const auto& chain = scroll::standard_chain();
  const auto r = scroll::verify_pi_factorization(chain);
  auto& d = b.details();
  d["I_R3"] = r.dim_IR3;
  d["image"] = r.dim_image;
  d["factor_piece"] = r.dim_factor_piece;
  d["kernel"] = r.dim_kernel;
  b.check("pi(I_R(3)) = F * Q3(3,1) as canonical subspaces", r.holds, "F = " + chain.F.to_string());
  b.expect_eq<std::size_t>("dim pi(I_R(3))", r.dim_image, 12);
  b.expect_eq<std::size_t>("dim F * Q3(3,1)", r.dim_factor_piece, 12);
  b.expect_eq<std::size_t>("dim ker(pi) on I_R(3)", r.dim_kernel, 16);

  const Poly mutated = parse_expr(rings::Q3(), "U0*U2");
  b.check("mutated factor rejected", !scroll::verify_pi_factorization(chain, mutated).holds,
          "factor " + mutated.to_string());
  const LinMapQ pi = map_from_substitution(chain.sigma_segre, monomial_basis(rings::P5(), {3}));
  b.check("pi vanishes on I_T(3)", pi.image_of(pi.kernel()).dim() == 0);

  if (ctx.dump != nullptr) {
    dump(*ctx.dump, "pi_I_R3", r.image);
    dump(*ctx.dump, "F_Q3_31", r.factor_piece);
  }
  return b.finish(true);
}

inline Report step_fibration(const StepContext& ctx) {
  ReportBuilder b("fibration", ctx.config, 1);
  const auto cert = scroll::fibration_certificate();
  auto& d = b.details();
  d["I_R3"] = cert.dim_IR3;
  d["I_T3"] = cert.dim_IT3;
  d["image"] = cert.dim_image;
  d["fiber_projective_dim"] = cert.fiber_projective_dim;
  d["base_projective_dim"] = cert.base_projective_dim;
  b.check("linear", cert.linear);
  b.check("surjective onto Q2(3,2)", cert.surjective, "rank " + std::to_string(cert.dim_image));
  b.check("kernel = I_T(3)", cert.kernel_is_IT3, "dim " + std::to_string(cert.fiber_projective_dim));
  b.check("factorization holds", cert.factorization_holds);
  b.check("ledger 16 + 12 = 28", cert.dim_IT3 + cert.dim_image == cert.dim_IR3 && cert.dim_IR3 == 28 &&
                                     cert.dim_IT3 == 16 && cert.dim_image == 12);
  b.check("projective fiber 16 over projective base 11",
          cert.fiber_projective_dim == 16 && cert.base_projective_dim == 11);
  const Poly c = parse_expr(rings::P5(), "W00*(W00*W12 - W01*W11)");
  const Poly expected = parse_expr(rings::Q2(), "X0^2*X1*Y0^2");
  const Poly got = scroll::fibration_image(c);
  b.check("image of W00*(W00*W12 - W01*W11)", got == expected, got.to_string());
  bool rejects = false;
  try {
    scroll::fibration_image(parse_expr(rings::P5(), "W00^3"));
  } catch (const NotInIdeal&) {
    rejects = true;
  }
  b.check("W00^3 is not in I_R(3)", rejects);

  if (ctx.dump != nullptr) {
    const GradedPiece cubics = monomial_basis(rings::P5(), {3});
    dump(*ctx.dump, "I_T3", map_from_substitution(scroll::standard_chain().sigma_segre, cubics).kernel());
  }
  return b.finish(true);
}

inline Report step_classify(const StepContext& ctx) {
  ReportBuilder b("classify", ctx.config, 1);
  const auto q = [](const char* t) { return parse_expr(rings::Q3(), t); };
  const Poly zero(rings::Q3());
  struct Case21 {
    const char* label;
    Poly a, b, c;
    scroll::HirzebruchTag expected;
  };
  const std::vector<Case21> cases21{
      {"(U0, U1, U2)", q("U0"), q("U1"), q("U2"), scroll::HirzebruchTag::F0},
      {"(U0, 0, U1)", q("U0"), zero, q("U1"), scroll::HirzebruchTag::F2},
      {"(U0, 0, U0)", q("U0"), zero, q("U0"), scroll::HirzebruchTag::Degenerate},
  };
  Json classes = Json::object();
  for (const auto& c : cases21) {
    const auto cls = scroll::classify_21(c.a, c.b, c.c);
    classes[std::string("21 ") + c.label] = to_string(cls.tag);
    b.check(std::string("(2,1) ") + c.label + " -> " + to_string(c.expected), cls.tag == c.expected,
            "branch conic rank " + std::to_string(cls.conic_rank));
  }
  const std::vector<std::pair<const char*, scroll::HirzebruchTag>> cases02{
      {"U0*U2 - U1^2", scroll::HirzebruchTag::F0},
      {"U0*U1", scroll::HirzebruchTag::Degenerate},
      {"U0^2", scroll::HirzebruchTag::Degenerate},
  };
  for (const auto& [text, expected] : cases02) {
    const auto cls = scroll::classify_02(q(text));
    classes[std::string("02 ") + text] = to_string(cls.tag);
    b.check(std::string("(0,2) ") + text + " -> " + to_string(expected), cls.tag == expected,
            "conic rank " + std::to_string(cls.conic_rank));
  }
  b.details()["classes"] = std::move(classes);
  return b.finish(true);
}

inline Report step_mult_iso(const StepContext& ctx) {
  const RunConfig& cfg = ctx.config;
  ReportBuilder b("mult-iso", cfg, cfg.trials);
  const auto f = [](const char* t) { return parse_expr(rings::F0(), t); };
  const std::size_t example = scroll::verify_mult_iso({f("A0*B0"), f("A0*B1 + A1*B0"), f("A1*B1")});
  b.check("psi = (A0B0, A0B1 + A1B0, A1B1) has product rank 6", example == 6, "rank " + std::to_string(example));
  const std::size_t with_bp = scroll::verify_mult_iso({f("A0*B0"), f("A0*B1"), f("A1*B0")});
  b.check("psi = (A0B0, A0B1, A1B0) has product rank 5", with_bp == 5, "rank " + std::to_string(with_bp));

  std::uint64_t rank6 = 0, base_points = 0, confirmed = 0, planted = 0, resamples = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = detail::trial_rng(cfg, "mult-iso", t);
    std::optional<std::array<Scalar, 4>> point;
    if (rng.below(4) == 0) point = scroll::sample_point(rng, cfg.bound);
    const auto sample = scroll::sample_psi(rng, cfg.bound, point);
    resamples += sample.resamples;
    const std::size_t r = scroll::verify_mult_iso(sample.psi);
    const auto bp = scroll::find_base_point(sample.psi);
    bool ok = (r == 6) == !bp.has_value();
    if (r == 6) ++rank6;
    if (bp) {
      ++base_points;
      bool zero = r == 5;
      for (const auto& p : sample.psi) zero = zero && p.evaluate(bp->coordinates()).is_zero();
      if (zero) ++confirmed;
      ok = ok && zero;
    }
    if (point) {
      ++planted;
      ok = ok && bp.has_value();
    }
    if (!ok) b.trial_failed();
  }
  auto& d = b.details();
  d["samples"] = cfg.trials;
  d["rank6"] = rank6;
  d["base_point_cases"] = base_points;
  d["base_points_confirmed"] = confirmed;
  d["planted_base_points"] = planted;
  d["dependent_resamples"] = resamples;
  b.check("rank 6 unless a base point is detected", rank6 + base_points == cfg.trials,
          std::to_string(rank6) + " rank 6, " + std::to_string(base_points) + " base point");
  b.check("every base point confirmed as a common zero", confirmed == base_points,
          std::to_string(confirmed) + "/" + std::to_string(base_points));
  return b.finish(false);
}

inline Report step_invariance(const StepContext& ctx) {
  const RunConfig& cfg = ctx.config;
  ReportBuilder b("invariance", cfg, cfg.trials);
  std::uint64_t resamples = 0, failed = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = detail::trial_rng(cfg, "invariance", t);
    const auto c = detail::sample_generic_curve(rng, cfg.bound);
    resamples += c.resamples;
    const gitcurve::GroupElem g = gitcurve::sample_group(rng, cfg.bound);
    const auto before = gitcurve::invariants(gitcurve::normalize_slice(c.coeffs).coeffs);
    bool ok = false;
    try {
      ok = gitcurve::invariants(gitcurve::normalize_slice(gitcurve::act(g, c.coeffs)).coeffs) == before;
    } catch (const Degenerate&) {
    }
    if (!ok) {
      ++failed;
      b.trial_failed();
    }
  }
  b.details()["pairs"] = cfg.trials;
  b.details()["degenerate_resamples"] = resamples;
  b.check("invariants o normalize_slice o act(g) = invariants o normalize_slice", failed == 0,
          detail::count_detail(failed, cfg.trials));
  return b.finish(false);
}

inline Report step_separation(const StepContext& ctx) {
  const RunConfig& cfg = ctx.config;
  ReportBuilder b("separation", cfg, 2 * cfg.trials);
  std::uint64_t orbit_fail = 0, random_fail = 0, resamples = 0, flips = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = detail::trial_rng(cfg, "separation/orbit", t);
    const auto c = detail::sample_generic_curve(rng, cfg.bound);
    resamples += c.resamples;
    const gitcurve::GroupElem g = gitcurve::sample_group(rng, cfg.bound);
    const auto gc = gitcurve::act(g, c.coeffs);
    bool ok = false;
    try {
      const auto r = gitcurve::same_orbit(c.coeffs, gc);
      ok = r.same && r.witness && gitcurve::act(*r.witness, c.coeffs) == gc;
      if (ok && r.witness->flip) ++flips;
    } catch (const Degenerate&) {
    }
    if (!ok) {
      ++orbit_fail;
      b.trial_failed();
    }
  }
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = detail::trial_rng(cfg, "separation/random", t);
    const auto c1 = detail::sample_generic_curve(rng, cfg.bound);
    const auto c2 = detail::sample_generic_curve(rng, cfg.bound);
    resamples += c1.resamples + c2.resamples;
    bool ok = false;
    try {
      const auto r = gitcurve::same_orbit(c1.coeffs, c2.coeffs);
      const auto i1 = gitcurve::invariants(gitcurve::normalize_slice(c1.coeffs).coeffs);
      const auto i2 = gitcurve::invariants(gitcurve::normalize_slice(c2.coeffs).coeffs);
      ok = !r.same && i1 != i2;
    } catch (const Degenerate&) {
    }
    if (!ok) {
      ++random_fail;
      b.trial_failed();
    }
  }
  auto& d = b.details();
  d["orbit_pairs"] = cfg.trials;
  d["orbit_pairs_with_flip"] = flips;
  d["random_pairs"] = cfg.trials;
  d["degenerate_resamples"] = resamples;
  b.check("orbit pairs: same_orbit with exact witness replay", orbit_fail == 0,
          detail::count_detail(orbit_fail, cfg.trials));
  b.check("random pairs: different orbits with differing invariants", random_fail == 0,
          detail::count_detail(random_fail, cfg.trials));
  return b.finish(false);
}

inline Report step_iota(const StepContext& ctx) {
  const RunConfig& cfg = ctx.config;
  ReportBuilder b("iota", cfg, cfg.trials);
  std::uint64_t resamples = 0, failed = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = detail::trial_rng(cfg, "iota", t);
    const auto c = detail::sample_generic_curve(rng, cfg.bound);
    resamples += c.resamples;
    if (!gitcurve::iota_relations(gitcurve::normalize_slice(c.coeffs).coeffs)) {
      ++failed;
      b.trial_failed();
    }
  }
  b.details()["points"] = cfg.trials;
  b.details()["degenerate_resamples"] = resamples;
  const bool symbolic = gitcurve::iota_relations_symbolic();
  b.details()["symbolic"] = symbolic;
  b.check("iota(J2) = 1/(I1 J2 I4 I6) and iota(J3) = I5/(I1 J3 I6) at random points", failed == 0,
          detail::count_detail(failed, cfg.trials));
  b.check("both identities hold on exponent vectors", symbolic);
  return b.finish(false);
}

inline Report step_lattice(const StepContext& ctx) {
  ReportBuilder b("lattice", ctx.config, 1);
  const auto r = gitcurve::exponent_lattice_report();
  auto& d = b.details();
  d["weight_matrix"] = detail::int_matrix_json(r.weights);
  d["kernel_basis"] = detail::int_matrix_json(r.kernel);
  d["kernel_rank"] = r.kernel_rank;
  Json members = Json::object();
  for (std::size_t i = 0; i < r.names.size(); ++i) members[r.names[i]] = bool(r.in_kernel[i]);
  d["members"] = std::move(members);
  d["index"] = detail::integer_json(r.index);
  b.expect_eq<std::size_t>("kernel rank", r.kernel_rank, 6);
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    b.check("exponent vector of " + r.names[i] + " in kernel", r.in_kernel[i]);
  }
  b.check("sublattice index computed", r.index != 0, "index " + r.index.str());
  return b.finish(true);
}

using StepFn = std::function<Report(const StepContext&)>;

inline const std::map<std::string, StepFn>& step_table() {
  static const std::map<std::string, StepFn> table{
      {"dims", step_dims},       {"pi-factorization", step_pi_factorization},
      {"fibration", step_fibration}, {"classify", step_classify},
      {"mult-iso", step_mult_iso}, {"invariance", step_invariance},
      {"separation", step_separation}, {"iota", step_iota},
      {"lattice", step_lattice},
  };
  return table;
}

}  // namespace k3cert::cli
