#include "hyperpann/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "hyperpann/errors.hpp"
#include "hyperpann/kinematics.hpp"
#include "hyperpann/response.hpp"

namespace hyperpann {

namespace {

constexpr std::size_t kMaxWitnesses = 64;
constexpr double kClosedFormTolerance = 1e-9;
constexpr double kBirkhoffTolerance = 1e-10;
constexpr std::size_t kMaxBirkhoffTerms = 7;
constexpr double kMajorizationSlack = 1e-10;

Vec3 exp3(const Vec3& h) { return {std::exp(h[0]), std::exp(h[1]), std::exp(h[2])}; }

Vec3 incompressible_log(double h1, double h2) { return {h1, h2, -(h1 + h2)}; }

double reduced_energy(const EnergyModel& model, double h1, double h2) {
  const double w = model.energy(exp3(incompressible_log(h1, h2)));
  if (!std::isfinite(w)) {
    throw EvaluationError(model.name() + " gives non-finite energy at log-stretches (" +
                          std::to_string(h1) + ", " + std::to_string(h2) + ")");
  }
  return w;
}

std::array<double, 2> symmetric_eigenvalues(const Matrix2& a) {
  const double mean = 0.5 * (a[0][0] + a[1][1]);
  const double half = 0.5 * (a[0][0] - a[1][1]);
  const double radius = std::hypot(half, a[0][1]);
  return {mean - radius, mean + radius};
}

ReducedHessian finish(double h1, double h2, Matrix2 m) {
  ReducedHessian out;
  out.h1 = h1;
  out.h2 = h2;
  const double off = 0.5 * (m[0][1] + m[1][0]);
  m[0][1] = m[1][0] = off;
  out.matrix = m;
  out.eigenvalues = symmetric_eigenvalues(m);
  return out;
}

Vec3 log_kirchhoff(const EnergyModel& model, const Vec3& h) {
  const Vec3 tau = kirchhoff_stresses(model, exp3(h));
  for (double t : tau) {
    if (!std::isfinite(t)) {
      throw EvaluationError(model.name() + " gives non-finite stress at log-stretches (" +
                            std::to_string(h[0]) + ", " + std::to_string(h[1]) + ", " +
                            std::to_string(h[2]) + ")");
    }
  }
  return tau;
}

bool nearly_equal(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

Eigen::Matrix3d to_eigen(const Matrix3& a) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j];
  return m;
}

Matrix3 from_eigen(const Eigen::Matrix3d& m) {
  Matrix3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);
  return a;
}

Vec3 sorted_decreasing(Vec3 v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

const std::array<std::array<int, 3>, 6>& permutations3() {
  static const auto perms = [] {
    std::array<std::array<int, 3>, 6> out{};
    std::array<int, 3> p{0, 1, 2};
    for (auto& slot : out) {
      slot = p;
      std::next_permutation(p.begin(), p.end());
    }
    return out;
  }();
  return perms;
}

}  // namespace

// ---- report -----------------------------------------------------------------

void VerificationReport::fail(Witness w) {
  passed = false;
  witnesses.push_back(std::move(w));
}

void VerificationReport::require_positive(std::vector<double> state, double value, std::string note) {
  ++evaluated;
  if (value > 0.0) return;
  Witness w;
  w.state = std::move(state);
  w.value = value;
  w.marginal = value > -kStrictMargin;
  w.note = std::move(note);
  fail(std::move(w));
}

void VerificationReport::sort_witnesses() {
  std::stable_sort(witnesses.begin(), witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.state < b.state; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["check"] = check;
  out["model"] = model;
  out["verdict"] = passed ? "pass" : "fail";
  out["evaluated"] = evaluated;
  out["domain"] = domain;
  out["tolerances"] = tolerances;
  out["findings"] = findings;
  out["violations"] = witnesses.size();
  auto& list = out["witnesses"] = nlohmann::json::array();
  const std::size_t shown = std::min(witnesses.size(), kMaxWitnesses);
  for (std::size_t i = 0; i < shown; ++i) {
    const Witness& w = witnesses[i];
    nlohmann::json j{{"state", w.state}, {"value", w.value}, {"marginal", w.marginal}};
    if (!w.note.empty()) j["note"] = w.note;
    list.push_back(std::move(j));
  }
  return out;
}

// ---- Hessians ---------------------------------------------------------------

ReducedHessian reduced_hessian(const EnergyModel& model, double h1, double h2, double step) {
  if (!std::isfinite(h1) || !std::isfinite(h2)) throw DomainError("log-stretches must be finite");
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  const double e = step;
  const double f0 = reduced_energy(model, h1, h2);
  const double fp1 = reduced_energy(model, h1 + e, h2);
  const double fm1 = reduced_energy(model, h1 - e, h2);
  const double fp2 = reduced_energy(model, h1, h2 + e);
  const double fm2 = reduced_energy(model, h1, h2 - e);
  const double fpp = reduced_energy(model, h1 + e, h2 + e);
  const double fpm = reduced_energy(model, h1 + e, h2 - e);
  const double fmp = reduced_energy(model, h1 - e, h2 + e);
  const double fmm = reduced_energy(model, h1 - e, h2 - e);
  Matrix2 m{};
  m[0][0] = (fp1 - 2.0 * f0 + fm1) / (e * e);
  m[1][1] = (fp2 - 2.0 * f0 + fm2) / (e * e);
  m[0][1] = m[1][0] = (fpp - fpm - fmp + fmm) / (4.0 * e * e);
  return finish(h1, h2, m);
}

Matrix3 log_stretch_hessian(const EnergyModel& model, const Vec3& h, double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  Matrix3 out{};
  for (int l = 0; l < 3; ++l) {
    Vec3 hp = h, hm = h;
    hp[l] += step;
    hm[l] -= step;
    const Vec3 tp = log_kirchhoff(model, hp);
    const Vec3 tm = log_kirchhoff(model, hm);
    for (int k = 0; k < 3; ++k) out[k][l] = (tp[k] - tm[k]) / (2.0 * step);
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = k + 1; l < 3; ++l) out[k][l] = out[l][k] = 0.5 * (out[k][l] + out[l][k]);
  }
  return out;
}

ReducedHessian projected_hessian(const EnergyModel& model, double h1, double h2, double step) {
  if (!std::isfinite(h1) || !std::isfinite(h2)) throw DomainError("log-stretches must be finite");
  const Matrix3 w = log_stretch_hessian(model, incompressible_log(h1, h2), step);
  Matrix2 m{};
  m[0][0] = w[0][0] - 2.0 * w[0][2] + w[2][2];
  m[1][1] = w[1][1] - 2.0 * w[1][2] + w[2][2];
  m[0][1] = m[1][0] = w[0][1] - w[0][2] - w[1][2] + w[2][2];
  return finish(h1, h2, m);
}

double relative_discrepancy(const ReducedHessian& a, const ReducedHessian& b) {
  double diff = 0.0, na = 0.0, nb = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double d = a.matrix[i][j] - b.matrix[i][j];
      diff += d * d;
      na += a.matrix[i][j] * a.matrix[i][j];
      nb += b.matrix[i][j] * b.matrix[i][j];
    }
  }
  const double scale = std::sqrt(std::max(na, nb));
  return scale > 0.0 ? std::sqrt(diff) / scale : std::sqrt(diff);
}

// ---- checks -------------------------------------------------------------------

VerificationReport hill_grid_check(const EnergyModel& model, const LogGrid& grid) {
  if (grid.points < 2) throw DomainError("grid needs at least 2 points per axis");
  if (!(grid.hi > grid.lo)) throw DomainError("grid range is empty");
  VerificationReport report;
  report.check = "hill";
  report.model = model.name();
  report.domain = {{"grid", {grid.points, grid.points}}, {"range", {grid.lo, grid.hi}}};
  report.tolerances = {{"fd_step", kHessianStep}, {"margin", kStrictMargin}};
  double lowest = std::numeric_limits<double>::infinity();
  const double spacing = (grid.hi - grid.lo) / static_cast<double>(grid.points - 1);
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double h1 = grid.lo + spacing * static_cast<double>(i);
    for (std::size_t j = 0; j < grid.points; ++j) {
      const double h2 = grid.lo + spacing * static_cast<double>(j);
      try {
        const ReducedHessian hess = reduced_hessian(model, h1, h2);
        lowest = std::min(lowest, hess.eigenvalues[0]);
        report.require_positive({h1, h2}, hess.eigenvalues[0], "min eigenvalue");
      } catch (const std::exception& e) {
        ++report.evaluated;
        report.fail({{h1, h2}, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
      }
    }
  }
  if (std::isfinite(lowest)) report.findings["min_eigenvalue"] = lowest;
  report.sort_witnesses();
  return report;
}

VerificationReport tsts_m_sample(const EnergyModel& model, std::size_t pairs, std::uint64_t seed,
                                 const SampleOptions& options) {
  if (pairs < 1) throw DomainError("pair count must be at least 1");
  if (!(options.range > 0.0)) throw DomainError("sampling range must be positive");
  VerificationReport report;
  report.check = "tsts-m";
  report.model = model.name();
  report.domain = {{"pairs", pairs}, {"seed", seed}, {"range", {-options.range, options.range}}};
  report.tolerances = {{"margin", kStrictMargin}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-options.range, options.range);
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < pairs; ++p) {
    const double a1 = draw(rng), a2 = draw(rng), b1 = draw(rng), b2 = draw(rng);
    const std::vector<double> state{a1, a2, b1, b2};
    if (a1 == b1 && a2 == b2) continue;
    const Vec3 ha = incompressible_log(a1, a2);
    const Vec3 hb = incompressible_log(b1, b2);
    try {
      Vec3 ta = log_kirchhoff(model, ha);
      Vec3 tb = log_kirchhoff(model, hb);
      const double ma = (ta[0] + ta[1] + ta[2]) / 3.0;
      const double mb = (tb[0] + tb[1] + tb[2]) / 3.0;
      for (int k = 0; k < 3; ++k) {
        ta[k] += options.pressure_first - ma;
        tb[k] += options.pressure_second - mb;
      }
      double inner = 0.0;
      for (int k = 0; k < 3; ++k) inner += (tb[k] - ta[k]) * (hb[k] - ha[k]);
      lowest = std::min(lowest, inner);
      report.require_positive(state, inner, "stress-strain pairing");
    } catch (const std::exception& e) {
      ++report.evaluated;
      report.fail({state, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
    }
  }
  if (std::isfinite(lowest)) report.findings["min_pairing"] = lowest;
  report.sort_witnesses();
  return report;
}

VerificationReport principal_stress_ordering(const EnergyModel& model, std::size_t samples,
                                             std::uint64_t seed, double range) {
  if (samples < 1) throw DomainError("sample count must be at least 1");
  if (!(range > 0.0)) throw DomainError("sampling range must be positive");
  VerificationReport report;
  report.check = "stress-ordering";
  report.model = model.name();
  report.domain = {{"states", samples}, {"seed", seed}, {"range", {-range, range}}};
  report.tolerances = {{"margin", kStrictMargin}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-range, range);
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t s = 0; s < samples; ++s) {
    const double h1 = draw(rng), h2 = draw(rng);
    const Vec3 h = incompressible_log(h1, h2);
    try {
      const Vec3 tau = log_kirchhoff(model, h);
      for (const auto& pr : kPairs) {
        const int a = pr[0], b = pr[1];
        if (h[a] == h[b]) continue;
        report.require_positive({h1, h2, static_cast<double>(a), static_cast<double>(b)},
                                (tau[a] - tau[b]) * (h[a] - h[b]), "ordered pair (a, b)");
      }
    } catch (const std::exception& e) {
      ++report.evaluated;
      report.fail({{h1, h2}, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
    }
  }
  report.sort_witnesses();
  return report;
}

VerificationReport shear_monotonicity(const EnergyModel& model, double gamma_max, std::size_t points,
                                      const std::function<double(double)>& closed_form) {
  if (!(gamma_max > 0.0) || !std::isfinite(gamma_max)) throw DomainError("gamma_max must be positive");
  if (points < 2) throw DomainError("shear grid needs at least 2 points");
  VerificationReport report;
  report.check = "shear";
  report.model = model.name();
  report.domain = {{"gamma", {0.0, gamma_max}}, {"points", points}};
  report.tolerances = {{"margin", kStrictMargin}};
  if (closed_form) report.tolerances["closed_form_relative"] = kClosedFormTolerance;

  std::vector<double> gamma(points), sigma(points);
  for (std::size_t i = 0; i < points; ++i) {
    gamma[i] = gamma_max * static_cast<double>(i) / static_cast<double>(points - 1);
    try {
      sigma[i] = shear_stress(model, gamma[i]);
      if (!std::isfinite(sigma[i])) throw EvaluationError("non-finite shear stress");
    } catch (const std::exception& e) {
      report.fail({{gamma[i]}, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
      report.evaluated = i + 1;
      return report;
    }
  }

  if (closed_form) {
    double worst = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
      const double ref = closed_form(gamma[i]);
      const double scale = std::max(std::abs(ref), std::abs(sigma[i]));
      const double rel = scale > 0.0 ? std::abs(ref - sigma[i]) / scale : 0.0;
      worst = std::max(worst, rel);
      if (!nearly_equal(ref, sigma[i], kClosedFormTolerance)) {
        report.fail({{gamma[i]}, sigma[i] - ref, false, "generic route disagrees with closed form"});
      }
    }
    report.findings["closed_form_max_relative"] = worst;
    if (!report.passed) {
      report.evaluated = points;
      report.sort_witnesses();
      return report;
    }
  }

  bool descending = false;
  for (std::size_t i = 0; i + 1 < points; ++i) {
    ++report.evaluated;
    const double rise = sigma[i + 1] - sigma[i];
    if (rise >= 0.0) continue;
    descending = true;
    report.fail({{gamma[i], gamma[i + 1]}, rise, rise > -kStrictMargin, "descending segment"});
  }

  if (descending) {
    const auto peak = static_cast<std::size_t>(std::max_element(sigma.begin(), sigma.end()) - sigma.begin());
    // golden-section refinement of the argmax on the bracketing interval
    double lo = gamma[peak == 0 ? 0 : peak - 1];
    double hi = gamma[std::min(peak + 1, points - 1)];
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = shear_stress(model, x1), f2 = shear_stress(model, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + ratio * (hi - lo);
        f2 = shear_stress(model, x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - ratio * (hi - lo);
        f1 = shear_stress(model, x1);
      }
    }
    const double at = 0.5 * (lo + hi);
    report.findings["peak_gamma"] = at;
    report.findings["peak_stress"] = shear_stress(model, at);
  }
  report.sort_witnesses();
  return report;
}

// ---- majorization -----------------------------------------------------------

Vec3 singular_values(const Matrix3& f) {
  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(to_eigen(f));
  const auto s = svd.singularValues();
  return sorted_decreasing({s(0), s(1), s(2)});
}

bool weakly_submajorized(Vec3 a, Vec3 b, double tolerance) {
  a = sorted_decreasing(a);
  b = sorted_decreasing(b);
  double sa = 0.0, sb = 0.0;
  for (int k = 0; k < 3; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb + tolerance) return false;
  }
  return true;
}

std::vector<BirkhoffTerm> birkhoff_decomposition(const Matrix3& d, double tolerance) {
  for (const auto& row : d) {
    for (double v : row) {
      if (!std::isfinite(v) || v < -tolerance) throw DomainError("matrix is not non-negative");
    }
  }
  Matrix3 residual = d;
  std::vector<BirkhoffTerm> terms;
  // each pass zeroes at least one more entry, so 9 passes always suffice
  for (int pass = 0; pass < 9; ++pass) {
    double best = -1.0;
    const std::array<int, 3>* chosen = nullptr;
    for (const auto& p : permutations3()) {
      const double low = std::min({residual[0][p[0]], residual[1][p[1]], residual[2][p[2]]});
      if (low > best) {
        best = low;
        chosen = &p;
      }
    }
    if (chosen == nullptr || best <= tolerance) break;
    terms.push_back({best, *chosen});
    for (int i = 0; i < 3; ++i) {
      double& entry = residual[i][(*chosen)[i]];
      entry -= best;
      if (entry <= tolerance) entry = 0.0;
    }
  }
  return terms;
}

Matrix3 reconstruct(const std::vector<BirkhoffTerm>& terms) {
  Matrix3 out{};
  for (const auto& t : terms) {
    for (int i = 0; i < 3; ++i) out[i][t.permutation[i]] += t.weight;
  }
  return out;
}

Matrix3 random_doubly_stochastic(std::mt19937_64& rng) {
  std::gamma_distribution<double> dirichlet(1.0, 1.0);
  std::array<double, 6> w{};
  for (auto& x : w) x = dirichlet(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<BirkhoffTerm> mix;
  for (std::size_t i = 0; i < w.size(); ++i) mix.push_back({w[i] / total, permutations3()[i]});
  return reconstruct(mix);
}

Matrix3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return from_eigen(q.toRotationMatrix());
}

SymmetricCmnn::SymmetricCmnn(NetworkParams params) : net_(params.materialize()) {
  if (net_.inputs != 3) throw ContractViolation("symmetric CMNN expects 3 inputs");
  if (params.mode() != ConstraintMode::CMNN) throw ContractViolation("symmetric CMNN expects CMNN weights");
}

double SymmetricCmnn::operator()(const Vec3& l) const {
  double sum = 0.0;
  for (const auto& p : permutations3()) {
    const std::array<double, 3> x{l[p[0]], l[p[1]], l[p[2]]};
    sum += evaluate(net_, x, {});
  }
  return sum / 6.0;
}

VerificationReport majorization_suite(std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trial count must be at least 1");
  VerificationReport report;
  report.check = "majorization";
  report.model = "random matrices";
  report.domain = {{"trials", trials}, {"seed", seed}};
  report.tolerances = {{"partial_sum_slack", kMajorizationSlack},
                       {"birkhoff_reconstruction", kBirkhoffTolerance},
                       {"birkhoff_max_terms", static_cast<double>(kMaxBirkhoffTerms)},
                       {"convexity_slack", kMajorizationSlack}};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> log_stretch(-1.0, 1.0);
  double worst_error = 0.0;
  std::size_t most_terms = 0;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const double tr = static_cast<double>(trial);

    // (a) ordered partial sums of singular values are convex
    Matrix3 f1{}, f2{}, mix{};
    const double t = unit(rng);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        f1[i][j] = normal(rng);
        f2[i][j] = normal(rng);
        mix[i][j] = t * f1[i][j] + (1.0 - t) * f2[i][j];
      }
    }
    const Vec3 s1 = singular_values(f1), s2 = singular_values(f2), sm = singular_values(mix);
    Vec3 bound{};
    for (int k = 0; k < 3; ++k) bound[k] = t * s1[k] + (1.0 - t) * s2[k];
    {
      double sa = 0.0, sb = 0.0, slack = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 3; ++k) {
        sa += sm[k];
        sb += bound[k];
        slack = std::min(slack, sb - sa);
      }
      ++report.evaluated;
      if (!weakly_submajorized(sm, bound, kMajorizationSlack)) {
        report.fail({{0.0, tr, t}, slack, false, "(a) partial singular-value sums"});
      }
    }

    // (b) Birkhoff decomposition
    {
      const Matrix3 d = random_doubly_stochastic(rng);
      const auto terms = birkhoff_decomposition(d);
      const Matrix3 back = reconstruct(terms);
      double error = 0.0, total = 0.0;
      bool negative = false;
      for (const auto& term : terms) {
        total += term.weight;
        negative = negative || term.weight < 0.0;
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) error = std::max(error, std::abs(back[i][j] - d[i][j]));
      worst_error = std::max(worst_error, error);
      most_terms = std::max(most_terms, terms.size());
      ++report.evaluated;
      if (error >= kBirkhoffTolerance || negative || std::abs(total - 1.0) >= kBirkhoffTolerance ||
          terms.size() > kMaxBirkhoffTerms) {
        report.fail({{1.0, tr, static_cast<double>(terms.size())}, error, false, "(b) Birkhoff decomposition"});
      }
    }

    // (c) symmetric, convex, non-decreasing f composed with singular values is convex
    {
      const std::uint64_t net_seed = rng();
      const SymmetricCmnn f(init_network(8, 3, ConstraintMode::CMNN, net_seed));
      auto sample = [&] {
        const Eigen::Matrix3d r1 = to_eigen(random_rotation(rng));
        const Eigen::Matrix3d r2 = to_eigen(random_rotation(rng));
        const Eigen::Vector3d l(std::exp(log_stretch(rng)), std::exp(log_stretch(rng)),
                                std::exp(log_stretch(rng)));
        return from_eigen(r1 * l.asDiagonal() * r2);
      };
      const Matrix3 g1 = sample(), g2 = sample();
      const double u = unit(rng);
      Matrix3 gm{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gm[i][j] = u * g1[i][j] + (1.0 - u) * g2[i][j];
      const Vec3 a = singular_values(g1), b = singular_values(g2);
      Vec3 combo{};
      for (int k = 0; k < 3; ++k) combo[k] = u * a[k] + (1.0 - u) * b[k];
      const double lhs = f(singular_values(gm));
      const double rhs = f(combo);
      ++report.evaluated;
      if (!(lhs <= rhs + kMajorizationSlack)) {
        report.fail({{2.0, tr, u}, rhs - lhs, false, "(c) convexity through singular values"});
      }
    }
  }
  report.findings["birkhoff_max_error"] = worst_error;
  report.findings["birkhoff_max_terms"] = static_cast<double>(most_terms);
  report.sort_witnesses();
  return report;
}

}  // namespace hyperpann
