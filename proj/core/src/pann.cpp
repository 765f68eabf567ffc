#include "hyperpann/pann.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpann/errors.hpp"

namespace hyperpann {

namespace {

PermutationSet make_permutations(bool with_signs) {
  static constexpr std::array<std::array<int, 2>, 3> kFlips{{{0, 1}, {0, 2}, {1, 2}}};
  PermutationSet set;
  std::array<int, 3> perm{0, 1, 2};
  do {
    const int patterns = with_signs ? 4 : 1;
    for (int pattern = 0; pattern < patterns; ++pattern) {
      SignedPermutation p;
      for (int i = 0; i < 3; ++i) {
        p.source[i] = perm[i];
        p.source[i + 3] = perm[i] + 3;
        p.sign[i] = 1;
        p.sign[i + 3] = 1;
      }
      if (pattern > 0) {
        for (int i : kFlips[pattern - 1]) {
          p.sign[i] = -1;
          p.sign[i + 3] = -1;
        }
      }
      set.elements.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return set;
}

const PermutationSet* symmetry_group(ArchitectureTag tag) {
  switch (tag) {
    case ArchitectureTag::PANN_LAMBDA:
      return &plain_permutations();
    case ArchitectureTag::PANN_NU:
      return &signed_permutations();
    default:
      return nullptr;
  }
}

// dI/dl_k for the standard invariants at stretches s.
void standard_invariant_jacobian(const Vec3& s, double* jac) {
  const double c1 = s[0] * s[0];
  const double c2 = s[1] * s[1];
  const double c3 = s[2] * s[2];
  jac[0] = 2.0 * s[0];
  jac[1] = 2.0 * s[1];
  jac[2] = 2.0 * s[2];
  jac[3] = 2.0 * s[0] * (c2 + c3);
  jac[4] = 2.0 * s[1] * (c3 + c1);
  jac[5] = 2.0 * s[2] * (c1 + c2);
}

}  // namespace

std::string_view to_string(ArchitectureTag tag) {
  switch (tag) {
    case ArchitectureTag::PANN_I:
      return "pann-i";
    case ArchitectureTag::PANN_SQRT_I:
      return "pann-sqrt-i";
    case ArchitectureTag::PANN_LAMBDA:
      return "pann-lambda";
    case ArchitectureTag::PANN_NU:
      return "pann-nu";
  }
  return "?";
}

std::optional<ArchitectureTag> parse_architecture(std::string_view tag) {
  for (auto t : kAllArchitectures) {
    if (to_string(t) == tag) return t;
  }
  return std::nullopt;
}

std::size_t input_dimension(ArchitectureTag tag) { return is_invariant_based(tag) ? 2 : 6; }

ConstraintMode constraint_mode(ArchitectureTag tag) {
  return tag == ArchitectureTag::PANN_NU ? ConstraintMode::ICNN : ConstraintMode::CMNN;
}

bool is_invariant_based(ArchitectureTag tag) {
  return tag == ArchitectureTag::PANN_I || tag == ArchitectureTag::PANN_SQRT_I;
}

Matrix6 SignedPermutation::matrix() const {
  Matrix6 m{};
  for (int i = 0; i < 6; ++i) m[i][source[i]] = sign[i];
  return m;
}

std::vector<Matrix6> PermutationSet::matrices() const {
  std::vector<Matrix6> out;
  out.reserve(elements.size());
  for (const auto& p : elements) out.push_back(p.matrix());
  return out;
}

const PermutationSet& plain_permutations() {
  static const PermutationSet set = make_permutations(false);
  return set;
}

const PermutationSet& signed_permutations() {
  static const PermutationSet set = make_permutations(true);
  return set;
}

std::array<double, 6> stacked_input(const Vec3& s) {
  return {s[0], s[1], s[2], s[1] * s[2], s[2] * s[0], s[0] * s[1]};
}

NetworkInput network_input(ArchitectureTag tag, const Vec3& s) {
  NetworkInput in;
  switch (tag) {
    case ArchitectureTag::PANN_I:
    case ArchitectureTag::PANN_SQRT_I: {
      in.jacobian.resize(6);
      standard_invariant_jacobian(s, in.jacobian.data());
      const auto inv = invariants(s, InvariantKind::standard);
      if (tag == ArchitectureTag::PANN_I) {
        in.x = {inv.first, inv.second};
      } else {
        const double k1 = std::sqrt(inv.first);
        const double k2 = std::sqrt(inv.second);
        in.x = {k1, k2};
        // dK/dl = dI/dl / (2K)
        for (int k = 0; k < 3; ++k) {
          in.jacobian[k] /= 2.0 * k1;
          in.jacobian[3 + k] /= 2.0 * k2;
        }
      }
      break;
    }
    case ArchitectureTag::PANN_LAMBDA:
    case ArchitectureTag::PANN_NU: {
      const auto x = stacked_input(s);
      in.x.assign(x.begin(), x.end());
      in.jacobian = {1.0, 0.0,  0.0,   //
                     0.0, 1.0,  0.0,   //
                     0.0, 0.0,  1.0,   //
                     0.0, s[2], s[1],  //
                     s[2], 0.0, s[0],  //
                     s[1], s[0], 0.0};
      break;
    }
  }
  return in;
}

StressFeatures nominal_stress_features(ArchitectureTag tag, const Vec3& s) {
  const NetworkInput in = network_input(tag, s);
  const std::size_t m = in.x.size();
  const double ratio = s[2] / s[0];
  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = in.jacobian[3 * i] - ratio * in.jacobian[3 * i + 2];

  StressFeatures f;
  f.inputs = m;
  const PermutationSet* group = symmetry_group(tag);
  if (group == nullptr) {
    f.pairs = 1;
    f.x = in.x;
    f.direction = std::move(d);
    return f;
  }
  f.pairs = group->size();
  f.weight = 1.0 / static_cast<double>(group->size());
  f.x.resize(f.pairs * m);
  f.direction.resize(f.pairs * m);
  for (std::size_t p = 0; p < f.pairs; ++p) {
    const auto& perm = group->elements[p];
    for (std::size_t i = 0; i < m; ++i) {
      f.x[p * m + i] = perm.sign[i] * in.x[perm.source[i]];
      f.direction[p * m + i] = perm.sign[i] * d[perm.source[i]];
    }
  }
  return f;
}

PannArchitecture::PannArchitecture(ArchitectureTag tag, NetworkParams params)
    : tag_(tag), params_(std::move(params)) {
  if (params_.inputs() != input_dimension(tag_)) {
    throw ContractViolation(std::string(to_string(tag_)) + " needs " +
                            std::to_string(input_dimension(tag_)) + " network inputs");
  }
  if (params_.mode() != constraint_mode(tag_)) {
    throw ContractViolation(std::string(to_string(tag_)) + " needs constraint mode " +
                            std::string(to_string(constraint_mode(tag_))));
  }
  refresh();
}

void PannArchitecture::set_raw(std::span<const double> raw) {
  if (raw.size() != params_.parameter_count()) throw ContractViolation("raw parameter size mismatch");
  std::copy(raw.begin(), raw.end(), params_.raw().begin());
  refresh();
}

void PannArchitecture::refresh() {
  net_ = params_.materialize();
  offset_ = 0.0;
  offset_ = raw_energy({1.0, 1.0, 1.0});
}

double PannArchitecture::raw_energy(const Vec3& s) const {
  const NetworkInput in = network_input(tag_, s);
  const PermutationSet* group = symmetry_group(tag_);
  if (group == nullptr) return evaluate(net_, in.x, {});
  std::array<double, 6> y{};
  double sum = 0.0;
  for (const auto& perm : group->elements) {
    for (int i = 0; i < 6; ++i) y[i] = perm.sign[i] * in.x[perm.source[i]];
    sum += evaluate(net_, y, {});
  }
  return sum / static_cast<double>(group->size());
}

double PannArchitecture::energy(const Vec3& s) const { return raw_energy(s) - offset_; }

Vec3 PannArchitecture::gradient(const Vec3& s) const {
  const NetworkInput in = network_input(tag_, s);
  const std::size_t m = in.x.size();
  std::vector<double> dfdx(m, 0.0);
  const PermutationSet* group = symmetry_group(tag_);
  if (group == nullptr) {
    evaluate(net_, in.x, dfdx);
  } else {
    std::array<double, 6> y{};
    std::array<double, 6> gy{};
    for (const auto& perm : group->elements) {
      for (int i = 0; i < 6; ++i) y[i] = perm.sign[i] * in.x[perm.source[i]];
      evaluate(net_, y, gy);
      for (int i = 0; i < 6; ++i) dfdx[perm.source[i]] += perm.sign[i] * gy[i];
    }
    for (auto& v : dfdx) v /= static_cast<double>(group->size());
  }
  Vec3 g{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < m; ++i) {
    for (int k = 0; k < 3; ++k) g[k] += dfdx[i] * in.jacobian[3 * i + k];
  }
  return g;
}

std::string PannArchitecture::name() const { return std::string(to_string(tag_)); }

std::array<double, 2> PannArchitecture::stress_coefficients(const Vec3& s) const {
  if (!is_invariant_based(tag_)) {
    throw ContractViolation("stress coefficients are defined only for invariant architectures");
  }
  const NetworkInput in = network_input(tag_, s);
  std::array<double, 2> c{};
  evaluate(net_, in.x, c);
  return c;
}

PannArchitecture build_architecture(ArchitectureTag tag, std::size_t nodes, std::uint64_t seed) {
  return PannArchitecture(tag, init_network(nodes, input_dimension(tag), constraint_mode(tag), seed));
}

}  // namespace hyperpann
