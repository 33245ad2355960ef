// Copyright 2026 The qdistill developers.
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

#include "qdistill/classify.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qdistill {

const char* to_string(FamilyClass fc) {
  switch (fc) {
    case FamilyClass::BellDiagonal:
      return "bell-diagonal";
    case FamilyClass::Case1Rank3:
      return "case1-rank3";
    case FamilyClass::Case1Rank2:
      return "case1-rank2";
    case FamilyClass::Case2:
      return "case2";
    case FamilyClass::Case3:
      return "case3";
    case FamilyClass::Case4:
      return "case4";
    case FamilyClass::Unclassified:
      return "unclassified";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Separable:
      return "separable";
    case Verdict::QuasiSeparable:
      return "quasi-separable";
    case Verdict::NonQuasiSeparable:
      return "non-quasi-separable";
  }
  return "?";
}

PureStateMixture reweight(const PureStateMixture& mix,
                          const std::vector<double>& new_probs) {
  if (new_probs.size() != mix.size()) {
    throw std::invalid_argument(
        "reweight: expected " + std::to_string(mix.size()) +
        " probabilities, got " + std::to_string(new_probs.size()));
  }
  std::vector<WeightedPureState> components = mix.components();
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(new_probs[i] > 0.0)) {
      throw std::invalid_argument(
          "reweight: new probabilities must be strictly positive");
    }
    components[i].probability = new_probs[i];
  }
  return PureStateMixture(std::move(components));  // re-validates the sum
}

namespace {

const BellState kBellOrder[4] = {BellState::PhiPlus, BellState::PhiMinus,
                                 BellState::PsiPlus, BellState::PsiMinus};

Matrix4 bell_basis_matrix() {
  Matrix4 b;
  for (int i = 0; i < 4; ++i) {
    b.col(i) = bell_vector(kBellOrder[i]);
  }
  return b;
}

bool is_bell_diagonal(const Matrix4& m, double tolerance) {
  const Matrix4 in_bell = bell_basis_matrix().adjoint() * m * bell_basis_matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && std::abs(in_bell(i, j)) > tolerance) return false;
    }
  }
  return true;
}

// Matches the non-diagonal shape: zero |--> population and the only
// coherence sitting between |+-> and |-+>, real.
bool matches_family_shape(const Matrix4& m, double tolerance) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool diagonal = i == j;
      const bool middle = (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!diagonal && !middle && std::abs(m(i, j)) > tolerance) return false;
    }
  }
  if (std::abs(m(3, 3)) > tolerance) return false;
  if (std::abs(m(1, 2).imag()) > tolerance) return false;
  return true;
}

}  // namespace

FamilyClass classify_family(const DensityMatrix& rho, double tolerance) {
  const Matrix4& m = rho.matrix();
  if (is_bell_diagonal(m, tolerance)) return FamilyClass::BellDiagonal;
  if (!matches_family_shape(m, tolerance)) return FamilyClass::Unclassified;

  // The four parameter conditions, read reweighting-closed off the shape:
  // the |++> weight, the equal middle populations, and the middle coupling
  // carry the whole story once the |--> corner is empty.
  const double top = m(0, 0).real();
  const double left = m(1, 1).real();
  const double right = m(2, 2).real();
  const double coupling = std::abs(m(1, 2).real());
  const bool uncoupled = coupling <= tolerance;

  // Priority Case4 > Case2 > Case3 > Case1 where floating point blurs the
  // degenerate overlaps.
  if (uncoupled && left <= tolerance && right <= tolerance) {
    return FamilyClass::Case4;
  }
  if (uncoupled && left <= tolerance && top > tolerance) {
    return FamilyClass::Case2;
  }
  if (uncoupled && right <= tolerance && top > tolerance) {
    return FamilyClass::Case3;
  }
  if (std::abs(left - right) <= tolerance && left > tolerance &&
      top > tolerance) {
    return left - coupling <= tolerance ? FamilyClass::Case1Rank2
                                        : FamilyClass::Case1Rank3;
  }
  return FamilyClass::Unclassified;
}

Verdict verdict(FamilyClass fc) {
  switch (fc) {
    case FamilyClass::Case2:
    case FamilyClass::Case3:
    case FamilyClass::Case4:
      return Verdict::Separable;
    case FamilyClass::BellDiagonal:
    case FamilyClass::Case1Rank3:
      return Verdict::QuasiSeparable;
    case FamilyClass::Case1Rank2:
      return Verdict::NonQuasiSeparable;
    case FamilyClass::Unclassified:
      break;
  }
  throw std::invalid_argument(
      "verdict: no verdict for unclassified states; the taxonomy does not "
      "cover them");
}

namespace {

PureStateMixture normalized_mixture(std::vector<WeightedPureState> parts) {
  double total = 0.0;
  for (const auto& p : parts) total += p.probability;
  for (auto& p : parts) p.probability /= total;
  return PureStateMixture(std::move(parts));
}

}  // namespace

std::optional<PureStateMixture> canonical_decomposition(
    const DensityMatrix& rho, FamilyClass fc, double tolerance) {
  const Matrix4& m = rho.matrix();
  std::vector<WeightedPureState> parts;
  switch (fc) {
    case FamilyClass::BellDiagonal: {
      for (const BellState s : kBellOrder) {
        const Vector4 v = bell_vector(s);
        const double w = (v.adjoint() * m * v).value().real();
        if (w > tolerance) parts.push_back({w, v});
      }
      break;
    }
    case FamilyClass::Case1Rank2:
    case FamilyClass::Case1Rank3: {
      // w0 |++> + (mid + r) Phi+ + (mid - r) Phi-; for the normalized family
      // entries this is 1/2 |++> + (1/2)(1/2 + d) Phi+ + (1/2)(1/2 - d) Phi-.
      const double mid = m(1, 1).real();
      const double r = m(1, 2).real();
      parts.push_back({m(0, 0).real(), basis_ket(0)});
      if (mid + r > tolerance) {
        parts.push_back({mid + r, bell_vector(BellState::PhiPlus)});
      }
      if (mid - r > tolerance) {
        parts.push_back({mid - r, bell_vector(BellState::PhiMinus)});
      }
      break;
    }
    case FamilyClass::Case2:
    case FamilyClass::Case3:
    case FamilyClass::Case4: {
      for (int i = 0; i < 4; ++i) {
        const double w = m(i, i).real();
        if (w > tolerance) parts.push_back({w, basis_ket(i)});
      }
      break;
    }
    case FamilyClass::Unclassified:
      return std::nullopt;
  }
  return normalized_mixture(std::move(parts));
}

std::optional<PureStateMixture> separable_witness(const DensityMatrix& rho,
                                                  FamilyClass fc) {
  if (fc != FamilyClass::BellDiagonal && fc != FamilyClass::Case1Rank3) {
    return std::nullopt;
  }
  const auto decomposition = canonical_decomposition(rho, fc);
  if (!decomposition) return std::nullopt;

  std::vector<double> new_probs;
  if (fc == FamilyClass::BellDiagonal) {
    if (decomposition->size() < 2) return std::nullopt;  // a pure Bell state
    new_probs.assign(decomposition->size(), 1.0 / decomposition->size());
  } else {
    // The d -> 0 reweighting: 1/2 |++> + 1/4 Phi+ + 1/4 Phi-. A rank-3 state
    // has |d| < 1/2, so all three components are present.
    if (decomposition->size() != 3) return std::nullopt;
    new_probs = {0.5, 0.25, 0.25};
  }
  PureStateMixture candidate = reweight(*decomposition, new_probs);
  if (!ppt_is_separable(from_mixture(candidate))) return std::nullopt;
  return candidate;
}

}  // namespace qdistill
