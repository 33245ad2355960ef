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

#pragma once

#include <optional>
#include <vector>

#include "qdistill/states.hpp"

namespace qdistill {

/// The recognized two-qubit families. States diagonal in the Bell basis form
/// one class; the rest of the taxonomy covers the non-diagonal family of
/// NonDiagonalParams, whose entries satisfy exactly one of four conditions:
///   Case1: b = c = a/2 (rank 2 when |d| = a/2, rank 3 otherwise)
///   Case2: d = c = 0 and a = b
///   Case3: d = b = 0 and a = c
///   Case4: d = 0 and a = b = c
/// Matching reads these conditions off the matrix shape in the
/// reweighting-closed way, so a family label survives any "new state" of the
/// decomposition: Case1 is |++> mixed with the Phi+/Phi- pair under any
/// weights (rank 2 when one Phi weight vanishes), Case2/Case3 are the
/// two-component product-state mixtures, Case4 is |++> itself.
/// Anything else (e.g. a generic state with |--> population) is Unclassified.
enum class FamilyClass {
  BellDiagonal,
  Case1Rank3,
  Case1Rank2,
  Case2,
  Case3,
  Case4,
  Unclassified,
};

enum class Verdict { Separable, QuasiSeparable, NonQuasiSeparable };

const char* to_string(FamilyClass fc);
const char* to_string(Verdict v);

/// Replace the weights of a decomposition without touching its components.
/// Every new probability must be strictly positive: dropping a component
/// would change which decomposition this is.
PureStateMixture reweight(const PureStateMixture& mix,
                          const std::vector<double>& new_probs);

/// Match rho against the known families. Checked in order: Bell-diagonal
/// first, then the non-diagonal shape with the four parameter conditions
/// resolved by priority Case4 > Case2 > Case3 > Case1 when floating point
/// makes the degenerate overlaps ambiguous.
FamilyClass classify_family(const DensityMatrix& rho,
                            double tolerance = tol::kClassify);

/// Maps a family to its separability verdict. Mixed Bell-diagonal and
/// rank-3 Case1 states admit a separable reweighting; Case2/3/4 are already
/// separable; rank-2 Case1 states have concurrence equal to their Phi+ weight
/// and so no reweighting is ever separable. Bell states themselves (pure
/// Bell-diagonal) are the one exception to the BellDiagonal row: they admit
/// no nontrivial reweighting, which shows up as a missing witness.
/// Throws std::invalid_argument for Unclassified.
Verdict verdict(FamilyClass fc);

/// The decomposition the family matching is defined over, reconstructed from
/// the matched parameters (not an eigendecomposition):
///   BellDiagonal: the Bell projectors carrying nonzero weight
///   Case1:        w0 |++> + w+ Phi+ + w- Phi- with w+- the middle population
///                 shifted by the coupling; for the normalized family entries
///                 that is 1/2 |++> + (1/2)(1/2+d) Phi+ + (1/2)(1/2-d) Phi-,
///                 and a rank-2 state drops its vanished Phi component
///   Case2/3/4:    the product basis states on the diagonal
/// Returns nullopt for Unclassified.
std::optional<PureStateMixture> canonical_decomposition(
    const DensityMatrix& rho, FamilyClass fc, double tolerance = tol::kClassify);

/// A separable "new state" of rho: the same pure components, reweighted, with
/// separability certified by ppt_is_separable. For mixed Bell-diagonal states
/// this is the equal-weight mixture; for rank-3 Case1 states it is the d -> 0
/// reweighting. Returns nullopt when no such witness exists (Case1Rank2, pure
/// Bell-diagonal) or when the family has no reweighting story (Case2/3/4 are
/// separable as-is, Unclassified is out of scope).
std::optional<PureStateMixture> separable_witness(const DensityMatrix& rho,
                                                  FamilyClass fc);

}  // namespace qdistill
