// Copyright 2026 The qcx Authors
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

/**
 * @file
 * Solovay-Kitaev approximation of single-qubit unitaries by words over the
 * one-qubit gates of a finite basis.
 *
 * Words are kept in operator order: the word "HT" denotes the matrix H * T,
 * so T acts first. Circuits built from a word apply it back to front.
 *
 * All matrices handled here are projected onto SU(2); global phase never
 * matters and distances are phase-insensitive spectral-norm distances.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qcx/circuit.hpp"
#include "qcx/stats.hpp"

namespace qcx {

using Mat2 = Eigen::Matrix2cd;

/// Two nets entries closer than this are the same element.
inline constexpr double kNetDedupTolerance = 1e-10;
inline constexpr std::size_t kNetSizeCap = 2'000'000;
/// Largest net coarseness for which the recursion still contracts.
inline constexpr double kSkContractionThreshold = 0.3;

struct SkParams {
  /// Longest basic-approximation word in the net.
  int l0 = 16;
  /// Recursion depth (for compilation: the deepest level tried).
  int depth = 5;
  /// Fitted length exponent; see measure_sk_scaling.
  double c_observed = std::numeric_limits<double>::quiet_NaN();
};

/// Word over the net's gate alphabet (indices into SkNet::gate_names()).
using Word = std::vector<std::uint8_t>;

/// Projects a 2x2 unitary onto SU(2) (divides by a square root of det).
Mat2 to_su2(const Mat2& u);

/// Phase-insensitive spectral distance between 2x2 unitaries, computed from
/// unit quaternions so that it stays accurate near zero.
double su2_distance(const Mat2& a, const Mat2& b);

/// exp(-i angle/2 n.sigma) for a unit axis n.
Mat2 axis_rotation(const Eigen::Vector3d& axis, double angle);

/// Rotation angle in [0, pi] and unit axis of an SU(2) element taken up to
/// sign. The axis is arbitrary (z) for the identity.
std::pair<double, Eigen::Vector3d> rotation_of(const Mat2& su2);

/// Epsilon-net of basic approximations.
///
/// Holds every distinct product of the basis' one-qubit gates up to length
/// l0, each with a shortest word and a word for its inverse. Entries whose
/// inverse is itself an entry are "closed"; the recursion draws the factors
/// of its commutators from those only, so an inverted factor also costs at
/// most l0 gates. Entries are stored in breadth-first order, so word lengths
/// are non-decreasing and entry 0 is the identity.
class SkNet {
 public:
  struct Entry {
    Word word;
    Mat2 matrix;  // SU(2)
    Word inverse_word;
    bool closed;
  };

  /// Throws Infeasible when the net would exceed `cap` entries and Domain
  /// when the basis has no one-qubit gates.
  static std::shared_ptr<const SkNet> build(const GateBasis& basis, int l0,
                                            std::size_t cap = kNetSizeCap);

  ~SkNet();
  SkNet(SkNet&&) noexcept;

  const std::string& basis_id() const noexcept { return basis_id_; }
  int l0() const noexcept { return l0_; }
  const std::vector<std::string>& gate_names() const noexcept { return gate_names_; }
  const std::vector<Mat2>& gate_matrices() const noexcept { return gate_matrices_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Index of the entry closest to `u` (any 2x2 unitary).
  std::size_t nearest(const Mat2& u) const;
  /// The `k` closed entries closest to `u`, nearest first.
  std::vector<std::size_t> nearest_closed(const Mat2& u, std::size_t k) const;

  /// Worst nearest-closed-entry distance over a fixed sample of Haar-random
  /// targets; this is the precision the recursion starts from.
  double coarseness() const noexcept { return coarseness_; }

  /// Matrix of a word (operator order) projected to SU(2).
  Mat2 word_matrix(const Word& w) const;
  /// Replaces short runs of letters by shorter net words for the same
  /// element (up to global phase). Never lengthens a word.
  Word simplify(const Word& w) const;
  /// Gate names concatenated; multi-letter names are space-separated.
  std::string word_string(const Word& w) const;

 private:
  SkNet();
  struct Index;

  std::string basis_id_;
  int l0_ = 0;
  std::vector<std::string> gate_names_;
  std::vector<Mat2> gate_matrices_;
  std::vector<Entry> entries_;
  std::unique_ptr<Index> index_;
  double coarseness_ = 0.0;
};

using NetPtr = std::shared_ptr<const SkNet>;

/// Nets are cached per (basis id, l0) and shared read-only.
NetPtr shared_net(const GateBasis& basis, int l0);

/// Balanced group commutator: V W V^dagger W^dagger = delta (delta taken
/// up to sign, in SU(2)), with V and W rotations of equal angle. Throws
/// Infeasible when delta is further than kSkCommutatorMaxDistance from I.
std::pair<Mat2, Mat2> group_commutator_decompose(const Mat2& delta);
std::pair<UnitaryMatrix, UnitaryMatrix> group_commutator_decompose(const UnitaryMatrix& delta);

inline constexpr double kSkCommutatorMaxDistance = 0.5;

struct SkResult {
  Word word;
  Mat2 matrix;  // SU(2) product of `word`
  double distance;
  int depth;
};

/// Approximates `target` at recursion depth `depth`. The word has at most
/// 5^depth * l0 letters. Throws Infeasible for depth >= 1 when the net is
/// coarser than kSkContractionThreshold.
SkResult sk_approximate(const Mat2& target, const SkNet& net, int depth);
SkResult sk_approximate(const UnitaryMatrix& target, const SkNet& net, int depth);

/// Runs depths 0, 1, ... max_depth and keeps every level's result; stops
/// early once `stop_below` is met.
std::vector<SkResult> sk_levels(const Mat2& target, const SkNet& net, int max_depth,
                                double stop_below = 0.0);

struct SkScaling {
  /// log eps_{k+1} against log eps_k over all targets and levels.
  LinearFit contraction;
  /// log(word length) against log(log2(1/eps)) over levels 1..max_depth; the
  /// slope is the measured exponent c.
  LinearFit length;
  /// Mean log10 distance and mean word length per level.
  std::vector<double> mean_log10_distance;
  std::vector<double> mean_length;
  std::size_t targets = 0;
};

/// Runs every level 0..max_depth on `targets` Haar-random SU(2) elements
/// drawn from `seed`. Level 0 (a plain net lookup) is left out of the length
/// fit. Levels whose distance reaches 1e-13 are dropped from both fits.
SkScaling measure_sk_scaling(const SkNet& net, int max_depth, std::size_t targets,
                             std::uint64_t seed);

/// Haar-random SU(2) element from four Gaussians.
template <class Rng>
Mat2 random_su2(Rng& rng);

}  // namespace qcx

#include "qcx/detail/random_su2.hpp"
