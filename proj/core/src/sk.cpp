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

#include "qcx/sk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <tuple>
#include <unordered_map>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

namespace qcx {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using Point = bg::model::point<double, 4, bg::cs::cartesian>;
using Value = std::pair<Point, std::uint32_t>;
using Tree = bgi::rtree<Value, bgi::rstar<16>>;

struct Quaternion {
  double w, x, y, z;
};

// U = w I - i (x X + y Y + z Z) for U in SU(2).
Quaternion quaternion_of(const Mat2& u) {
  return {0.5 * (u(0, 0) + u(1, 1)).real(), -0.5 * (u(0, 1) + u(1, 0)).imag(),
          0.5 * (u(1, 0) - u(0, 1)).real(), 0.5 * (u(1, 1) - u(0, 0)).imag()};
}

Point point_of(const Quaternion& q, double sign = 1.0) {
  Point p;
  bg::set<0>(p, sign * q.w);
  bg::set<1>(p, sign * q.x);
  bg::set<2>(p, sign * q.y);
  bg::set<3>(p, sign * q.z);
  return p;
}

double point_distance(const Point& a, const Point& b) {
  return bg::distance(a, b);
}

}  // namespace

Mat2 to_su2(const Mat2& u) {
  const Complex root = std::sqrt(u.determinant());
  return u / root;
}

double su2_distance(const Mat2& a, const Mat2& b) {
  const Quaternion p = quaternion_of(to_su2(a));
  const Quaternion q = quaternion_of(to_su2(b));
  const double minus = std::hypot(std::hypot(p.w - q.w, p.x - q.x), std::hypot(p.y - q.y, p.z - q.z));
  const double plus = std::hypot(std::hypot(p.w + q.w, p.x + q.x), std::hypot(p.y + q.y, p.z + q.z));
  return std::min(minus, plus);
}

Mat2 axis_rotation(const Eigen::Vector3d& axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i{0.0, 1.0};
  Mat2 m;
  m << c - i * s * axis.z(), -i * s * axis.x() - s * axis.y(),
       -i * s * axis.x() + s * axis.y(), c + i * s * axis.z();
  return m;
}

std::pair<double, Eigen::Vector3d> rotation_of(const Mat2& su2) {
  Quaternion q = quaternion_of(su2);
  if (q.w < 0.0) q = {-q.w, -q.x, -q.y, -q.z};
  const Eigen::Vector3d v(q.x, q.y, q.z);
  const double s = v.norm();
  if (s < 1e-300) return {0.0, Eigen::Vector3d::UnitZ()};
  return {2.0 * std::atan2(s, q.w), v / s};
}

// ---------------------------------------------------------------------------

struct SkNet::Index {
  Tree all;
  Tree closed;
};

SkNet::SkNet() = default;
SkNet::~SkNet() = default;
SkNet::SkNet(SkNet&&) noexcept = default;

std::shared_ptr<const SkNet> SkNet::build(const GateBasis& basis, int l0, std::size_t cap) {
  if (l0 < 1) throw Error(ErrorKind::Domain, "net word length l0 must be >= 1");
  auto net = std::shared_ptr<SkNet>(new SkNet());
  net->basis_id_ = basis.id();
  net->l0_ = l0;
  for (const auto& g : basis.gates()) {
    if (g.arity != 1) continue;
    net->gate_names_.push_back(g.name);
    net->gate_matrices_.push_back(to_su2(Mat2(g.matrix.matrix())));
  }
  if (net->gate_names_.empty()) {
    throw Error(ErrorKind::Domain, "basis '" + basis.id() + "' has no one-qubit gates");
  }

  // Breadth-first enumeration with phase-insensitive deduplication; both
  // quaternion signs go into the tree so a Euclidean query is a distance query.
  std::vector<Entry> all;
  Tree seen;
  const auto known = [&](const Mat2& m) -> std::optional<std::uint32_t> {
    const Point p = point_of(quaternion_of(m));
    for (auto it = seen.qbegin(bgi::nearest(p, 1)); it != seen.qend(); ++it) {
      if (point_distance(it->first, p) <= kNetDedupTolerance) return it->second;
    }
    return std::nullopt;
  };
  const auto remember = [&](const Mat2& m, std::uint32_t id) {
    const Quaternion q = quaternion_of(m);
    seen.insert({point_of(q), id});
    seen.insert({point_of(q, -1.0), id});
  };

  all.push_back({Word{}, Mat2::Identity(), Word{}, true});
  remember(all.back().matrix, 0);
  std::vector<std::uint32_t> frontier{0};
  for (int len = 1; len <= l0; ++len) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t e : frontier) {
      for (std::size_t g = 0; g < net->gate_matrices_.size(); ++g) {
        const Mat2 m = all[e].matrix * net->gate_matrices_[g];
        if (known(m)) continue;
        Word w = all[e].word;
        w.push_back(static_cast<std::uint8_t>(g));
        const auto id = static_cast<std::uint32_t>(all.size());
        all.push_back({std::move(w), m, Word{}, false});
        remember(m, id);
        next.push_back(id);
        if (all.size() > cap) {
          throw Error(ErrorKind::Infeasible,
                      "net for l0=" + std::to_string(l0) + " exceeds " + std::to_string(cap) +
                          " entries");
        }
      }
    }
    frontier = std::move(next);
  }

  net->entries_ = std::move(all);

  std::vector<Value> values, closed;
  values.reserve(2 * net->entries_.size());
  for (std::size_t i = 0; i < net->entries_.size(); ++i) {
    auto& e = net->entries_[i];
    const Quaternion q = quaternion_of(e.matrix);
    const Value plus{point_of(q), static_cast<std::uint32_t>(i)};
    const Value minus{point_of(q, -1.0), static_cast<std::uint32_t>(i)};
    values.push_back(plus);
    values.push_back(minus);
    if (auto j = known(e.matrix.adjoint())) {
      e.closed = true;
      e.inverse_word = net->entries_[*j].word;
      closed.push_back(plus);
      closed.push_back(minus);
    }
  }
  net->index_ = std::make_unique<Index>(
      Index{Tree(values.begin(), values.end()), Tree(closed.begin(), closed.end())});

  // Open entries get the letterwise inverse, reversed and peephole-shortened.
  std::vector<Word> letter_inverse(net->gate_matrices_.size());
  for (std::size_t g = 0; g < letter_inverse.size(); ++g) {
    const Mat2 inv = net->gate_matrices_[g].adjoint();
    if (auto j = known(inv)) {
      letter_inverse[g] = net->entries_[*j].word;
      continue;
    }
    Mat2 power = Mat2::Identity();
    for (int p = 1; p <= 64 && letter_inverse[g].empty(); ++p) {
      power = power * net->gate_matrices_[g];
      if (su2_distance(power, inv) <= kNetDedupTolerance) {
        letter_inverse[g].assign(static_cast<std::size_t>(p), static_cast<std::uint8_t>(g));
      }
    }
    if (letter_inverse[g].empty()) {
      throw Error(ErrorKind::Domain, "gate '" + net->gate_names_[g] + "' has no inverse word");
    }
  }
  for (auto& e : net->entries_) {
    if (e.closed) continue;
    Word w;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
      w.insert(w.end(), letter_inverse[*it].begin(), letter_inverse[*it].end());
    }
    e.inverse_word = net->simplify(w);
  }

  std::mt19937_64 rng(0x5eedULL);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Mat2 u = random_su2(rng);
    worst = std::max(worst, su2_distance(u, net->entries_[net->nearest_closed(u, 1)[0]].matrix));
  }
  net->coarseness_ = worst;
  return net;
}

std::size_t SkNet::nearest(const Mat2& u) const {
  const Point p = point_of(quaternion_of(to_su2(u)));
  auto it = index_->all.qbegin(bgi::nearest(p, 1));
  return it->second;
}

std::vector<std::size_t> SkNet::nearest_closed(const Mat2& u, std::size_t k) const {
  const Point p = point_of(quaternion_of(to_su2(u)));
  // Both signs of each entry are indexed, so ask for twice as many points.
  std::vector<std::size_t> out;
  for (auto it = index_->closed.qbegin(bgi::nearest(p, static_cast<unsigned>(2 * k)));
       it != index_->closed.qend() && out.size() < k; ++it) {
    if (std::find(out.begin(), out.end(), it->second) == out.end()) out.push_back(it->second);
  }
  return out;
}

Mat2 SkNet::word_matrix(const Word& w) const {
  Mat2 m = Mat2::Identity();
  for (auto g : w) m = m * gate_matrices_.at(g);
  return m;
}

Word SkNet::simplify(const Word& w) const {
  constexpr std::size_t kWindow = 6;
  // Shorter replacement for each window, keyed by its packed letters.
  std::unordered_map<std::uint64_t, std::int64_t> memo;
  const auto replacement = [&](const Word& out, std::size_t len) -> std::int64_t {
    std::uint64_t key = len;
    for (std::size_t k = out.size() - len; k < out.size(); ++k) key = (key << 8) | out[k];
    auto [it, inserted] = memo.try_emplace(key, -1);
    if (inserted) {
      Mat2 m = Mat2::Identity();
      for (std::size_t k = out.size() - len; k < out.size(); ++k) m = m * gate_matrices_[out[k]];
      const std::size_t e = nearest(m);
      if (entries_[e].word.size() < len && su2_distance(entries_[e].matrix, m) <= 1e-9) {
        it->second = static_cast<std::int64_t>(e);
      }
    }
    return it->second;
  };
  Word out;
  out.reserve(w.size());
  for (auto g : w) {
    out.push_back(g);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t len = 2; len <= std::min(kWindow, out.size()); ++len) {
        const std::int64_t e = replacement(out, len);
        if (e >= 0) {
          const Word& r = entries_[static_cast<std::size_t>(e)].word;
          out.resize(out.size() - len);
          out.insert(out.end(), r.begin(), r.end());
          changed = !out.empty();
          break;
        }
      }
    }
  }
  return out;
}

std::string SkNet::word_string(const Word& w) const {
  bool single_letters = true;
  for (const auto& n : gate_names_) single_letters = single_letters && n.size() == 1;
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!single_letters && k > 0) out += ' ';
    out += gate_names_.at(w[k]);
  }
  return out;
}

NetPtr shared_net(const GateBasis& basis, int l0) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, NetPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{basis.id(), l0}];
  if (!slot) slot = SkNet::build(basis, l0);
  return slot;
}

// ---------------------------------------------------------------------------

std::pair<Mat2, Mat2> group_commutator_decompose(const Mat2& delta) {
  const Mat2 d = to_su2(delta);
  const auto [theta, axis] = rotation_of(d);
  if (2.0 * std::sin(theta / 4.0) > kSkCommutatorMaxDistance) {
    throw Error(ErrorKind::Infeasible, "group commutator input too far from identity");
  }
  if (theta < 1e-15) return {Mat2::Identity(), Mat2::Identity()};

  // sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) for the commutator of
  // x and y rotations by phi.
  const double sin_sq = std::sin(theta / 4.0);  // sqrt((1 - cos(theta/2)) / 2), cancellation-free
  const double phi = 2.0 * std::asin(std::sqrt(sin_sq));
  const Mat2 v = axis_rotation(Eigen::Vector3d::UnitX(), phi);
  const Mat2 w = axis_rotation(Eigen::Vector3d::UnitY(), phi);
  const Mat2 c = v * w * v.adjoint() * w.adjoint();
  const Eigen::Vector3d from = rotation_of(c).second;

  Mat2 s = Mat2::Identity();
  const Eigen::Vector3d cross = from.cross(axis);
  const double sin_angle = cross.norm();
  const double cos_angle = from.dot(axis);
  if (sin_angle > 1e-12) {
    s = axis_rotation(cross / sin_angle, std::atan2(sin_angle, cos_angle));
  } else if (cos_angle < 0.0) {
    Eigen::Vector3d perp = from.cross(Eigen::Vector3d::UnitX());
    if (perp.norm() < 1e-6) perp = from.cross(Eigen::Vector3d::UnitY());
    s = axis_rotation(perp.normalized(), std::numbers::pi);
  }
  return {s * v * s.adjoint(), s * w * s.adjoint()};
}

std::pair<UnitaryMatrix, UnitaryMatrix> group_commutator_decompose(const UnitaryMatrix& delta) {
  if (delta.dim() != 2) throw Error(ErrorKind::Dimension, "group commutator needs a 2x2 unitary");
  auto [v, w] = group_commutator_decompose(Mat2(delta.matrix()));
  return {UnitaryMatrix(Matrix(v), 1e-9), UnitaryMatrix(Matrix(w), 1e-9)};
}

// ---------------------------------------------------------------------------

namespace {

// High bit of a piece: use the entry's inverse word.
constexpr std::uint32_t kInverted = 0x80000000u;
constexpr std::size_t kFactorCandidates = 4;

struct Approx {
  std::vector<std::uint32_t> pieces;  // net entries, operator order
  Mat2 matrix;
};

class Recursion {
 public:
  explicit Recursion(const SkNet& net) : net_(net) {}

  // `factor` marks commutator factors, which must be built from closed
  // entries so that their inverses stay within l0 gates per piece.
  Approx approx(const Mat2& u, int depth, bool factor = false) {
    if (depth == 0) {
      const auto i = static_cast<std::uint32_t>(factor ? net_.nearest_closed(u, 1)[0] : net_.nearest(u));
      return {{i}, net_.entries()[i].matrix};
    }
    return refine(u, approx(u, depth - 1, factor), depth);
  }

  Approx refine(const Mat2& u, const Approx& previous, int depth) {
    const Mat2 delta = u * previous.matrix.adjoint();
    const auto [v, w] = group_commutator_decompose(delta);
    Approx av, aw;
    if (depth == 1) {
      // Pick the best pair among a few nearest closed entries for each factor.
      // The identity (entry 0) is always a candidate, so a step never loses ground.
      auto vs = net_.nearest_closed(v, kFactorCandidates);
      auto ws = net_.nearest_closed(w, kFactorCandidates);
      vs.push_back(0);
      ws.push_back(0);
      double best = std::numeric_limits<double>::infinity();
      for (auto i : vs) {
        for (auto j : ws) {
          const Mat2& a = net_.entries()[i].matrix;
          const Mat2& b = net_.entries()[j].matrix;
          const double d = su2_distance(a * b * a.adjoint() * b.adjoint(), delta);
          if (d < best) {
            best = d;
            av = {{static_cast<std::uint32_t>(i)}, a};
            aw = {{static_cast<std::uint32_t>(j)}, b};
          }
        }
      }
    } else {
      av = approx(v, depth - 1, true);
      aw = approx(w, depth - 1, true);
    }
    Approx out;
    out.pieces.reserve(2 * av.pieces.size() + 2 * aw.pieces.size() + previous.pieces.size());
    out.pieces.insert(out.pieces.end(), av.pieces.begin(), av.pieces.end());
    out.pieces.insert(out.pieces.end(), aw.pieces.begin(), aw.pieces.end());
    append_inverse(out.pieces, av.pieces);
    append_inverse(out.pieces, aw.pieces);
    out.pieces.insert(out.pieces.end(), previous.pieces.begin(), previous.pieces.end());
    out.matrix = av.matrix * aw.matrix * av.matrix.adjoint() * aw.matrix.adjoint() * previous.matrix;
    return out;
  }

  SkResult finish(const Mat2& target, const Approx& a, int depth) const {
    SkResult r;
    for (auto p : a.pieces) {
      const auto& e = net_.entries()[p & ~kInverted];
      const Word& w = (p & kInverted) ? e.inverse_word : e.word;
      r.word.insert(r.word.end(), w.begin(), w.end());
    }
    r.word = net_.simplify(r.word);
    r.matrix = net_.word_matrix(r.word);
    r.distance = su2_distance(target, a.matrix);
    r.depth = depth;
    return r;
  }

 private:
  void append_inverse(std::vector<std::uint32_t>& out, const std::vector<std::uint32_t>& pieces) const {
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      out.push_back(*it ^ kInverted);
    }
  }

  const SkNet& net_;
};

void check_contraction(const SkNet& net, int depth) {
  if (depth >= 1 && net.coarseness() > kSkContractionThreshold) {
    throw Error(ErrorKind::Infeasible,
                "net coarseness " + std::to_string(net.coarseness()) +
                    " is above the contraction threshold; raise l0 (currently " +
                    std::to_string(net.l0()) + ")");
  }
}

}  // namespace

SkResult sk_approximate(const Mat2& target, const SkNet& net, int depth) {
  if (depth < 0) throw Error(ErrorKind::Domain, "recursion depth must be >= 0");
  check_contraction(net, depth);
  const Mat2 u = to_su2(target);
  Recursion rec(net);
  return rec.finish(u, rec.approx(u, depth), depth);
}

SkResult sk_approximate(const UnitaryMatrix& target, const SkNet& net, int depth) {
  if (target.dim() != 2) throw Error(ErrorKind::Dimension, "SK approximation needs a 2x2 unitary");
  return sk_approximate(Mat2(target.matrix()), net, depth);
}

std::vector<SkResult> sk_levels(const Mat2& target, const SkNet& net, int max_depth,
                                double stop_below) {
  if (max_depth < 0) throw Error(ErrorKind::Domain, "recursion depth must be >= 0");
  const Mat2 u = to_su2(target);
  Recursion rec(net);
  std::vector<SkResult> out;
  Approx current = rec.approx(u, 0);
  out.push_back(rec.finish(u, current, 0));
  for (int k = 1; k <= max_depth && out.back().distance > stop_below; ++k) {
    check_contraction(net, k);
    current = rec.refine(u, current, k);
    out.push_back(rec.finish(u, current, k));
  }
  return out;
}

SkScaling measure_sk_scaling(const SkNet& net, int max_depth, std::size_t targets,
                             std::uint64_t seed) {
  if (max_depth < 2) throw Error(ErrorKind::Domain, "scaling needs at least two recursion levels");
  constexpr double kFloor = 1e-13;
  std::mt19937_64 rng(seed);
  SkScaling out;
  out.targets = targets;
  out.mean_log10_distance.assign(static_cast<std::size_t>(max_depth) + 1, 0.0);
  out.mean_length.assign(static_cast<std::size_t>(max_depth) + 1, 0.0);
  std::vector<double> cx, cy, lx, ly;
  for (std::size_t t = 0; t < targets; ++t) {
    const auto levels = sk_levels(random_su2(rng), net, max_depth);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const double d = std::max(levels[k].distance, kFloor);
      out.mean_log10_distance[k] += std::log10(d) / static_cast<double>(targets);
      out.mean_length[k] += static_cast<double>(levels[k].word.size()) / static_cast<double>(targets);
      if (k >= 1 && levels[k].distance > kFloor && levels[k - 1].distance > kFloor) {
        cx.push_back(std::log(levels[k - 1].distance));
        cy.push_back(std::log(levels[k].distance));
      }
      if (k >= 1 && levels[k].distance > kFloor && !levels[k].word.empty()) {
        lx.push_back(std::log(std::log2(1.0 / levels[k].distance)));
        ly.push_back(std::log(static_cast<double>(levels[k].word.size())));
      }
    }
  }
  out.contraction = fit_line(cx, cy);
  out.length = fit_line(lx, ly);
  return out;
}

}  // namespace qcx
