// Copyright 2026 The sepbit Authors.
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

#include "sepbit/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sepbit/rng.hpp"

namespace sepbit {

namespace {

constexpr double kUnitTol = 1e-10;

/// Finds the pair with the largest dot product; false if under two vectors.
bool worst_pair_of(const std::vector<Eigen::VectorXd>& v, int* wi, int* wj,
                   double* wdot) {
  const int n = static_cast<int>(v.size());
  if (n < 2) {
    return false;
  }
  *wi = 0;
  *wj = 1;
  *wdot = v[0].dot(v[1]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = v[i].dot(v[j]);
      if (d > *wdot) {
        *wi = i;
        *wj = j;
        *wdot = d;
      }
    }
  }
  return true;
}

Eigen::VectorXd random_unit(SplitMix64& rng, int d) {
  Eigen::VectorXd v(d);
  double n = 0.0;
  do {
    for (int k = 0; k < d; ++k) {
      v(k) = rng.next_normal();
    }
    n = v.norm();
  } while (n < 1e-9);
  return v / n;
}

/// One repulsion sweep: for each vector in turn, a projected-gradient step
/// on sum_{pairs} max(0, dot)^2 (each vector retreats from the neighbors it
/// still overlaps with on the positive side), renormalizing as it goes. A
/// vector driven to the origin by symmetric pressure is re-seeded randomly.
/// Returns the worst pairwise dot after the sweep.
double repulsion_sweep(std::vector<Eigen::VectorXd>& v, double gamma,
                       SplitMix64& rng) {
  const int n = static_cast<int>(v.size());
  const int d = static_cast<int>(v.front().size());
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd push = Eigen::VectorXd::Zero(d);
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      double dot = v[i].dot(v[j]);
      if (dot > 0.0) {
        push += dot * v[j];
      }
    }
    v[i] -= gamma * push;
    double norm = v[i].norm();
    if (norm < 1e-8) {
      v[i] = random_unit(rng, d);
    } else {
      v[i] /= norm;
    }
  }
  double worst = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      worst = std::max(worst, v[i].dot(v[j]));
    }
  }
  return worst;
}

/// One multi-restart attempt at placing `size` vectors within a budget of
/// `share` vector moves (a sweep costs `size` moves); on success copies the
/// configuration into *out. A restart is abandoned once the worst dot stops
/// making geometric progress: feasible configurations contract linearly
/// under the repulsion flow, so a plateau signals a bad basin (or an
/// infeasible size, where every restart plateaus near the positive optimum).
bool attempt_size(int d, int size, long long share, std::uint64_t seed,
                  double tol, long long* used,
                  std::vector<Eigen::VectorXd>* out) {
  *used = 0;
  if (share <= 0) {
    return false;
  }
  constexpr double kGamma = 1.0;        // gradient step
  constexpr int kStallWindow = 200;     // sweeps allowed per 10% improvement
  std::uint64_t restart = 0;
  while (*used < share) {
    SplitMix64 rng = substream(seed, restart++);
    std::vector<Eigen::VectorXd> v;
    v.reserve(size);
    for (int k = 0; k < size; ++k) {
      v.push_back(random_unit(rng, d));
    }
    int wi, wj;
    double worst;
    if (!worst_pair_of(v, &wi, &wj, &worst) || worst <= tol) {
      *out = std::move(v);
      return true;
    }
    double reference = worst;
    int since_improvement = 0;
    while (*used < share) {
      *used += size;
      worst = repulsion_sweep(v, kGamma, rng);
      if (worst <= tol) {
        *out = std::move(v);
        return true;
      }
      if (worst < 0.9 * reference) {
        reference = worst;
        since_improvement = 0;
      } else if (++since_improvement >= kStallWindow) {
        break;
      }
    }
  }
  return false;
}

}  // namespace

Eigen::VectorXd to_packing_vector(const ProductPureState& s) {
  Eigen::VectorXd v(6);
  v << s.a().vec(), s.b().vec();
  return v;
}

PackingInstance packing_from_states(
    const std::vector<ProductPureState>& states) {
  PackingInstance p;
  p.dim = 6;
  p.vectors.reserve(states.size());
  for (const ProductPureState& s : states) {
    Eigen::VectorXd v = to_packing_vector(s);
    p.vectors.push_back(v / v.norm());
  }
  return p;
}

PackingVerdict is_valid_packing(const PackingInstance& p, double tol) {
  if (p.dim < 1) {
    throw std::invalid_argument("is_valid_packing: dimension must be >= 1");
  }
  if (p.vectors.empty()) {
    throw std::invalid_argument("is_valid_packing: needs at least one vector");
  }
  PackingVerdict verdict;
  bool units = true;
  for (const Eigen::VectorXd& v : p.vectors) {
    if (v.size() != p.dim) {
      throw std::invalid_argument(
          "is_valid_packing: vector/instance dimension mismatch");
    }
    if (std::abs(v.norm() - 1.0) > kUnitTol) {
      units = false;
    }
  }
  int wi, wj;
  double wdot;
  if (worst_pair_of(p.vectors, &wi, &wj, &wdot)) {
    verdict.worst_pair = PackingVerdict::WorstPair{wi, wj, wdot};
    verdict.valid = units && wdot <= tol;
  } else {
    verdict.valid = units;
  }
  return verdict;
}

PackingInstance max_packing_construct(int d) {
  if (d < 1) {
    throw std::invalid_argument("max_packing_construct: d must be >= 1");
  }
  PackingInstance p;
  p.dim = d;
  p.vectors.reserve(2 * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (double sign : {1.0, -1.0}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v(i) = sign;
      p.vectors.push_back(v);
    }
  }
  return p;
}

PackingSearchReport packing_search(int d, int target, long long budget,
                                   std::uint64_t seed) {
  if (d < 1) {
    throw std::invalid_argument("packing_search: d must be >= 1");
  }
  if (target < 1) {
    throw std::invalid_argument("packing_search: target must be >= 1");
  }
  if (budget < 1) {
    throw std::invalid_argument("packing_search: budget must be >= 1");
  }
  const double tol = kDefaultTol;
  PackingSearchReport report;
  long long remaining = budget;
  for (int size = target; size >= 1 && remaining > 0; --size) {
    long long share = (size == 1) ? remaining : (remaining + 1) / 2;
    long long used = 0;
    std::vector<Eigen::VectorXd> found;
    bool ok = attempt_size(d, size, share, seed + static_cast<std::uint64_t>(size),
                           tol, &used, &found);
    report.steps_used += used;
    remaining -= used;
    if (ok) {
      report.best_size = size;
      report.best_instance.dim = d;
      report.best_instance.vectors = std::move(found);
      break;
    }
  }
  return report;
}

}  // namespace sepbit
