// Copyright 2026 The gzeta Authors
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

#include "gzeta/cycle_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gzeta/error.hpp"
#include "gzeta/parallel.hpp"

namespace gzeta {

namespace {

// Depth-first walk extension from one starting arc (v0, v1).
class WalkEnumerator {
 public:
  WalkEnumerator(const Graph& g, std::size_t r_max, OracleMode mode)
      : g_(g), r_max_(r_max), mode_(mode), sums_(r_max) {}

  std::vector<Rational> run(Vertex v0, Vertex v1) {
    std::fill(sums_.begin(), sums_.end(), Rational(0));
    path_ = {v0, v1};
    extend(Rational(1));
    return sums_;
  }

 private:
  // w(f, e) for f = (a, b), e = (b, c)
  Rational transition_weight(Vertex a, Vertex b, Vertex c) const {
    Rational w(2, static_cast<unsigned long>(g_.degree(b)));
    w.canonicalize();
    if (c == a) w -= 1;
    return w;
  }

  bool admissible(Vertex a, Vertex c) const {
    return mode_ == OracleMode::weighted || c != a;
  }

  void extend(const Rational& weight) {
    const std::size_t length = path_.size() - 1;
    const Vertex v0 = path_.front();
    const Vertex last = path_.back();
    const Vertex before_last = path_[path_.size() - 2];
    if (last == v0) {
      // close e_length -> e_1 through v0
      const Vertex v1 = path_[1];
      if (admissible(before_last, v1)) {
        if (mode_ == OracleMode::weighted)
          sums_[length - 1] += weight * transition_weight(before_last, v0, v1);
        else
          sums_[length - 1] += 1;
      }
    }
    if (length == r_max_) return;
    for (Vertex next : g_.neighbors(last)) {
      if (!admissible(before_last, next)) continue;
      Rational w = weight;
      if (mode_ == OracleMode::weighted) {
        w *= transition_weight(before_last, last, next);
        if (w == 0) continue;
      }
      path_.push_back(next);
      extend(w);
      path_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t r_max_;
  OracleMode mode_;
  std::vector<Rational> sums_;
  std::vector<Vertex> path_;
};

}  // namespace

double oracle_work_bound(const Graph& g, std::size_t r_max, OracleMode mode) {
  std::size_t branching = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    // degree-2 backtracking carries weight 2/2 - 1 = 0 and is never followed
    const std::size_t b = mode == OracleMode::reduced ? d - 1 : (d == 2 ? 1 : d);
    branching = std::max(branching, b);
  }
  const double arcs = 2.0 * static_cast<double>(g.num_edges());
  if (r_max == 0) return 0.0;
  return arcs * std::pow(static_cast<double>(branching), static_cast<double>(r_max - 1));
}

SeriesCoefficients cycle_oracle(const Graph& g, std::size_t r_max, OracleMode mode,
                                unsigned workers) {
  if (r_max < 1) throw PreconditionError("cycle_oracle needs r_max >= 1");
  const double bound = oracle_work_bound(g, r_max, mode);
  if (bound > kOracleGuard) {
    std::ostringstream msg;
    msg << "cycle_oracle refuses r_max = " << r_max << ": walk tree bound " << bound
        << " exceeds the guard " << kOracleGuard;
    throw GuardError(msg.str());
  }

  std::vector<std::pair<Vertex, Vertex>> starts;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex w : g.neighbors(v)) starts.emplace_back(v, w);

  std::vector<std::vector<Rational>> partial(starts.size());
  parallel_for(starts.size(), workers, [&](std::size_t i) {
    WalkEnumerator walker(g, r_max, mode);
    partial[i] = walker.run(starts[i].first, starts[i].second);
  });

  SeriesCoefficients out{mode == OracleMode::weighted ? SeriesKind::weighted : SeriesKind::reduced,
                         std::vector<Rational>(r_max)};
  for (const auto& p : partial)
    for (std::size_t r = 0; r < r_max; ++r) out.values[r] += p[r];
  return out;
}

}  // namespace gzeta
