// Copyright 2026 The fowt-ccd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include "fowt/mooring/catenary.hpp"
#include "fowt/mooring/mlp.hpp"
#include "fowt/types.hpp"

namespace fowt::mooring {

// Default domain: fairlead excursions reachable under the platform motion
// bounds (surge from rated-thrust statics plus transient margin, heave and
// pitch within their path bounds), with a buffer on each side.
struct SurrogateDomain {
  double span_lo = 812.0;
  double span_hi = 878.0;
  double drop_lo = 242.0;
  double drop_hi = 256.0;

  bool contains(double span, double drop) const {
    return span >= span_lo && span <= span_hi && drop >= drop_lo && drop <= drop_hi;
  }
};

/// Two trained per-regime networks mapping fairlead offsets (span, drop) to
/// fairlead tensions (F_H, F_V), with a tabulated regime boundary.
class MooringSurrogate {
 public:
  MooringSurrogate() = default;
  MooringSurrogate(const MooringSurrogate& o) { *this = o; }
  MooringSurrogate& operator=(const MooringSurrogate& o) {
    if (this != &o) {
      net_suspended = o.net_suspended;
      net_seabed = o.net_seabed;
      domain = o.domain;
      line_weight = o.line_weight;
      boundary_drop = o.boundary_drop;
      boundary_span = o.boundary_span;
      in_lo = o.in_lo;
      in_hi = o.in_hi;
      out_lo_suspended = o.out_lo_suspended;
      out_hi_suspended = o.out_hi_suspended;
      out_lo_seabed = o.out_lo_seabed;
      out_hi_seabed = o.out_hi_seabed;
      max_rel_error_suspended = o.max_rel_error_suspended;
      max_rel_error_seabed = o.max_rel_error_seabed;
      clamp_count.store(o.clamp_count.load());
    }
    return *this;
  }

  /// Critical span at the given drop: the line is suspended for larger
  /// spans, seabed-resting for smaller ones.
  double boundary_span_at(double drop) const {
    const auto& hd = boundary_drop;
    if (drop <= hd.front()) return boundary_span.front();
    if (drop >= hd.back()) return boundary_span.back();
    for (std::size_t i = 0; i + 1 < hd.size(); ++i) {
      if (drop <= hd[i + 1]) {
        const double f = (drop - hd[i]) / (hd[i + 1] - hd[i]);
        return boundary_span[i] + f * (boundary_span[i + 1] - boundary_span[i]);
      }
    }
    return boundary_span.back();
  }

  LineRegime regime_at(double span, double drop) const {
    return span >= boundary_span_at(drop) ? LineRegime::kSuspended : LineRegime::kSeabed;
  }

  /// Forward pass of the regime-selected network. Throws on out-of-domain
  /// queries; never extrapolates silently.
  template <typename T>
  void eval(const T& span, const T& drop, T* f_h, T* f_v) const {
    if (!domain.contains(val(span), val(drop)))
      throw ModelError("extrapolation", "mooring surrogate query outside training domain");
    eval_inside(span, drop, f_h, f_v);
  }

  /// Total-function variant for optimizer residuals: out-of-domain queries
  /// are clamped to the domain hull and counted.
  template <typename T>
  void eval_clamped(const T& span, const T& drop, T* f_h, T* f_v) const {
    T s = span, d = drop;
    bool clamped = false;
    if (val(s) < domain.span_lo) { s = T(domain.span_lo); clamped = true; }
    if (val(s) > domain.span_hi) { s = T(domain.span_hi); clamped = true; }
    if (val(d) < domain.drop_lo) { d = T(domain.drop_lo); clamped = true; }
    if (val(d) > domain.drop_hi) { d = T(domain.drop_hi); clamped = true; }
    if (clamped) clamp_count.fetch_add(1, std::memory_order_relaxed);
    eval_inside(s, d, f_h, f_v);
  }

  Mlp net_suspended;
  Mlp net_seabed;
  SurrogateDomain domain;
  double line_weight = 0.0;  // total line wet weight, fixes the regime rule
  std::vector<double> boundary_drop;
  std::vector<double> boundary_span;
  Vec2<double> in_lo = Vec2<double>::Zero();
  Vec2<double> in_hi = Vec2<double>::Zero();
  Vec2<double> out_lo_suspended = Vec2<double>::Zero();
  Vec2<double> out_hi_suspended = Vec2<double>::Zero();
  Vec2<double> out_lo_seabed = Vec2<double>::Zero();
  Vec2<double> out_hi_seabed = Vec2<double>::Zero();
  Vec2<double> max_rel_error_suspended = Vec2<double>::Zero();
  Vec2<double> max_rel_error_seabed = Vec2<double>::Zero();
  mutable std::atomic<long> clamp_count{0};

 private:
  template <typename T>
  void eval_inside(const T& span, const T& drop, T* f_h, T* f_v) const {
    const bool suspended = regime_at(val(span), val(drop)) == LineRegime::kSuspended;
    const Mlp& net = suspended ? net_suspended : net_seabed;
    const Vec2<double>& olo = suspended ? out_lo_suspended : out_lo_seabed;
    const Vec2<double>& ohi = suspended ? out_hi_suspended : out_hi_seabed;
    std::vector<T> in(2);
    in[0] = 2.0 * (span - in_lo[0]) / (in_hi[0] - in_lo[0]) - 1.0;
    in[1] = 2.0 * (drop - in_lo[1]) / (in_hi[1] - in_lo[1]) - 1.0;
    const std::vector<T> out = net.forward(in);
    *f_h = olo[0] + (out[0] + 1.0) * 0.5 * (ohi[0] - olo[0]);
    *f_v = olo[1] + (out[1] + 1.0) * 0.5 * (ohi[1] - olo[1]);
  }
};

struct SurrogateTrainConfig {
  int span_samples = 56;
  int drop_samples = 25;
  std::vector<int> hidden = {16, 16};
  std::uint64_t seed = 2024;
  double max_rel_error = 0.01;  // acceptance threshold on the held-out grid
  TrainOptions train;
};

/// Trains the two regime networks against the exact catenary solver on a
/// rectangular (span, drop) grid and validates on a shifted held-out grid.
/// Throws training-failure when the range-relative error exceeds the
/// configured bound.
MooringSurrogate train_surrogate(const LineProperties& line, const SurrogateDomain& domain,
                                 const SurrogateTrainConfig& config);

/// Versioned flat-text serialization with bit-exact round-trip.
void save_surrogate(const MooringSurrogate& s, std::ostream& os);
MooringSurrogate load_surrogate(std::istream& is);
void save_surrogate_file(const MooringSurrogate& s, const std::string& path);
MooringSurrogate load_surrogate_file(const std::string& path);

}  // namespace fowt::mooring
