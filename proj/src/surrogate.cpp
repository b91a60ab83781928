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

#include "fowt/mooring/surrogate.hpp"

#include <fstream>
#include <sstream>

#include "fowt/io/text.hpp"

namespace fowt::mooring {
namespace {

double critical_span(const LineProperties& line, double drop, double span_lo, double span_hi) {
  auto suspended_at = [&](double s) {
    return solve_catenary(s, drop, line).regime == LineRegime::kSuspended;
  };
  const bool lo = suspended_at(span_lo);
  const bool hi = suspended_at(span_hi);
  if (lo == hi) return lo ? span_lo - 1.0 : span_hi + 1.0;  // one regime over the row
  double a = span_lo, b = span_hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (a + b);
    (suspended_at(mid) == hi) ? b = mid : a = mid;
  }
  return 0.5 * (a + b);
}

struct RegimeSamples {
  std::vector<double> span, drop, fh, fv;
};

void normalize_targets(const RegimeSamples& s, Vec2<double>* lo, Vec2<double>* hi,
                       MatrixXd* targets) {
  (*lo)[0] = *std::min_element(s.fh.begin(), s.fh.end());
  (*hi)[0] = *std::max_element(s.fh.begin(), s.fh.end());
  (*lo)[1] = *std::min_element(s.fv.begin(), s.fv.end());
  (*hi)[1] = *std::max_element(s.fv.begin(), s.fv.end());
  for (int k = 0; k < 2; ++k)
    if ((*hi)[k] - (*lo)[k] < 1e-9) (*hi)[k] = (*lo)[k] + 1e-9;
  targets->resize(2, static_cast<Eigen::Index>(s.fh.size()));
  for (std::size_t i = 0; i < s.fh.size(); ++i) {
    (*targets)(0, static_cast<Eigen::Index>(i)) =
        2.0 * (s.fh[i] - (*lo)[0]) / ((*hi)[0] - (*lo)[0]) - 1.0;
    (*targets)(1, static_cast<Eigen::Index>(i)) =
        2.0 * (s.fv[i] - (*lo)[1]) / ((*hi)[1] - (*lo)[1]) - 1.0;
  }
}

}  // namespace

MooringSurrogate train_surrogate(const LineProperties& line, const SurrogateDomain& domain,
                                 const SurrogateTrainConfig& config) {
  line.validate();
  MooringSurrogate s;
  s.domain = domain;
  s.line_weight = line.total_weight();
  s.in_lo << domain.span_lo, domain.drop_lo;
  s.in_hi << domain.span_hi, domain.drop_hi;

  // Regime boundary table.
  const int n_boundary = 41;
  for (int i = 0; i < n_boundary; ++i) {
    const double d = domain.drop_lo + (domain.drop_hi - domain.drop_lo) * i / (n_boundary - 1);
    s.boundary_drop.push_back(d);
    s.boundary_span.push_back(critical_span(line, d, domain.span_lo, domain.span_hi));
  }

  // Exact solutions on the training grid, split by solver-reported regime.
  // Forces are continuous across the regime boundary, so samples within a
  // small span margin of it feed both networks; this pins the two fits
  // together where the selection switches.
  const double overlap = 0.05 * (domain.span_hi - domain.span_lo);
  RegimeSamples suspended, seabed;
  for (int i = 0; i < config.span_samples; ++i) {
    const double l = domain.span_lo +
                     (domain.span_hi - domain.span_lo) * i / (config.span_samples - 1);
    for (int j = 0; j < config.drop_samples; ++j) {
      const double h = domain.drop_lo +
                       (domain.drop_hi - domain.drop_lo) * j / (config.drop_samples - 1);
      const CatenaryResult r = solve_catenary(l, h, line);
      if (r.regime != s.regime_at(l, h))
        throw ModelError("training-failure", "regime boundary inconsistent with solver");
      const bool near_boundary = std::abs(l - s.boundary_span_at(h)) < overlap;
      const bool is_suspended = r.regime == LineRegime::kSuspended;
      for (RegimeSamples* bucket : {&suspended, &seabed}) {
        const bool wants = (bucket == &suspended) == is_suspended;
        if (!wants && !near_boundary) continue;
        bucket->span.push_back(l);
        bucket->drop.push_back(h);
        bucket->fh.push_back(r.f_horizontal);
        bucket->fv.push_back(r.f_vertical);
      }
    }
  }
  if (suspended.span.size() < 8 || seabed.span.size() < 8)
    throw ModelError("training-failure", "domain does not cover both line regimes");

  auto train_one = [&](const RegimeSamples& samples, Vec2<double>* olo, Vec2<double>* ohi,
                       std::uint64_t seed) {
    MatrixXd inputs(2, static_cast<Eigen::Index>(samples.span.size()));
    for (std::size_t i = 0; i < samples.span.size(); ++i) {
      inputs(0, static_cast<Eigen::Index>(i)) =
          2.0 * (samples.span[i] - s.in_lo[0]) / (s.in_hi[0] - s.in_lo[0]) - 1.0;
      inputs(1, static_cast<Eigen::Index>(i)) =
          2.0 * (samples.drop[i] - s.in_lo[1]) / (s.in_hi[1] - s.in_lo[1]) - 1.0;
    }
    MatrixXd targets;
    normalize_targets(samples, olo, ohi, &targets);
    Mlp net = make_mlp(2, config.hidden, 2, seed);
    TrainOptions opts = config.train;
    opts.seed = seed;
    train_mlp(net, inputs, targets, opts);
    return net;
  };
  // The two regimes train independently (and could do so concurrently).
  s.net_suspended = train_one(suspended, &s.out_lo_suspended, &s.out_hi_suspended, config.seed);
  s.net_seabed = train_one(seabed, &s.out_lo_seabed, &s.out_hi_seabed, config.seed + 1);

  // Range-relative error on a shifted held-out grid (cell midpoints).
  Vec2<double> range_susp = s.out_hi_suspended - s.out_lo_suspended;
  Vec2<double> range_seab = s.out_hi_seabed - s.out_lo_seabed;
  for (int i = 0; i + 1 < config.span_samples; ++i) {
    const double l = domain.span_lo +
                     (domain.span_hi - domain.span_lo) * (i + 0.5) / (config.span_samples - 1);
    for (int j = 0; j + 1 < config.drop_samples; ++j) {
      const double h = domain.drop_lo +
                       (domain.drop_hi - domain.drop_lo) * (j + 0.5) / (config.drop_samples - 1);
      const CatenaryResult r = solve_catenary(l, h, line);
      double fh = 0.0, fv = 0.0;
      s.eval(l, h, &fh, &fv);
      Vec2<double>& err = r.regime == LineRegime::kSuspended ? s.max_rel_error_suspended
                                                             : s.max_rel_error_seabed;
      const Vec2<double>& range =
          r.regime == LineRegime::kSuspended ? range_susp : range_seab;
      err[0] = std::max(err[0], std::abs(fh - r.f_horizontal) / range[0]);
      err[1] = std::max(err[1], std::abs(fv - r.f_vertical) / range[1]);
    }
  }
  const double worst = std::max({s.max_rel_error_suspended.maxCoeff(),
                                 s.max_rel_error_seabed.maxCoeff()});
  if (worst > config.max_rel_error)
    throw ModelError("training-failure",
                     "surrogate validation error " + std::to_string(worst) +
                         " exceeds bound; widen the architecture or add samples");
  return s;
}

namespace {

void write_vec(std::ostream& os, const char* tag, const double* v, std::size_t n) {
  os << tag;
  for (std::size_t i = 0; i < n; ++i) os << ' ' << io::format_double(v[i]);
  os << '\n';
}

void write_net(std::ostream& os, const Mlp& net) {
  os << "layers " << net.weights.size();
  os << ' ' << net.weights.front().cols();
  for (const auto& w : net.weights) os << ' ' << w.rows();
  os << '\n';
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    write_vec(os, "w", net.weights[l].data(),
              static_cast<std::size_t>(net.weights[l].size()));
    write_vec(os, "b", net.biases[l].data(), static_cast<std::size_t>(net.biases[l].size()));
  }
}

std::vector<double> read_line_values(std::istream& is, const std::string& expect_tag) {
  std::string line;
  if (!std::getline(is, line)) throw ModelError("parse", "surrogate file truncated");
  std::istringstream ss(line);
  std::string tag;
  ss >> tag;
  if (tag != expect_tag)
    throw ModelError("parse", "surrogate file: expected '" + expect_tag + "', got '" + tag + "'");
  std::vector<double> vals;
  std::string tok;
  while (ss >> tok) vals.push_back(io::parse_double(tok));
  return vals;
}

Mlp read_net(std::istream& is) {
  const std::vector<double> sizes = read_line_values(is, "layers");
  const int n_layers = static_cast<int>(sizes[0]);
  Mlp net;
  for (int l = 0; l < n_layers; ++l) {
    const int n_in = static_cast<int>(sizes[static_cast<std::size_t>(l) + 1]);
    const int n_out = static_cast<int>(sizes[static_cast<std::size_t>(l) + 2]);
    const std::vector<double> w = read_line_values(is, "w");
    const std::vector<double> b = read_line_values(is, "b");
    if (static_cast<int>(w.size()) != n_in * n_out || static_cast<int>(b.size()) != n_out)
      throw ModelError("parse", "surrogate file: weight block size mismatch");
    MatrixXd wm(n_out, n_in);
    std::copy(w.begin(), w.end(), wm.data());
    VectorXd bv(n_out);
    std::copy(b.begin(), b.end(), bv.data());
    net.weights.push_back(std::move(wm));
    net.biases.push_back(std::move(bv));
  }
  return net;
}

}  // namespace

void save_surrogate(const MooringSurrogate& s, std::ostream& os) {
  os << "fowt-mooring-surrogate 1\n";
  const double dom[4] = {s.domain.span_lo, s.domain.span_hi, s.domain.drop_lo, s.domain.drop_hi};
  write_vec(os, "domain", dom, 4);
  write_vec(os, "line_weight", &s.line_weight, 1);
  write_vec(os, "boundary_drop", s.boundary_drop.data(), s.boundary_drop.size());
  write_vec(os, "boundary_span", s.boundary_span.data(), s.boundary_span.size());
  write_vec(os, "in_lo", s.in_lo.data(), 2);
  write_vec(os, "in_hi", s.in_hi.data(), 2);
  write_vec(os, "out_lo_suspended", s.out_lo_suspended.data(), 2);
  write_vec(os, "out_hi_suspended", s.out_hi_suspended.data(), 2);
  write_vec(os, "out_lo_seabed", s.out_lo_seabed.data(), 2);
  write_vec(os, "out_hi_seabed", s.out_hi_seabed.data(), 2);
  write_vec(os, "max_rel_error_suspended", s.max_rel_error_suspended.data(), 2);
  write_vec(os, "max_rel_error_seabed", s.max_rel_error_seabed.data(), 2);
  write_net(os, s.net_suspended);
  write_net(os, s.net_seabed);
}

MooringSurrogate load_surrogate(std::istream& is) {
  std::string header;
  std::getline(is, header);
  if (header != "fowt-mooring-surrogate 1")
    throw ModelError("parse", "unsupported surrogate file header: " + header);
  MooringSurrogate s;
  const auto dom = read_line_values(is, "domain");
  s.domain = {dom[0], dom[1], dom[2], dom[3]};
  s.line_weight = read_line_values(is, "line_weight")[0];
  s.boundary_drop = read_line_values(is, "boundary_drop");
  s.boundary_span = read_line_values(is, "boundary_span");
  auto to2 = [](const std::vector<double>& v) {
    Vec2<double> out;
    out << v[0], v[1];
    return out;
  };
  s.in_lo = to2(read_line_values(is, "in_lo"));
  s.in_hi = to2(read_line_values(is, "in_hi"));
  s.out_lo_suspended = to2(read_line_values(is, "out_lo_suspended"));
  s.out_hi_suspended = to2(read_line_values(is, "out_hi_suspended"));
  s.out_lo_seabed = to2(read_line_values(is, "out_lo_seabed"));
  s.out_hi_seabed = to2(read_line_values(is, "out_hi_seabed"));
  s.max_rel_error_suspended = to2(read_line_values(is, "max_rel_error_suspended"));
  s.max_rel_error_seabed = to2(read_line_values(is, "max_rel_error_seabed"));
  s.net_suspended = read_net(is);
  s.net_seabed = read_net(is);
  return s;
}

void save_surrogate_file(const MooringSurrogate& s, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ModelError("io", "cannot write " + path);
  save_surrogate(s, os);
}

MooringSurrogate load_surrogate_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ModelError("io", "cannot read " + path);
  return load_surrogate(is);
}

}  // namespace fowt::mooring
