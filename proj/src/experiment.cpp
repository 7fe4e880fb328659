// Copyright 2026 The ffdioph Authors
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

#include "ffdioph/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ffdioph/contfrac.hpp"
#include "ffdioph/errors.hpp"
#include "ffdioph/field.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/measure.hpp"
#include "ffdioph/orbit.hpp"
#include "ffdioph/poly.hpp"
#include "ffdioph/qexact.hpp"
#include "ffdioph/rng.hpp"
#include "ffdioph/tree_geom.hpp"

namespace ffdioph {

namespace {

// Runs fn(trial) for trial = 0..trials-1 across `workers` threads.  Results
// land in trial order and every trial derives its randomness from its own
// index, so the outcome does not depend on the thread count or schedule.
template <typename Result, typename Fn>
std::vector<Result> MapTrials(int trials, int workers, Fn fn) {
  std::vector<Result> out(trials);
  if (workers <= 1) {
    for (int i = 0; i < trials; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto body = [&]() {
    while (true) {
      int i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= trials) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(trials, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

double MedianInts(std::vector<int64_t> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  size_t h = v.size() / 2;
  if (v.size() % 2 == 1) return static_cast<double>(v[h]);
  return (static_cast<double>(v[h - 1]) + static_cast<double>(v[h])) / 2.0;
}

double MedianDoubles(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  size_t h = v.size() / 2;
  if (v.size() % 2 == 1) return v[h];
  return (v[h - 1] + v[h]) / 2.0;
}

// Least-squares slope of y against x.
double FitSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

bool NextVec(std::vector<uint32_t>* v, uint32_t q) {
  for (auto& c : *v) {
    if (++c < q) return true;
    c = 0;
  }
  return false;
}

std::vector<double> SplitDoubles(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) Fail(ErrorKind::kUsage, "bad number: " + tok);
      out.push_back(v);
    } catch (const Error&) {
      throw;
    } catch (...) {
      Fail(ErrorKind::kUsage, "bad number in test-function spec: " + tok);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TestFunction CustomFromList(const std::string& args, uint32_t q, bool psi) {
  std::vector<double> v = SplitDoubles(args);
  if (v.size() < 3 || v.size() > 5) {
    Fail(ErrorKind::kUsage,
         "custom test function wants C,a,b[,t0[,cap]]; got " + args);
  }
  double t0 = v.size() >= 4 ? v[3] : -1.0;
  double cap = v.size() >= 5 ? v[4] : 1.0;
  return psi ? TestFunction::CustomPsi(q, v[0], v[1], v[2], t0, cap)
             : TestFunction::Custom(q, v[0], v[1], v[2], t0, cap);
}

// Echoes the shared part of a config.  Worker counts are deliberately never
// echoed: they affect scheduling only, and reports must be byte-identical
// across worker counts.
Json BaseConfig(const ExperimentConfig& cfg) {
  Json j;
  j["q"] = cfg.q;
  return j;
}

struct Moments {
  int64_t sum = 0;
  int64_t sumsq = 0;

  void Add(int64_t x) {
    sum += x;
    sumsq += x * x;
  }
  double Mean(int64_t n) const { return static_cast<double>(sum) / n; }
  double SampleVariance(int64_t n) const {
    if (n < 2) return 0.0;
    const double mean = Mean(n);
    return (static_cast<double>(sumsq) - mean * static_cast<double>(sum)) /
           static_cast<double>(n - 1);
  }
};

}  // namespace

TestFunction ParsePhiSpec(const std::string& spec, uint32_t q) {
  const std::string kPreset = "preset:";
  const std::string kCustom = "custom:";
  const std::string kPsi = "psi:";
  if (spec.rfind(kPreset, 0) == 0) {
    return TestFunction::Preset(spec.substr(kPreset.size()), q);
  }
  if (spec.rfind(kCustom, 0) == 0) {
    return CustomFromList(spec.substr(kCustom.size()), q, /*psi=*/false);
  }
  if (spec.rfind(kPsi, 0) == 0) {
    return CustomFromList(spec.substr(kPsi.size()), q, /*psi=*/true);
  }
  return TestFunction::Preset(spec, q);
}

int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  const char* env = std::getenv("FFDIOPH_WORKERS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// khintchine

namespace {

struct KhintchineTrial {
  // Window depths d in [d_min, d_max] whose target ball contains f.
  std::vector<int32_t> hits;
  // Number of qualifying depths in (d_max, d_far].
  int32_t far_hits = 0;
};

}  // namespace

Json RunKhintchine(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) Fail(ErrorKind::kUsage, "trials must be >= 1");
  if (cfg.d_max < 0) Fail(ErrorKind::kUsage, "d_max must be >= 0");
  if (cfg.d_far != 0 && cfg.d_far <= cfg.d_max) {
    Fail(ErrorKind::kUsage, "d_far must be 0 or greater than d_max");
  }
  FieldPtr field = Field::MakeQ(cfg.q);
  const Poly q0 = NormalizeModulus(Poly::Parse(field, cfg.q0));
  const bool q0_unit = q0.IsOne();
  const TestFunction phi = ParsePhiSpec(cfg.phi, cfg.q);
  const int d_top = cfg.d_far > 0 ? cfg.d_far : cfg.d_max;

  // The report covers the strict tail of the depth range: every depth from
  // d_min up is strict, so same-depth target balls are pairwise disjoint and
  // the expected number of solutions per window is exactly its measure.
  int d_min = -1;
  for (int d = 0; d <= d_top; ++d) {
    if (!phi.StrictAt(d)) {
      d_min = -1;
    } else if (d_min < 0) {
      d_min = d;
    }
  }
  if (d_min < 0 || d_min > cfg.d_max) {
    Fail(ErrorKind::kPhiOutOfRegime,
         "no window depth range where the test function is strictly "
         "below the disjointness line");
  }

  // Exact per-window expectations.
  std::vector<QExact> mu;
  std::vector<BigInt> counts;
  std::vector<int> radii;
  mu.reserve(d_top - d_min + 1);
  for (int d = d_min; d <= d_top; ++d) {
    const int k_d = phi.ThresholdRadius(d);
    radii.push_back(k_d);
    counts.push_back(OrbitCountAtDepth(field, q0, d, cfg.budget));
    mu.push_back(QExact(cfg.q, counts.back(), k_d));
  }

  const int workers = ResolveWorkers(cfg.workers);
  auto run_trial = [&](int trial) {
    StreamSource src(field, Rng::Stream(cfg.seed, static_cast<uint64_t>(trial)));
    CfStreamOptions opts;
    opts.max_qdeg = d_top + 1;
    opts.initial_prec = 2 * (d_top + 1) + 8;
    if (!q0_unit) opts.track_mod = q0;
    KhintchineTrial out;
    bool prev_divisible = q0_unit;  // divisibility of Q_{n-1}, starting at Q_0 = 1
    auto consider = [&](int d, int nu, bool divisible) {
      if (d < d_min || d > d_top || !divisible) return;
      if (nu < phi.ThresholdRadius(d)) return;
      if (d <= cfg.d_max) {
        out.hits.push_back(d);
      } else {
        ++out.far_hits;
      }
    };
    auto cb = [&](const CfDigitEvent& ev) {
      // Event n certifies convergent n-1: its depth is deg Q_{n-1} and its
      // valuation distance from f is deg Q_{n-1} + deg Q_n.
      consider(ev.deg_q_prev, ev.deg_q_prev + ev.deg_q, prev_divisible);
      prev_divisible = ev.q_mod == nullptr ? true : ev.q_mod->IsZero();
      return true;
    };
    CfStreamResult res = CfStreamDigits(&src, opts, cb);
    if (res.status == CfStatus::kTerminated) {
      // f itself is the last convergent; its valuation distance is infinite.
      if (res.digits == 0) {
        consider(0, kPosInfVal, q0_unit);
      } else {
        consider(res.deg_q, kPosInfVal, prev_divisible);
      }
    }
    // Positive-depth orbit points have numerator degree strictly below
    // denominator degree; the convergents of f satisfy that exactly when the
    // polynomial part vanishes.  (The depth-0 point |a0| stays valid either
    // way.)
    if (!res.a0.IsZero()) {
      out.hits.erase(
          std::remove_if(out.hits.begin(), out.hits.end(),
                         [](int32_t d) { return d >= 1; }),
          out.hits.end());
      out.far_hits = 0;
    }
    return out;
  };
  std::vector<KhintchineTrial> trials =
      MapTrials<KhintchineTrial>(cfg.trials, workers, run_trial);

  // Aggregate in trial order.
  const int n_windows = cfg.d_max - d_min + 1;
  std::vector<int64_t> hits_by_window(n_windows, 0);
  int64_t trials_with_any = 0;
  int64_t trials_with_tail = 0;
  int64_t total_hits = 0;
  Moments far;
  for (const KhintchineTrial& t : trials) {
    for (int32_t d : t.hits) ++hits_by_window[d - d_min];
    total_hits += static_cast<int64_t>(t.hits.size());
    if (!t.hits.empty()) ++trials_with_any;
    if (static_cast<int>(t.hits.size()) >= cfg.tail_min_count) {
      ++trials_with_tail;
    }
    far.Add(t.far_hits);
  }

  Json config = BaseConfig(cfg);
  config["q0"] = q0.Format();
  config["phi"] = phi.Describe();
  config["seed"] = cfg.seed;
  config["trials"] = cfg.trials;
  config["d_max"] = cfg.d_max;
  config["d_far"] = cfg.d_far;
  config["tail_min_count"] = cfg.tail_min_count;
  Json report = MakeReport("khintchine", std::move(config));

  auto& results = report["results"];
  results["classification"] = IntegralClassName(phi.Classify());
  results["d_min"] = d_min;

  Json rows = Json::array();
  int windows_ok = 0;
  double max_abs_z = 0.0;
  QExact sum_mu = QExact::Zero(cfg.q);
  for (int i = 0; i < n_windows; ++i) {
    const int d = d_min + i;
    const double p = mu[i].ToDouble();
    const double mean =
        static_cast<double>(hits_by_window[i]) / cfg.trials;
    const double sigma = std::sqrt(p * (1.0 - p) / cfg.trials);
    double z;
    if (sigma > 0.0) {
      z = (mean - p) / sigma;
    } else {
      z = mean == p ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const bool ok = std::fabs(mean - p) <= 3.0 * sigma;
    if (ok) ++windows_ok;
    max_abs_z = std::max(max_abs_z, std::fabs(z));
    sum_mu = sum_mu + mu[i];
    rows.push_back(Json::array({d, 2 * d, radii[i], counts[i].str(),
                                mu[i].Render(), p, mean, sigma, z, ok}));
  }
  AddTable(&report, "windows",
           {"d", "D", "radius", "orbit_count", "measure_exact", "measure",
            "empirical_mean", "sigma", "z", "within_3sigma"},
           std::move(rows));

  results["windows_total"] = n_windows;
  results["windows_within_3sigma"] = windows_ok;
  results["max_abs_z"] = max_abs_z;
  results["sum_measure_exact"] = sum_mu.Render();
  results["sum_measure"] = sum_mu.ToDouble();
  results["mean_total_hits"] = static_cast<double>(total_hits) / cfg.trials;
  results["frac_with_any"] =
      static_cast<double>(trials_with_any) / cfg.trials;
  results["frac_with_tail"] =
      static_cast<double>(trials_with_tail) / cfg.trials;

  if (cfg.d_far > 0) {
    QExact inc_exact = QExact::Zero(cfg.q);
    for (int d = cfg.d_max + 1; d <= cfg.d_far; ++d) {
      inc_exact = inc_exact + mu[d - d_min];
    }
    const double var = far.SampleVariance(cfg.trials);
    Json inc;
    inc["window_range"] = Json::array({cfg.d_max + 1, cfg.d_far});
    inc["exact_sum"] = inc_exact.Render();
    inc["exact_sum_value"] = inc_exact.ToDouble();
    inc["empirical_mean"] = far.Mean(cfg.trials);
    inc["sample_variance"] = var;
    inc["sigma_mean"] = std::sqrt(var / cfg.trials);
    results["increment"] = std::move(inc);
  }

  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d of %d windows within 3 sigma; max |z| = %.3f", windows_ok,
                n_windows, max_abs_z);
  AddCheck(&report, "windows_within_3sigma", windows_ok == n_windows, detail);
  return report;
}

// ---------------------------------------------------------------------------
// loglaw

namespace {

struct LoglawTrial {
  std::vector<int32_t> m_at;   // running max digit degree per rung
  std::vector<double> l_at;    // running max peak / ln(entry time) per rung
  bool terminated = false;
};

}  // namespace

Json RunLoglaw(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) Fail(ErrorKind::kUsage, "trials must be >= 1");
  if (cfg.rungs.empty()) Fail(ErrorKind::kUsage, "at least one rung");
  for (size_t i = 0; i < cfg.rungs.size(); ++i) {
    if (cfg.rungs[i] < 1 ||
        (i > 0 && cfg.rungs[i] <= cfg.rungs[i - 1])) {
      Fail(ErrorKind::kUsage, "rungs must be ascending and positive");
    }
  }
  FieldPtr field = Field::MakeQ(cfg.q);
  const int n_rungs = static_cast<int>(cfg.rungs.size());
  const int n_max = cfg.rungs.back();
  const int workers = ResolveWorkers(cfg.workers);

  auto run_trial = [&](int trial) {
    StreamSource src(field, Rng::Stream(cfg.seed, static_cast<uint64_t>(trial)));
    CfStreamOptions opts;
    opts.max_digits = n_max;
    LoglawTrial out;
    out.m_at.assign(n_rungs, 0);
    out.l_at.assign(n_rungs, 0.0);
    int running_m = 0;
    double running_l = 0.0;
    int rung_pos = 0;
    auto snapshot_upto = [&](int index_exclusive) {
      while (rung_pos < n_rungs && cfg.rungs[rung_pos] < index_exclusive) {
        out.m_at[rung_pos] = running_m;
        out.l_at[rung_pos] = running_l;
        ++rung_pos;
      }
    };
    auto cb = [&](const CfDigitEvent& ev) {
      snapshot_upto(ev.index);
      running_m = std::max(running_m, ev.deg_a);
      if (ev.deg_q_prev >= 1) {
        // Event n opens the tent of convergent n-1: entry time 2 deg Q_{n-1},
        // peak deg a_n.
        const double ratio =
            ev.deg_a / std::log(2.0 * ev.deg_q_prev);
        running_l = std::max(running_l, ratio);
      }
      return true;
    };
    CfStreamResult res = CfStreamDigits(&src, opts, cb);
    snapshot_upto(INT32_MAX);
    out.terminated = res.status == CfStatus::kTerminated;
    return out;
  };
  std::vector<LoglawTrial> trials =
      MapTrials<LoglawTrial>(cfg.trials, workers, run_trial);

  Json config = BaseConfig(cfg);
  config["seed"] = cfg.seed;
  config["trials"] = cfg.trials;
  config["rungs"] = cfg.rungs;
  Json report = MakeReport("loglaw", std::move(config));

  const double ln_q = std::log(static_cast<double>(cfg.q));
  int64_t terminated = 0;
  for (const auto& t : trials) terminated += t.terminated ? 1 : 0;

  Json rows = Json::array();
  std::vector<double> l_medians(n_rungs);
  std::vector<double> m_means(n_rungs);
  for (int r = 0; r < n_rungs; ++r) {
    std::vector<int64_t> ms;
    std::vector<double> ls;
    ms.reserve(cfg.trials);
    ls.reserve(cfg.trials);
    int64_t m_sum = 0;
    for (const auto& t : trials) {
      ms.push_back(t.m_at[r]);
      m_sum += t.m_at[r];
      ls.push_back(t.l_at[r]);
    }
    const double mean_m = static_cast<double>(m_sum) / cfg.trials;
    const double med_m = MedianInts(std::move(ms));
    const double med_l = MedianDoubles(std::move(ls));
    m_means[r] = mean_m;
    l_medians[r] = med_l;
    const double ref_logq_n = std::log(static_cast<double>(cfg.rungs[r])) / ln_q;
    rows.push_back(Json::array(
        {cfg.rungs[r], mean_m, med_m, med_l, ref_logq_n, 1.0 / ln_q}));
  }
  AddTable(&report, "rungs",
           {"N", "mean_m", "median_m", "median_l", "log_q_N", "inv_ln_q"},
           std::move(rows));

  auto& results = report["results"];
  results["terminated_trials"] = terminated;
  results["final_l_median"] = l_medians[n_rungs - 1];

  bool decreasing = true;
  for (int r = 1; r < n_rungs; ++r) {
    if (!(l_medians[r] < l_medians[r - 1])) decreasing = false;
  }
  char buf[200];
  {
    std::string seq;
    for (int r = 0; r < n_rungs; ++r) {
      if (!seq.empty()) seq += ", ";
      seq += FormatDouble(l_medians[r]);
    }
    AddCheck(&report, "l_medians_decreasing", decreasing,
             "medians in rung order: " + seq);
  }
  const double lo_band = 0.8 / ln_q, hi_band = 1.6 / ln_q;
  const double final_l = l_medians[n_rungs - 1];
  std::snprintf(buf, sizeof buf, "final median %.4f, band [%.4f, %.4f]",
                final_l, lo_band, hi_band);
  AddCheck(&report, "l_final_median_band",
           final_l >= lo_band && final_l <= hi_band, buf);
  for (int r = 0; r < n_rungs; ++r) {
    if (cfg.rungs[r] == 1024) {
      const double target = std::log(1024.0) / ln_q;
      std::snprintf(buf, sizeof buf,
                    "mean M at N=1024 is %.3f, band [%.3f, %.3f]", m_means[r],
                    target - 2.0, target + 2.0);
      AddCheck(&report, "m_mean_band",
               std::fabs(m_means[r] - target) <= 2.0, buf);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// digitstats

Json RunDigitStats(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) Fail(ErrorKind::kUsage, "trials must be >= 1");
  if (cfg.digits_per_trial < 1) {
    Fail(ErrorKind::kUsage, "digits_per_trial must be >= 1");
  }
  FieldPtr field = Field::MakeQ(cfg.q);
  const int workers = ResolveWorkers(cfg.workers);

  auto run_trial = [&](int trial) {
    StreamSource src(field, Rng::Stream(cfg.seed, static_cast<uint64_t>(trial)));
    CfStreamOptions opts;
    opts.max_digits = cfg.digits_per_trial;
    std::vector<int64_t> local;
    auto cb = [&](const CfDigitEvent& ev) {
      if (ev.deg_a >= static_cast<int>(local.size())) {
        local.resize(ev.deg_a + 1, 0);
      }
      ++local[ev.deg_a];
      return true;
    };
    CfStreamDigits(&src, opts, cb);
    return local;
  };
  auto trials =
      MapTrials<std::vector<int64_t>>(cfg.trials, workers, run_trial);

  std::vector<int64_t> counts;
  int64_t total = 0;
  for (const auto& t : trials) {
    if (t.size() > counts.size()) counts.resize(t.size(), 0);
    for (size_t k = 0; k < t.size(); ++k) {
      counts[k] += t[k];
      total += t[k];
    }
  }

  Json config = BaseConfig(cfg);
  config["seed"] = cfg.seed;
  config["trials"] = cfg.trials;
  config["digits_per_trial"] = cfg.digits_per_trial;
  config["max_digit_checked"] = cfg.max_digit_checked;
  Json report = MakeReport("digitstats", std::move(config));

  const double qd = static_cast<double>(cfg.q);
  Json rows = Json::array();
  bool all_ok = true;
  double worst_z = 0.0;
  for (size_t k = 1; k < counts.size(); ++k) {
    const double p = (qd - 1.0) * std::pow(qd, -static_cast<double>(k));
    const double freq = static_cast<double>(counts[k]) / total;
    const double se = std::sqrt(p * (1.0 - p) / total);
    const double z = se > 0 ? (freq - p) / se : 0.0;
    const bool checked = static_cast<int>(k) <= cfg.max_digit_checked;
    const bool ok = !checked || std::fabs(freq - p) <= 3.0 * se;
    if (checked) {
      all_ok = all_ok && ok;
      worst_z = std::max(worst_z, std::fabs(z));
    }
    rows.push_back(Json::array({static_cast<int>(k), counts[k], freq, p, se,
                                z, checked, ok}));
  }
  AddTable(&report, "digit_degrees",
           {"k", "count", "freq", "exact_p", "se", "z", "checked",
            "within_3se"},
           std::move(rows));
  report["results"]["total_digits"] = total;
  report["results"]["max_abs_z_checked"] = worst_z;

  char detail[120];
  std::snprintf(detail, sizeof detail,
                "degrees 1..%d within 3 SE of (q-1) q^-k; max |z| = %.3f",
                cfg.max_digit_checked, worst_z);
  AddCheck(&report, "digit_law_3se", all_ok, detail);
  return report;
}

// ---------------------------------------------------------------------------
// counting

Json RunCounting(const ExperimentConfig& cfg) {
  FieldPtr field = Field::MakeQ(cfg.q);
  const Poly q0 = NormalizeModulus(Poly::Parse(field, cfg.q0));
  if (cfg.depth_top < 0 || cfg.group_n_max < 0 || cfg.parabolic_n_max < 0 ||
      cfg.group_n_max % 2 != 0 || cfg.parabolic_n_max % 2 != 0) {
    Fail(ErrorKind::kUsage, "counting ranges must be nonnegative (even n)");
  }

  Json config = BaseConfig(cfg);
  config["q0"] = q0.Format();
  config["depth_top"] = cfg.depth_top;
  config["group_n_max"] = cfg.group_n_max;
  config["parabolic_n_max"] = cfg.parabolic_n_max;
  Json report = MakeReport("counting", std::move(config));

  const double ln_q = std::log(static_cast<double>(cfg.q));
  const int e0 = q0.IsOne() ? 0 : q0.deg();

  // Orbit cardinality per window of width 2 (window n covers depth n/2).
  Json wrows = Json::array();
  double c3 = 0.0;
  bool c3_finite = true;
  for (int n = 0; n <= 2 * cfg.depth_top; n += 2) {
    const BigInt count = OrbitCountWindow(field, q0, n, 2, cfg.budget);
    const double cv = count.convert_to<double>();
    const double qn = std::pow(static_cast<double>(cfg.q), n);
    double ratio = 0.0;
    if (n >= 2) {
      if (count == 0) {
        if (n >= 2 * e0) c3_finite = false;
      } else {
        ratio = std::max(cv / qn, qn / cv);
        c3 = std::max(c3, ratio);
      }
    }
    wrows.push_back(Json::array({n, count.str(), cv / qn}));
  }
  AddTable(&report, "orbit_windows", {"n", "count", "count_over_q_n"},
           std::move(wrows));

  // Group balls: exact matrix counts and the fitted log-slope.
  Json grows = Json::array();
  std::vector<double> gx, gy;
  for (int n = 0; n <= cfg.group_n_max; n += 2) {
    const BigInt count = GroupBallCount(field, n, cfg.budget);
    const double lc = std::log(count.convert_to<double>());
    gx.push_back(n);
    gy.push_back(lc);
    grows.push_back(Json::array({n, count.str(), lc}));
  }
  const double g_slope = FitSlope(gx, gy);
  AddTable(&report, "group_balls", {"n", "count", "ln_count"},
           std::move(grows));

  Json prows = Json::array();
  std::vector<double> px, py;
  for (int n = 0; n <= cfg.parabolic_n_max; n += 2) {
    const BigInt count = ParabolicBallCount(field, n);
    const double lc = std::log(count.convert_to<double>());
    px.push_back(n);
    py.push_back(lc);
    prows.push_back(Json::array({n, count.str(), lc}));
  }
  const double p_slope = FitSlope(px, py);
  AddTable(&report, "parabolic_balls", {"n", "count", "ln_count"},
           std::move(prows));

  auto& results = report["results"];
  results["delta"] = ln_q;
  results["c3_max_ratio"] = c3;
  results["group_log_slope"] = g_slope;
  results["parabolic_log_slope"] = p_slope;

  char buf[160];
  std::snprintf(buf, sizeof buf, "c3 = %.4f over windows n in [2, %d]", c3,
                2 * cfg.depth_top);
  AddCheck(&report, "c3_finite", c3_finite, buf);
  std::snprintf(buf, sizeof buf, "slope %.4f vs delta %.4f (band 0.5)",
                g_slope, ln_q);
  AddCheck(&report, "group_log_slope_band", std::fabs(g_slope - ln_q) <= 0.5,
           buf);
  std::snprintf(buf, sizeof buf, "slope %.4f vs delta/2 %.4f (band 0.2)",
                p_slope, ln_q / 2.0);
  AddCheck(&report, "parabolic_log_slope_band",
           std::fabs(p_slope - ln_q / 2.0) <= 0.2, buf);
  return report;
}

// ---------------------------------------------------------------------------
// shadow

Json RunShadowCheck(const ExperimentConfig& cfg) {
  if (cfg.shadow_deg_max < 0 || cfg.shadow_t_max < 0) {
    Fail(ErrorKind::kUsage, "shadow ranges must be nonnegative");
  }
  FieldPtr field = Field::MakeQ(cfg.q);
  const uint32_t q = cfg.q;

  Json config = BaseConfig(cfg);
  config["shadow_deg_max"] = cfg.shadow_deg_max;
  config["shadow_t_max"] = cfg.shadow_t_max;
  Json report = MakeReport("shadow", std::move(config));

  Json rows = Json::array();
  int64_t pairs_total = 0, balls_total = 0, violations_total = 0;
  for (int dq = 0; dq <= cfg.shadow_deg_max; ++dq) {
    int64_t pairs = 0, balls = 0, violations = 0;
    // All monic denominators of degree dq.
    std::vector<uint32_t> qlow(dq, 0);
    do {
      std::vector<uint32_t> qc(qlow);
      qc.push_back(1);
      const Poly den = Poly::FromCoeffs(field, qc);
      // All numerators with deg P <= deg Q (the whole unit ball of cusps).
      std::vector<uint32_t> pc(dq + 1, 0);
      do {
        const Poly num = Poly::FromCoeffs(field, pc);
        if (PolyGcd(num, den).deg() != 0) continue;
        ++pairs;
        const int depth = CuspDistance(num, den);
        Ball prev = ShadowBall(num, den, 0);
        for (int t = 0; t <= cfg.shadow_t_max; ++t) {
          const Ball ball = ShadowBall(num, den, t);
          ++balls;
          bool ok = ball.radius() == depth + t &&
                    ball.Measure() == QExact::PowQ(q, -(depth + t));
          if (t > 0 &&
              Relate(prev, ball) != BallRelation::kSecondInsideFirst &&
              Relate(prev, ball) != BallRelation::kEqual) {
            ok = false;
          }
          if (dq <= 2) {
            BallSet set(field);
            set.Insert(ball);
            if (set.Measure() != ball.Measure() || set.BallCount() != 1) {
              ok = false;
            }
          }
          if (!ok) ++violations;
          prev = ball;
        }
      } while (NextVec(&pc, q));
    } while (NextVec(&qlow, q));
    pairs_total += pairs;
    balls_total += balls;
    violations_total += violations;
    rows.push_back(Json::array({dq, pairs, balls, violations}));
  }
  AddTable(&report, "shadow_degrees",
           {"deg_q", "pairs", "balls", "violations"}, std::move(rows));

  auto& results = report["results"];
  results["pairs_checked"] = pairs_total;
  results["balls_checked"] = balls_total;
  results["violations"] = violations_total;

  char buf[120];
  std::snprintf(buf, sizeof buf,
                "%lld balls over %lld cusps, %lld violations",
                static_cast<long long>(balls_total),
                static_cast<long long>(pairs_total),
                static_cast<long long>(violations_total));
  AddCheck(&report, "shadow_measure_exact", violations_total == 0, buf);
  return report;
}

// ---------------------------------------------------------------------------
// quasi-independence

Json RunQuasiIndependence(const ExperimentConfig& cfg) {
  if (cfg.window_lo < 0 || cfg.window_hi < cfg.window_lo) {
    Fail(ErrorKind::kUsage, "window range must satisfy 0 <= lo <= hi");
  }
  FieldPtr field = Field::MakeQ(cfg.q);
  const Poly q0 = NormalizeModulus(Poly::Parse(field, cfg.q0));
  const TestFunction phi = ParsePhiSpec(cfg.phi, cfg.q);
  const int lo = cfg.window_lo, hi = cfg.window_hi;

  Json config = BaseConfig(cfg);
  config["q0"] = q0.Format();
  config["phi"] = phi.Describe();
  config["window_lo"] = lo;
  config["window_hi"] = hi;
  Json report = MakeReport("quasi", std::move(config));

  std::vector<BallSet> sets;
  std::vector<QExact> mus;
  std::vector<bool> empty;
  sets.reserve(hi - lo + 1);
  Json wrows = Json::array();
  Json empties = Json::array();
  for (int n = lo; n <= hi; ++n) {
    sets.push_back(BuildApproxWindow(field, phi, q0, n, 2, cfg.budget));
    mus.push_back(sets.back().Measure());
    const bool is_empty = mus.back().num() == 0;
    empty.push_back(is_empty);
    if (is_empty) empties.push_back(n);
    wrows.push_back(Json::array({n, phi.ThresholdRadius(n),
                                 sets.back().BallCount(), mus.back().Render(),
                                 mus.back().ToDouble()}));
  }
  AddTable(&report, "windows",
           {"n", "radius", "ball_count", "measure_exact", "measure"},
           std::move(wrows));

  Json prows = Json::array();
  double max_ratio = -1.0;
  std::string max_ratio_exact = "0";
  int arg_n = -1, arg_m = -1;
  for (int n = lo; n <= hi; ++n) {
    for (int m = n + 1; m <= hi; ++m) {
      if (empty[n - lo] || empty[m - lo]) continue;
      BallSet meet = sets[n - lo];
      meet.IntersectWith(sets[m - lo]);
      const QExact inter = meet.Measure();
      const QExact& mn = mus[n - lo];
      const QExact& mm = mus[m - lo];
      // ratio = mu(An ∩ Am) / (mu(An) mu(Am)) as an exact fraction.
      BigInt rnum = inter.num() * BigPow(cfg.q, mn.kexp() + mm.kexp());
      BigInt rden = mn.num() * mm.num() * BigPow(cfg.q, inter.kexp());
      const BigInt g = boost::multiprecision::gcd(rnum, rden);
      if (g != 0) {
        rnum /= g;
        rden /= g;
      }
      const double ratio =
          rnum.convert_to<double>() / rden.convert_to<double>();
      std::string exact = rnum.str() + (rden == 1 ? "" : "/" + rden.str());
      if (ratio > max_ratio) {
        max_ratio = ratio;
        max_ratio_exact = exact;
        arg_n = n;
        arg_m = m;
      }
      prows.push_back(
          Json::array({n, m, inter.Render(), exact, ratio}));
    }
  }
  AddTable(&report, "pairs",
           {"n", "m", "intersection_exact", "ratio_exact", "ratio"},
           std::move(prows));

  // Sum of window measures from the bottom vs the integral of psi^delta over
  // the matching time range.
  QExact sum_mu = QExact::Zero(cfg.q);
  for (int n = 0; n <= hi; ++n) {
    if (n >= lo) {
      sum_mu = sum_mu + mus[n - lo];
    } else {
      sum_mu = sum_mu + ApproxWindowMeasure(field, phi, q0, n, 2, cfg.budget);
    }
  }
  const double integral = IntegratePsiDelta(phi, 1.0, 2.0 * hi + 2.0);
  const double sum_ratio = sum_mu.ToDouble() / integral;

  auto& results = report["results"];
  results["empty_windows"] = std::move(empties);
  results["max_ratio"] = max_ratio;
  results["max_ratio_exact"] = max_ratio_exact;
  results["max_ratio_pair"] = Json::array({arg_n, arg_m});
  results["sum_measure_exact"] = sum_mu.Render();
  results["sum_measure"] = sum_mu.ToDouble();
  results["integral_psi_delta"] = integral;
  results["sum_over_integral"] = sum_ratio;
  results["classification"] = IntegralClassName(phi.Classify());

  char buf[160];
  std::snprintf(buf, sizeof buf, "max ratio %.4f (= %s) at (%d, %d)",
                max_ratio, max_ratio_exact.c_str(), arg_n, arg_m);
  AddCheck(&report, "pair_ratio_bound", max_ratio >= 0.0 && max_ratio < 10.0,
           buf);
  std::snprintf(buf, sizeof buf,
                "sum %.6f over integral %.6f = %.4f, band [0.2, 5]",
                sum_mu.ToDouble(), integral, sum_ratio);
  AddCheck(&report, "sum_integral_band",
           sum_ratio >= 0.2 && sum_ratio <= 5.0, buf);
  return report;
}

}  // namespace ffdioph
