#include "clusterdenom/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

BigInt det(const DMatrix& d) { return det(d.d); }
RationalMatrix inverse(const DMatrix& d) { return inverse(d.d); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

SharedColumns align_by_ids(const std::vector<VariableId>& cs, const std::vector<VariableId>& ct) {
  const int n = static_cast<int>(cs.size());
  SharedColumns out;
  std::vector<bool> used_s(static_cast<std::size_t>(n), false), used_t(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (cs[i] == ct[j]) {
        out.perm_s.push_back(i);
        out.perm_t.push_back(j);
        used_s[i] = used_t[j] = true;
      }
    }
  }
  out.r = static_cast<int>(out.perm_t.size());
  for (int i = 0; i < n; ++i) {
    if (!used_s[i]) out.perm_s.push_back(i);
    if (!used_t[i]) out.perm_t.push_back(i);
  }
  return out;
}

// s * adj(Ds) * Dt with s = sign(det Ds): same sign pattern as Ds^-1 Dt times |det|.
IntMatrix scaled_product(const IntMatrix& adj, int det_sign, const IntMatrix& dt) {
  const int n = adj.size();
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<__int128>(adj(i, k)) * dt(k, j);
      acc *= det_sign;
      if (acc > INT64_MAX || acc < -INT64_MAX) throw std::overflow_error("Case-2 matrix entry overflow");
      out(i, j) = static_cast<IntMatrix::Entry>(acc);
    }
  }
  return out;
}

FeasibleFinding make_finding(std::size_t class_index, std::size_t s, std::size_t t, int l, int r,
                             const IntMatrix& scaled, const BigInt& abs_det, const std::vector<Rational>& x) {
  const int n = scaled.size();
  std::vector<Rational> joint(x);
  for (int i = 0; i < n; ++i) {
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(scaled(i, j)) * x[j];
    joint.push_back(acc / Rational(abs_det));
  }
  auto ints = scale_to_integers(joint);
  FeasibleFinding f{class_index, s, t, l, r, {}, {}};
  f.m.assign(ints.begin(), ints.begin() + n);
  f.n.assign(ints.begin() + n, ints.end());
  return f;
}

}  // namespace

SharedColumns shared_columns(const DMatrix& ds, const DMatrix& dt, const ClusterPattern& pattern) {
  return align_by_ids(pattern.seeds.at(ds.cluster_id).cluster, pattern.seeds.at(dt.cluster_id).cluster);
}

FeasibilitySystem make_system(const DMatrix& ds, const DMatrix& dt, const SharedColumns& shared, int l) {
  const RationalMatrix product = inverse(ds.d) * RationalMatrix(dt.d);
  // (Ds Ps)^-1 (Dt Pt) = Ps^T Ds^-1 Dt Pt
  return {product.permuted(shared.perm_s, shared.perm_t), l, shared.r};
}

std::size_t check_pairs(const ClusterPattern& pattern, const std::vector<DMatrix>& ds, std::size_t class_index,
                        unsigned jobs, std::vector<FeasibleFinding>& findings, const std::function<void()>& poll) {
  const std::size_t count = ds.size();
  std::vector<Adjugate> adj;
  adj.reserve(count);
  for (const auto& d : ds) adj.push_back(adjugate(d.d));

  jobs = std::max(1U, jobs);
  std::atomic<std::size_t> systems{0};
  std::atomic<bool> stop{false};
  std::mutex merge;
  std::exception_ptr failure;
  std::vector<FeasibleFinding> found;

  auto worker = [&](unsigned w) {
    try {
      std::vector<FeasibleFinding> local;
      std::size_t local_systems = 0;
      for (std::size_t s = w; s < count && !stop; s += jobs) {
        if (poll && w == 0) poll();
        const int det_sign = adj[s].det > 0 ? 1 : -1;
        const BigInt abs_det = adj[s].det * det_sign;
        const auto& cs = pattern.seeds[ds[s].cluster_id].cluster;
        for (std::size_t t = 0; t < count; ++t) {
          if (t == s) continue;
          const auto& ct = pattern.seeds[ds[t].cluster_id].cluster;
          const SharedColumns shared = align_by_ids(cs, ct);
          if (shared.r == static_cast<int>(cs.size())) continue;
          const IntMatrix scaled = scaled_product(adj[s].adj, det_sign, ds[t].d);
          for (std::size_t pos = static_cast<std::size_t>(shared.r); pos < shared.perm_t.size(); ++pos) {
            const int l = shared.perm_t[pos];
            ++local_systems;
            auto res = solve_cone(scaled, l);
            if (res.feasible) {
              local.push_back(make_finding(class_index, s, t, l, shared.r, scaled, abs_det, res.witness));
            }
          }
        }
      }
      std::lock_guard lock(merge);
      systems += local_systems;
      found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(found.begin(), found.end(), [](const FeasibleFinding& a, const FeasibleFinding& b) {
    return std::tie(a.s, a.t, a.l) < std::tie(b.s, b.t, b.l);
  });
  findings.insert(findings.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  return systems;
}

namespace {

void validate_recurrence_engine() {
  static std::once_flag once;
  std::call_once(once, [] {
    for (const char* type : {"A3", "D4", "F4"}) cross_validate_recurrence(standard_matrix(type));
  });
}

}  // namespace

Report verify(const ExchangeMatrix& b, const VerifyOptions& opts) {
  Report rep{b};
  rep.engine = opts.engine;
  const auto started = std::chrono::steady_clock::now();
  auto last_checkpoint = started;
  std::size_t class_index = 0;
  const auto poll = [&] {
    const auto now = std::chrono::steady_clock::now();
    if (opts.time_limit && now - started > *opts.time_limit) throw BudgetExhausted("time limit reached");
    if (opts.on_checkpoint && !rep.classes.empty() && now - last_checkpoint > opts.checkpoint_interval) {
      last_checkpoint = now;
      opts.on_checkpoint(rep, {class_index, rep.class_count, rep.classes.back().clusters, rep.systems_checked,
                               rep.singular.size() + rep.feasible.size()});
    }
  };
  bool have_det = false;
  try {
    if (opts.engine == Engine::Recurrence) validate_recurrence_engine();
    const MatrixClassSet classes = mutation_classes(b, {opts.class_budget});
    rep.class_count = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      class_index = i;
      poll();
      const ExchangeMatrix& bi = classes.representatives[i];
      const ClusterPattern pattern = explore(bi, {opts.engine, opts.node_budget});
      const std::vector<DMatrix> ds = dmatrices(pattern);
      ClassSummary summary{bi, pattern.cluster_count(), pattern.variable_count()};
      bool first = true;
      for (const auto& d : ds) {
        BigInt v = det(d);
        if (v < 0) v = -v;
        if (v == 0) rep.singular.push_back({i, d.cluster_id});
        if (first || v < summary.min_abs_det) summary.min_abs_det = v;
        first = false;
      }
      if (!have_det || summary.min_abs_det < rep.min_abs_det) rep.min_abs_det = summary.min_abs_det;
      have_det = true;
      rep.classes.push_back(summary);
      if (rep.singular.empty()) {
        rep.classes.back().systems_checked = check_pairs(pattern, ds, i, opts.jobs, rep.feasible, poll);
        rep.systems_checked += rep.classes.back().systems_checked;
      }
      rep.classes.back().completed = true;
      if (opts.on_checkpoint) {
        last_checkpoint = std::chrono::steady_clock::now();
        opts.on_checkpoint(rep, {i, classes.size(), summary.clusters, rep.systems_checked,
                                 rep.singular.size() + rep.feasible.size()});
      }
    }
    rep.verdict = (rep.min_abs_det > 0 && rep.feasible.empty()) ? Verdict::Verified : Verdict::Counterexample;
  } catch (const BudgetExhausted& e) {
    rep.verdict = Verdict::BudgetExceeded;
    rep.budget_message = e.what();
  }
  return rep;
}

}  // namespace clusterdenom
