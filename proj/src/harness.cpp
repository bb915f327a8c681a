#include "coprime/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "coprime/errors.hpp"
#include "coprime/prism_pattern.hpp"

namespace coprime {

std::optional<ScanFamily> parse_scan_family(std::string_view s) {
  if (s == "prism") return ScanFamily::Prism;
  if (s == "gp2") return ScanFamily::GP2;
  if (s == "y3") return ScanFamily::Y3;
  if (s == "y5") return ScanFamily::Y5;
  if (s == "gpstar") return ScanFamily::GPStar;
  return std::nullopt;
}

Family family_of(ScanFamily f, int param) {
  switch (f) {
    case ScanFamily::Prism: return Prism{param};
    case ScanFamily::GP2: return GP2{param};
    case ScanFamily::Y3: return StackedPrism{3, param};
    case ScanFamily::Y5: return StackedPrism{5, param};
    case ScanFamily::GPStar: return GPStar{param};
  }
  return Prism{param};
}

int worker_count() {
  if (const char* env = std::getenv("COPRIME_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void maybe_confirm(ScanResult& r, const Graph& g, const Labeling& l, const ScanOptions& opts) {
  if (!opts.solver_confirm || g.order() > opts.solver_vertex_cap) return;
  try {
    auto rep = solve(g, opts.solver);
    r.solver_confirmed = rep.proven_optimal && rep.pr_value == l.max_label();
  } catch (const Error& e) {
    r.solver_confirmed = false;
    r.error = e.what();
  }
}

}  // namespace

ScanResult scan_one(ScanFamily fam, int param, const ScanOptions& opts) {
  ScanResult r{family_of(fam, param), std::nullopt, 0, 0, false, std::nullopt, {}};
  try {
    r.formula_value = expected_max_label(r.family);
    if (fam == ScanFamily::Prism) {
      auto p = prism_pattern(param, opts.allow_fallback);
      r.certificate = p.cert;
      auto chk = check_pattern(p);
      r.verified = chk.ok;
      if (!chk.ok) r.error = chk.reason;
      Label mx = 0;
      for (auto* rs : {&p.outer, &p.inner})
        for (auto& run : *rs) mx = std::max<Label>(mx, std::max(run.at(run.first), run.at(run.last)));
      r.max_label = mx;
      bool small = param <= opts.explicit_verify_limit ||
                   (opts.solver_confirm && 2 * param <= opts.solver_vertex_cap);
      if (small) {
        Graph g = build(Prism{param});
        Labeling l = materialize(p);
        auto rep = verify(g, l);
        if (!rep.ok()) {
          r.verified = false;
          r.error = rep.describe(g);
        }
        if (r.verified) maybe_confirm(r, g, l, opts);
      }
      return r;
    }
    auto c = construct(r.family);
    r.certificate = c.certificate;
    r.max_label = c.labeling.max_label();
    auto rep = verify(c.graph, c.labeling);
    r.verified = rep.ok();
    if (!rep.ok()) r.error = rep.describe(c.graph);
    if (r.verified) maybe_confirm(r, c.graph, c.labeling, opts);
  } catch (const Error& e) {
    r.verified = false;
    r.error = e.what();
  }
  return r;
}

ScanSummary scan(ScanFamily fam, int lo, int hi, const ScanOptions& opts, const ScanSink& sink) {
  std::vector<int> params;
  ScanSummary sum;
  const int step = fam == ScanFamily::Prism ? 2 : 1;
  if (fam == ScanFamily::Prism && lo % 2 == 0) ++lo;
  const int workers = opts.workers > 0 ? opts.workers : worker_count();
  const int chunk = std::max(1, opts.chunk);

  for (long long start = lo; start <= hi;) {
    params.clear();
    for (long long p = start; p <= hi && static_cast<int>(params.size()) < chunk; p += step)
      params.push_back(static_cast<int>(p));
    start = static_cast<long long>(params.back()) + step;

    std::vector<std::optional<ScanResult>> out(params.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < params.size();)
        out[i] = scan_one(fam, params[i], opts);
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (auto& r : out) {
      ++sum.instances;
      if (!r->ok()) ++sum.failures;
      sum.by_rule[r->certificate ? std::string(rule_id(r->certificate->rule)) : "none"]++;
      if (sink) sink(*r);
    }
  }
  return sum;
}

ScanSummary scan_prisms(int n_lo, int n_hi, const ScanOptions& opts, const ScanSink& sink) {
  if (n_lo < 3) throw ParameterOutOfRange("prism scan needs n_lo >= 3");
  return scan(ScanFamily::Prism, n_lo, n_hi, opts, sink);
}

std::string_view conjecture_id(Conjecture c) {
  switch (c) {
    case Conjecture::OddPrism: return "odd-prism";
    case Conjecture::GpN3: return "gp-n3";
    case Conjecture::Gp3kk: return "gp-3kk";
    case Conjecture::OddStack: return "odd-stack";
  }
  return "?";
}

std::optional<Conjecture> parse_conjecture(std::string_view s) {
  for (auto c : {Conjecture::OddPrism, Conjecture::GpN3, Conjecture::Gp3kk, Conjecture::OddStack})
    if (conjecture_id(c) == s) return c;
  return std::nullopt;
}

ConjectureCase check_instance(Conjecture c, const Graph& g, Label conjectured, const SolverConfig& cfg,
                              const Labeling* known) {
  ConjectureCase out{c, g.name(), g.order(), conjectured, std::nullopt, false, 0, {}};
  try {
    auto rep = solve(g, cfg);
    out.best_known = rep.pr_value;
    out.proven_optimal = rep.proven_optimal;
    out.nodes = rep.nodes_explored;
    out.status = rep.pr_value == conjectured ? "match" : "mismatch";
  } catch (const BudgetExceeded&) {
    if (known && verify(g, *known).ok()) {
      out.best_known = known->max_label();
      out.status = *out.best_known <= conjectured ? "upper-bound-only" : "mismatch";
    } else {
      out.status = "budget-exceeded";
    }
  } catch (const InfeasibleAtCap&) {
    out.status = "mismatch";
  }
  return out;
}

std::vector<ConjectureCase> check_conjectures(const std::vector<Conjecture>& which, int size_cap,
                                              const SolverConfig& cfg,
                                              const std::function<void(const ConjectureCase&)>& sink) {
  std::vector<ConjectureCase> out;
  auto emit = [&](ConjectureCase c) {
    if (sink) sink(c);
    out.push_back(std::move(c));
  };
  for (auto c : which) {
    switch (c) {
      case Conjecture::OddPrism:
        for (int n = 3; 2 * n <= size_cap; n += 2) {
          auto con = label_prism(n);
          emit(check_instance(c, con.graph, 2ULL * n + 1, cfg, &con.labeling));
        }
        break;
      case Conjecture::GpN3:
        for (int n = 7; 2 * n <= size_cap; n += 2) emit(check_instance(c, build_gp(n, 3), 2ULL * n + 3, cfg));
        break;
      case Conjecture::Gp3kk:
        for (int k = 2; 6 * k <= size_cap; ++k)
          emit(check_instance(c, build_gp(3 * k, k), 7ULL * k + (k % 2 == 0), cfg));
        break;
      case Conjecture::OddStack:
        for (int k = 1; 2 * k + 1 <= size_cap; ++k)
          for (int n = 1; (2 * k + 1) * n <= size_cap; ++n) {
            Graph g = build(StackedPrism{2 * k + 1, n});
            std::optional<Construction> con;
            if (k <= 2) con = construct(StackedPrism{2 * k + 1, n});
            emit(check_instance(c, g, 2ULL * (k + 1) * n - 1, cfg, con ? &con->labeling : nullptr));
          }
        break;
    }
  }
  return out;
}

}  // namespace coprime
