#include "sfa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace sfa {
namespace {

struct ClassifyCounts {
  std::uint64_t total = 0;
  std::uint64_t squares = 0;
  std::uint64_t even_order = 0;
  std::uint64_t standard_success = 0;
  std::uint64_t recovery_success = 0;
  std::uint64_t nonsquare_success = 0;

  ClassifyCounts& operator+=(const ClassifyCounts& o) {
    total += o.total;
    squares += o.squares;
    even_order += o.even_order;
    standard_success += o.standard_success;
    recovery_success += o.recovery_success;
    nonsquare_success += o.nonsquare_success;
    return *this;
  }
};

struct Classification {
  bool square = false;
  bool even_order = false;
  bool standard_success = false;
  bool recovery_success = false;
  std::optional<Natural> witness;  // from whichever outcome produced one
};

Classification classify_coprime(const Natural& c, const Semiprime& sp,
                                const Factorization& f1, const Factorization& f2) {
  Classification out;
  out.square = is_perfect_square(c);
  const OrderRecord rec = order_with_factors(c, sp, f1, f2);
  out.even_order = is_even(rec.order);

  // Even orders: one outcome serves both the standard and recovery views.
  // Odd orders: standard processing fails outright, recovery may not.
  const FactorOutcome outcome = factor_with_recovery(rec);
  const bool found = std::holds_alternative<Factors>(outcome);
  out.recovery_success = found;
  out.standard_success = out.even_order && found;
  if (const auto* f = std::get_if<Factors>(&outcome))
    out.witness = f->witness;
  else if (const auto* t = std::get_if<TrivialFailure>(&outcome))
    out.witness = t->witness;
  return out;
}

// Standard-processing view of one value (used for roots of square coprimes).
Classification classify_standard_only(const Natural& c, const Semiprime& sp,
                                      const Factorization& f1,
                                      const Factorization& f2) {
  Classification out;
  out.square = is_perfect_square(c);
  const OrderRecord rec = order_with_factors(c, sp, f1, f2);
  out.even_order = is_even(rec.order);
  if (!out.even_order) return out;
  const FactorOutcome outcome = classical_postprocess(rec);
  out.standard_success = std::holds_alternative<Factors>(outcome);
  if (const auto* f = std::get_if<Factors>(&outcome))
    out.witness = f->witness;
  else if (const auto* t = std::get_if<TrivialFailure>(&outcome))
    out.witness = t->witness;
  return out;
}

void check_root_equivalence(const Natural& b, const Classification& of_b,
                            const Semiprime& sp, const Factorization& f1,
                            const Factorization& f2) {
  const SquareDecomposition dec = decompose_square(b);
  const Classification of_root = classify_standard_only(dec.root, sp, f1, f2);
  if (of_b.recovery_success != of_root.standard_success)
    throw invariant_error("enumerate_report: recovery on " + b.get_str() +
                          " disagrees with standard processing of its root " +
                          dec.root.get_str() + " mod " + sp.n.get_str());
  if (of_b.witness.has_value() != of_root.witness.has_value() ||
      (of_b.witness && *of_b.witness != *of_root.witness))
    throw invariant_error("enumerate_report: witness mismatch between " +
                          b.get_str() + " and its root mod " + sp.n.get_str());
}

// Runs fn(lo, hi) on `workers` contiguous chunks of [2, n). Exceptions are
// rethrown in chunk order so failures are deterministic too.
void parallel_ranges(const Natural& n, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              unsigned)>& fn) {
  const std::uint64_t begin = 2;
  const std::uint64_t end = to_u64(n);
  if (workers < 1) workers = 1;
  const std::uint64_t span = end > begin ? end - begin : 0;
  if (workers == 1 || span < 2 * workers) {
    fn(begin, end, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = span / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = w + 1 == workers ? end : lo + chunk;
    pool.emplace_back([&, lo, hi, w] {
      try {
        fn(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

mpq_class make_ratio(const Natural& num, const Natural& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

EnumerationReport enumerate_report(const Semiprime& sp, unsigned workers) {
  if (sp.n > kEnumerationBudget)
    throw resource_error("enumerate_report: semiprime above the enumeration budget");
  const Factorization f1 = factorize_small(sp.p1 - 1);
  const Factorization f2 = factorize_small(sp.p2 - 1);

  std::vector<ClassifyCounts> partial(std::max(1u, workers));
  parallel_ranges(sp.n, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    ClassifyCounts& counts = partial[w];
    for (std::uint64_t value = lo; value < hi; ++value) {
      const Natural c(static_cast<unsigned long>(value));
      if (gcd(c, sp.n) != 1) continue;
      const Classification cls = classify_coprime(c, sp, f1, f2);
      ++counts.total;
      counts.squares += cls.square;
      counts.even_order += cls.even_order;
      counts.standard_success += cls.standard_success;
      counts.recovery_success += cls.recovery_success;
      counts.nonsquare_success += !cls.square && cls.standard_success;
      if (cls.square) check_root_equivalence(c, cls, sp, f1, f2);
    }
  });
  ClassifyCounts counts;
  for (const auto& p : partial) counts += p;

  const Natural phi = (sp.p1 - 1) * (sp.p2 - 1);
  if (counts.total + 1 != phi)
    throw invariant_error("enumerate_report: coprime count disagrees with phi(N)");

  EnumerationReport rep;
  rep.sp = sp;
  rep.total_coprimes = counts.total;
  rep.square_coprimes = counts.squares;
  rep.nonsquare_coprimes = counts.total - counts.squares;
  rep.even_order_count = counts.even_order;
  rep.odd_order_count = counts.total - counts.even_order;
  rep.standard_success = counts.standard_success;
  rep.recovery_success = counts.recovery_success;
  rep.nonsquare_success = counts.nonsquare_success;
  rep.group_size = phi;
  rep.group_even_order_count = counts.even_order;  // c = 1 has odd order 1

  rep.p_even_order = make_ratio(rep.group_even_order_count, rep.group_size);
  rep.p_standard = make_ratio(rep.standard_success, rep.total_coprimes);
  rep.p_recovery = make_ratio(rep.recovery_success, rep.total_coprimes);
  rep.p_nonsquare = rep.nonsquare_coprimes == 0
                        ? mpq_class(0)
                        : make_ratio(rep.nonsquare_success, rep.nonsquare_coprimes);
  rep.ratio_standard_to_nonsquare =
      rep.p_nonsquare == 0 ? mpq_class(0) : rep.p_standard / rep.p_nonsquare;
  const Natural root4 = 4 * integer_sqrt(sp.n);
  rep.ratio_bound = make_ratio(root4 - 1, root4);
  return rep;
}

mpq_class even_order_probability(const Semiprime& sp, unsigned workers) {
  if (sp.n > kEnumerationBudget)
    throw resource_error("even_order_probability: semiprime above the enumeration budget");
  const Factorization f1 = factorize_small(sp.p1 - 1);
  const Factorization f2 = factorize_small(sp.p2 - 1);

  std::vector<std::uint64_t> partial(std::max(1u, workers), 0);
  parallel_ranges(sp.n, workers, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    std::uint64_t even = 0;
    for (std::uint64_t value = lo; value < hi; ++value) {
      const Natural c(static_cast<unsigned long>(value));
      if (gcd(c, sp.n) != 1) continue;
      even += is_even(order_with_factors(c, sp, f1, f2).order);
    }
    partial[w] = even;
  });
  std::uint64_t even = 0;
  for (auto p : partial) even += p;

  const Natural phi = (sp.p1 - 1) * (sp.p2 - 1);
  return make_ratio(Natural(static_cast<unsigned long>(even)), phi);
}

BoundCheck ratio_bound_check(const EnumerationReport& report) {
  if (report.p_nonsquare == 0)
    throw domain_error("ratio_bound_check: no non-square successes; ratio degenerate");
  BoundCheck out;
  out.lhs = report.ratio_standard_to_nonsquare;
  out.rhs = report.ratio_bound;
  out.holds = out.lhs <= out.rhs;
  return out;
}

BoundCheck ratio_bound_check(const Semiprime& sp, unsigned workers) {
  return ratio_bound_check(enumerate_report(sp, workers));
}

MonteCarloReport monte_carlo_report(const Semiprime& sp, std::uint64_t samples,
                                    std::uint64_t seed, unsigned workers) {
  if (samples < 100)
    throw domain_error("monte_carlo_report: need at least 100 samples");
  const Factorization f1 = factorize_small(sp.p1 - 1);
  const Factorization f2 = factorize_small(sp.p2 - 1);

  if (workers < 1) workers = 1;
  struct McCounts {
    ClassifyCounts base;
    std::uint64_t early = 0;
  };
  std::vector<McCounts> partial(workers);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
    try {
      McCounts& mc = partial[w];
      for (std::uint64_t i = lo; i < hi; ++i) {
        Rng rng = Rng::stream(seed, i);
        Natural c;
        for (;;) {
          c = 2 + rng.below(sp.n - 2);
          if (gcd(c, sp.n) == 1) break;
          ++mc.early;
        }
        const Classification cls = classify_coprime(c, sp, f1, f2);
        ++mc.base.total;
        mc.base.squares += cls.square;
        mc.base.even_order += cls.even_order;
        mc.base.standard_success += cls.standard_success;
        mc.base.recovery_success += cls.recovery_success;
        mc.base.nonsquare_success += !cls.square && cls.standard_success;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_range(0, samples, 0);
  } else {
    const std::uint64_t chunk = samples / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = w + 1 == workers ? samples : lo + chunk;
      pool.emplace_back(run_range, lo, hi, w);
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  McCounts sum;
  for (const auto& p : partial) {
    sum.base += p.base;
    sum.early += p.early;
  }

  auto estimate = [](std::uint64_t hits, std::uint64_t trials, double& p, double& se) {
    p = trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
    se = trials == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  };

  MonteCarloReport rep;
  rep.sp = sp;
  rep.samples = samples;
  rep.early_factor_draws = sum.early;
  rep.square_count = sum.base.squares;
  rep.nonsquare_count = samples - sum.base.squares;
  rep.even_order_count = sum.base.even_order;
  rep.standard_success = sum.base.standard_success;
  rep.recovery_success = sum.base.recovery_success;
  rep.nonsquare_success = sum.base.nonsquare_success;
  estimate(rep.even_order_count, samples, rep.p_even_order, rep.se_even_order);
  estimate(rep.standard_success, samples, rep.p_standard, rep.se_standard);
  estimate(rep.recovery_success, samples, rep.p_recovery, rep.se_recovery);
  estimate(rep.nonsquare_success, rep.nonsquare_count, rep.p_nonsquare,
           rep.se_nonsquare);
  return rep;
}

}  // namespace sfa
