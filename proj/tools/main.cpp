// sfa: command-line front end for the classical side of Shor's factoring
// algorithm. Every command is reproducible: fixed seed and flags give
// byte-identical output, and --workers never changes the bytes.

#include <charconv>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfa/pipeline.hpp"
#include "sfa/stats.hpp"
#include "sfa/version.hpp"

using ojson = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::string strategy = "uniform";
  std::string oracle = "bruteforce";
  std::string format = "text";
  std::uint64_t samples = 0;
  unsigned max_attempts = sfa::kDefaultMaxAttempts;
  std::uint64_t sweep = 0;
  bool hard_only = false;
  unsigned workers = 1;
  unsigned bits = 0;
  std::string arg_n;  // positional operands, parsed as exact decimals
  std::string arg_c;
};

sfa::CoprimeStrategy strategy_from_name(const std::string& name) {
  if (name == "uniform") return sfa::CoprimeStrategy::uniform;
  if (name == "avoid-squares") return sfa::CoprimeStrategy::avoid_squares;
  if (name == "jacobi") return sfa::CoprimeStrategy::jacobi_screen;
  throw sfa::domain_error("unknown strategy: " + name);
}

sfa::OrderOracle oracle_from_name(const std::string& name) {
  if (name == "bruteforce") return sfa::OrderOracle::bruteforce;
  if (name == "factored") return sfa::OrderOracle::factored;
  throw sfa::domain_error("unknown oracle: " + name);
}

const char* method_name(sfa::FactorMethod m) {
  switch (m) {
    case sfa::FactorMethod::standard: return "standard";
    case sfa::FactorMethod::odd_order_square: return "odd-order-square";
    case sfa::FactorMethod::root_collapse: return "root-collapse";
  }
  return "?";
}

const char* via_name(sfa::FactorVia v) {
  switch (v) {
    case sfa::FactorVia::none: return "none";
    case sfa::FactorVia::standard: return "standard";
    case sfa::FactorVia::odd_order_square: return "odd-order-square";
    case sfa::FactorVia::root_collapse: return "root-collapse";
    case sfa::FactorVia::early_gcd: return "early-gcd";
  }
  return "?";
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string double_str(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string header_line(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# sfa " << sfa::kVersion << " " << cfg.command << " seed=" << cfg.seed
     << " oracle=" << cfg.oracle << " strategy=" << cfg.strategy << "\n";
  return os.str();
}

ojson meta_json(const RunConfig& cfg) {
  ojson meta;
  meta["tool"] = "sfa";
  meta["version"] = sfa::kVersion;
  meta["command"] = cfg.command;
  meta["seed"] = std::to_string(cfg.seed);
  meta["oracle"] = cfg.oracle;
  meta["strategy"] = cfg.strategy;
  return meta;
}

void emit_json(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- semiprime lookup for commands that take a raw N ----

sfa::Semiprime semiprime_from_n(const sfa::Natural& n) {
  const sfa::Factorization fac = sfa::factorize_small(n);
  if (fac.size() != 2 || fac[0].multiplicity != 1 || fac[1].multiplicity != 1 ||
      fac[0].prime == 2)
    throw sfa::domain_error("N = " + n.get_str() +
                            " is not a product of two distinct odd primes");
  return sfa::make_semiprime(fac[0].prime, fac[1].prime);
}

// ---- order ----

int cmd_order(const RunConfig& cfg) {
  const sfa::Natural n = sfa::natural_from_string(cfg.arg_n);
  const sfa::Natural c = sfa::natural_from_string(cfg.arg_c);
  sfa::OrderRecord rec =
      oracle_from_name(cfg.oracle) == sfa::OrderOracle::factored
          ? sfa::order_with_factors(c, semiprime_from_n(n))
          : sfa::order_bruteforce(c, n);

  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    ojson r;
    r["modulus"] = rec.modulus.get_str();
    r["coprime"] = rec.coprime.get_str();
    r["order"] = rec.order.get_str();
    r["two_adic_exponent"] = rec.split.exponent;
    r["odd_part"] = rec.split.odd_part.get_str();
    doc["record"] = r;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg)
              << "modulus,coprime,order,two_adic_exponent,odd_part\n"
              << rec.modulus << "," << rec.coprime << "," << rec.order << ","
              << rec.split.exponent << "," << rec.split.odd_part << "\n";
  } else {
    std::cout << header_line(cfg) << "modulus: " << rec.modulus
              << "\ncoprime: " << rec.coprime << "\norder: " << rec.order
              << "\ntwo_adic_exponent: " << rec.split.exponent
              << "\nodd_part: " << rec.split.odd_part << "\n";
  }
  return 0;
}

// ---- factor ----

void attempt_json(const sfa::FactorAttempt& at, ojson& row) {
  row["coprime"] = at.coprime.get_str();
  row["early_factor"] = at.early_factor ? ojson(at.early_factor->get_str()) : ojson(nullptr);
  if (at.record) {
    row["order"] = at.record->order.get_str();
    row["two_adic_exponent"] = at.record->split.exponent;
    row["odd_part"] = at.record->split.odd_part.get_str();
  } else {
    row["order"] = nullptr;
    row["two_adic_exponent"] = nullptr;
    row["odd_part"] = nullptr;
  }
  row["outcome"] = nullptr;
  row["method"] = nullptr;
  row["collapse_steps"] = nullptr;
  row["witness"] = nullptr;
  row["p"] = nullptr;
  row["q"] = nullptr;
  if (!at.outcome) return;
  if (const auto* f = std::get_if<sfa::Factors>(&*at.outcome)) {
    row["outcome"] = "factors";
    row["method"] = method_name(f->method);
    row["collapse_steps"] = f->collapse_steps;
    row["witness"] = f->witness.get_str();
    row["p"] = f->p.get_str();
    row["q"] = f->q.get_str();
  } else if (const auto* t = std::get_if<sfa::TrivialFailure>(&*at.outcome)) {
    row["outcome"] = "trivial-failure";
    row["witness"] = t->witness.get_str();
  } else {
    row["outcome"] = "unusable-odd-order";
  }
}

int cmd_factor(const RunConfig& cfg) {
  const sfa::Natural n = sfa::natural_from_string(cfg.arg_n);
  const sfa::FullFactorResult res =
      sfa::full_factor(n, strategy_from_name(cfg.strategy),
                       oracle_from_name(cfg.oracle), cfg.max_attempts, cfg.seed);

  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    doc["n"] = res.n.get_str();
    doc["max_attempts"] = cfg.max_attempts;
    doc["attempts"] = ojson::array();
    for (const auto& at : res.attempts) {
      ojson row;
      attempt_json(at, row);
      doc["attempts"].push_back(row);
    }
    ojson result;
    result["status"] = res.success ? "factored" : "exhausted";
    result["p"] = res.success ? ojson(res.p.get_str()) : ojson(nullptr);
    result["q"] = res.success ? ojson(res.q.get_str()) : ojson(nullptr);
    result["via"] = via_name(res.via);
    result["attempts_used"] = res.attempts.size();
    doc["result"] = result;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg)
              << "row_type,attempt,coprime,early_factor,order,outcome,method,"
                 "collapse_steps,witness,p,q\n";
    std::size_t i = 1;
    for (const auto& at : res.attempts) {
      std::cout << "attempt," << i++ << "," << at.coprime << ",";
      if (at.early_factor) {
        std::cout << *at.early_factor << ",,,,,,,\n";
        continue;
      }
      std::cout << "," << at.record->order << ",";
      if (const auto* f = std::get_if<sfa::Factors>(&*at.outcome))
        std::cout << "factors," << method_name(f->method) << ","
                  << f->collapse_steps << "," << f->witness << "," << f->p << ","
                  << f->q << "\n";
      else if (const auto* t = std::get_if<sfa::TrivialFailure>(&*at.outcome))
        std::cout << "trivial-failure,,," << t->witness << ",,\n";
      else
        std::cout << "unusable-odd-order,,,,,\n";
    }
    std::cout << "result,,,,,"
              << (res.success ? "factored" : "exhausted") << ","
              << via_name(res.via) << ",,,"
              << (res.success ? res.p.get_str() : "") << ","
              << (res.success ? res.q.get_str() : "") << "\n";
  } else {
    std::cout << header_line(cfg) << "n: " << res.n << "\n";
    std::size_t i = 1;
    for (const auto& at : res.attempts) {
      std::cout << "attempt " << i++ << ": coprime=" << at.coprime;
      if (at.early_factor) {
        std::cout << " early_factor=" << *at.early_factor << "\n";
        continue;
      }
      std::cout << " order=" << at.record->order;
      if (const auto* f = std::get_if<sfa::Factors>(&*at.outcome))
        std::cout << " outcome=factors method=" << method_name(f->method)
                  << " collapse_steps=" << f->collapse_steps
                  << " witness=" << f->witness << " p=" << f->p << " q=" << f->q
                  << "\n";
      else if (const auto* t = std::get_if<sfa::TrivialFailure>(&*at.outcome))
        std::cout << " outcome=trivial-failure witness=" << t->witness << "\n";
      else
        std::cout << " outcome=unusable-odd-order\n";
    }
    if (res.success)
      std::cout << "result: factored p=" << res.p << " q=" << res.q
                << " via=" << via_name(res.via)
                << " attempts=" << res.attempts.size() << "\n";
    else
      std::cout << "result: exhausted attempts=" << res.attempts.size() << "\n";
  }
  return res.success ? 0 : 1;
}

// ---- enumerate (exact, sweep, and sampled) ----

ojson report_json(const sfa::EnumerationReport& rep, const sfa::BoundCheck& bound) {
  ojson r;
  r["n"] = rep.sp.n.get_str();
  r["p1"] = rep.sp.p1.get_str();
  r["p2"] = rep.sp.p2.get_str();
  r["hard_form"] = rep.sp.hard_form;
  r["total_coprimes"] = rep.total_coprimes.get_str();
  r["square_coprimes"] = rep.square_coprimes.get_str();
  r["nonsquare_coprimes"] = rep.nonsquare_coprimes.get_str();
  r["even_order_count"] = rep.even_order_count.get_str();
  r["odd_order_count"] = rep.odd_order_count.get_str();
  r["standard_success"] = rep.standard_success.get_str();
  r["recovery_success"] = rep.recovery_success.get_str();
  r["nonsquare_success"] = rep.nonsquare_success.get_str();
  r["group_size"] = rep.group_size.get_str();
  r["group_even_order_count"] = rep.group_even_order_count.get_str();
  r["p_even_order"] = rational_str(rep.p_even_order);
  r["p_standard"] = rational_str(rep.p_standard);
  r["p_recovery"] = rational_str(rep.p_recovery);
  r["p_nonsquare"] = rational_str(rep.p_nonsquare);
  r["ratio_standard_to_nonsquare"] = rational_str(bound.lhs);
  r["ratio_bound"] = rational_str(bound.rhs);
  r["bound_holds"] = bound.holds;
  return r;
}

constexpr const char* kEnumerateCsvColumns =
    "n,p1,p2,hard_form,total_coprimes,square_coprimes,nonsquare_coprimes,"
    "even_order_count,odd_order_count,standard_success,recovery_success,"
    "nonsquare_success,group_size,group_even_order_count,p_even_order,"
    "p_standard,p_recovery,p_nonsquare,ratio_standard_to_nonsquare,"
    "ratio_bound,bound_holds";

void report_csv_row(const sfa::EnumerationReport& rep, const sfa::BoundCheck& bound,
                    std::ostream& os) {
  os << rep.sp.n << "," << rep.sp.p1 << "," << rep.sp.p2 << ","
     << (rep.sp.hard_form ? 1 : 0) << "," << rep.total_coprimes << ","
     << rep.square_coprimes << "," << rep.nonsquare_coprimes << ","
     << rep.even_order_count << "," << rep.odd_order_count << ","
     << rep.standard_success << "," << rep.recovery_success << ","
     << rep.nonsquare_success << "," << rep.group_size << ","
     << rep.group_even_order_count << "," << rational_str(rep.p_even_order)
     << "," << rational_str(rep.p_standard) << ","
     << rational_str(rep.p_recovery) << "," << rational_str(rep.p_nonsquare)
     << "," << rational_str(bound.lhs) << "," << rational_str(bound.rhs) << ","
     << (bound.holds ? 1 : 0) << "\n";
}

void report_text(const sfa::EnumerationReport& rep, const sfa::BoundCheck& bound,
                 std::ostream& os) {
  os << "n: " << rep.sp.n << "\np1: " << rep.sp.p1 << "\np2: " << rep.sp.p2
     << "\nhard_form: " << (rep.sp.hard_form ? "true" : "false")
     << "\ntotal_coprimes: " << rep.total_coprimes
     << "\nsquare_coprimes: " << rep.square_coprimes
     << "\nnonsquare_coprimes: " << rep.nonsquare_coprimes
     << "\neven_order_count: " << rep.even_order_count
     << "\nodd_order_count: " << rep.odd_order_count
     << "\nstandard_success: " << rep.standard_success
     << "\nrecovery_success: " << rep.recovery_success
     << "\nnonsquare_success: " << rep.nonsquare_success
     << "\ngroup_size: " << rep.group_size
     << "\ngroup_even_order_count: " << rep.group_even_order_count
     << "\np_even_order: " << rational_str(rep.p_even_order)
     << "\np_standard: " << rational_str(rep.p_standard)
     << "\np_recovery: " << rational_str(rep.p_recovery)
     << "\np_nonsquare: " << rational_str(rep.p_nonsquare)
     << "\nratio_standard_to_nonsquare: " << rational_str(bound.lhs)
     << "\nratio_bound: " << rational_str(bound.rhs)
     << "\nbound_holds: " << (bound.holds ? "true" : "false") << "\n";
}

int cmd_enumerate_exact(const RunConfig& cfg) {
  const sfa::Semiprime sp = semiprime_from_n(sfa::natural_from_string(cfg.arg_n));
  const sfa::EnumerationReport rep = sfa::enumerate_report(sp, cfg.workers);
  const sfa::BoundCheck bound = sfa::ratio_bound_check(rep);

  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    doc["report"] = report_json(rep, bound);
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg) << kEnumerateCsvColumns << "\n";
    report_csv_row(rep, bound, std::cout);
  } else {
    std::cout << header_line(cfg);
    report_text(rep, bound, std::cout);
  }
  return 0;
}

int cmd_enumerate_sweep(const RunConfig& cfg) {
  std::vector<sfa::Semiprime> list =
      sfa::enumerate_hard_semiprimes(sfa::Natural(static_cast<unsigned long>(cfg.sweep)));
  if (cfg.hard_only)
    std::erase_if(list, [](const sfa::Semiprime& sp) { return !sp.hard_form; });

  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    doc["reports"] = ojson::array();
    for (const auto& sp : list) {
      const sfa::EnumerationReport rep = sfa::enumerate_report(sp, cfg.workers);
      doc["reports"].push_back(report_json(rep, sfa::ratio_bound_check(rep)));
    }
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg) << kEnumerateCsvColumns << "\n";
    for (const auto& sp : list) {
      const sfa::EnumerationReport rep = sfa::enumerate_report(sp, cfg.workers);
      report_csv_row(rep, sfa::ratio_bound_check(rep), std::cout);
    }
  } else {
    std::cout << header_line(cfg);
    for (const auto& sp : list) {
      const sfa::EnumerationReport rep = sfa::enumerate_report(sp, cfg.workers);
      const sfa::BoundCheck bound = sfa::ratio_bound_check(rep);
      std::cout << "N=" << sp.n << " p1=" << sp.p1 << " p2=" << sp.p2
                << " hard=" << (sp.hard_form ? "true" : "false")
                << " total=" << rep.total_coprimes
                << " squares=" << rep.square_coprimes
                << " even=" << rep.even_order_count
                << " odd=" << rep.odd_order_count
                << " standard=" << rep.standard_success
                << " recovery=" << rep.recovery_success
                << " nonsquare_success=" << rep.nonsquare_success
                << " p_even=" << rational_str(rep.p_even_order)
                << " lhs=" << rational_str(bound.lhs)
                << " rhs=" << rational_str(bound.rhs)
                << " holds=" << (bound.holds ? "true" : "false") << "\n";
    }
  }
  return 0;
}

int cmd_enumerate_sampled(const RunConfig& cfg) {
  const sfa::Semiprime sp = semiprime_from_n(sfa::natural_from_string(cfg.arg_n));
  const sfa::MonteCarloReport rep =
      sfa::monte_carlo_report(sp, cfg.samples, cfg.seed, cfg.workers);

  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    ojson e;
    e["n"] = rep.sp.n.get_str();
    e["p1"] = rep.sp.p1.get_str();
    e["p2"] = rep.sp.p2.get_str();
    e["hard_form"] = rep.sp.hard_form;
    e["samples"] = rep.samples;
    e["early_factor_draws"] = rep.early_factor_draws;
    e["square_count"] = rep.square_count;
    e["nonsquare_count"] = rep.nonsquare_count;
    e["even_order_count"] = rep.even_order_count;
    e["standard_success"] = rep.standard_success;
    e["recovery_success"] = rep.recovery_success;
    e["nonsquare_success"] = rep.nonsquare_success;
    e["p_even_order"] = rep.p_even_order;
    e["se_even_order"] = rep.se_even_order;
    e["p_standard"] = rep.p_standard;
    e["se_standard"] = rep.se_standard;
    e["p_recovery"] = rep.p_recovery;
    e["se_recovery"] = rep.se_recovery;
    e["p_nonsquare"] = rep.p_nonsquare;
    e["se_nonsquare"] = rep.se_nonsquare;
    doc["estimate"] = e;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg)
              << "n,p1,p2,hard_form,samples,early_factor_draws,square_count,"
                 "nonsquare_count,even_order_count,standard_success,"
                 "recovery_success,nonsquare_success,p_even_order,se_even_order,"
                 "p_standard,se_standard,p_recovery,se_recovery,p_nonsquare,"
                 "se_nonsquare\n"
              << rep.sp.n << "," << rep.sp.p1 << "," << rep.sp.p2 << ","
              << (rep.sp.hard_form ? 1 : 0) << "," << rep.samples << ","
              << rep.early_factor_draws << "," << rep.square_count << ","
              << rep.nonsquare_count << "," << rep.even_order_count << ","
              << rep.standard_success << "," << rep.recovery_success << ","
              << rep.nonsquare_success << "," << double_str(rep.p_even_order)
              << "," << double_str(rep.se_even_order) << ","
              << double_str(rep.p_standard) << "," << double_str(rep.se_standard)
              << "," << double_str(rep.p_recovery) << ","
              << double_str(rep.se_recovery) << "," << double_str(rep.p_nonsquare)
              << "," << double_str(rep.se_nonsquare) << "\n";
  } else {
    std::cout << header_line(cfg) << "n: " << rep.sp.n << "\np1: " << rep.sp.p1
              << "\np2: " << rep.sp.p2
              << "\nhard_form: " << (rep.sp.hard_form ? "true" : "false")
              << "\nsamples: " << rep.samples
              << "\nearly_factor_draws: " << rep.early_factor_draws
              << "\nsquare_count: " << rep.square_count
              << "\nnonsquare_count: " << rep.nonsquare_count
              << "\neven_order_count: " << rep.even_order_count
              << "\nstandard_success: " << rep.standard_success
              << "\nrecovery_success: " << rep.recovery_success
              << "\nnonsquare_success: " << rep.nonsquare_success
              << "\np_even_order: " << double_str(rep.p_even_order)
              << " (se " << double_str(rep.se_even_order) << ")"
              << "\np_standard: " << double_str(rep.p_standard) << " (se "
              << double_str(rep.se_standard) << ")"
              << "\np_recovery: " << double_str(rep.p_recovery) << " (se "
              << double_str(rep.se_recovery) << ")"
              << "\np_nonsquare: " << double_str(rep.p_nonsquare) << " (se "
              << double_str(rep.se_nonsquare) << ")\n";
  }
  return 0;
}

// ---- gen / jacobi / decompose ----

int cmd_gen(const RunConfig& cfg) {
  sfa::Rng rng(cfg.seed);
  const sfa::Semiprime sp = sfa::gen_hard_semiprime(cfg.bits, rng);
  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    ojson s;
    s["n"] = sp.n.get_str();
    s["p1"] = sp.p1.get_str();
    s["p2"] = sp.p2.get_str();
    s["hard_form"] = sp.hard_form;
    doc["semiprime"] = s;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg) << "n,p1,p2,hard_form\n"
              << sp.n << "," << sp.p1 << "," << sp.p2 << ","
              << (sp.hard_form ? 1 : 0) << "\n";
  } else {
    std::cout << header_line(cfg) << "n: " << sp.n << "\np1: " << sp.p1
              << "\np2: " << sp.p2
              << "\nhard_form: " << (sp.hard_form ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_jacobi(const RunConfig& cfg) {
  const sfa::Natural a = sfa::natural_from_string(cfg.arg_n);
  const sfa::Natural n = sfa::natural_from_string(cfg.arg_c);
  const int symbol = sfa::jacobi(a, n);
  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    doc["a"] = a.get_str();
    doc["n"] = n.get_str();
    doc["symbol"] = symbol;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg) << "a,n,symbol\n"
              << a << "," << n << "," << symbol << "\n";
  } else {
    std::cout << header_line(cfg) << "a: " << a << "\nn: " << n
              << "\nsymbol: " << symbol << "\n";
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  const sfa::Natural b = sfa::natural_from_string(cfg.arg_n);
  const sfa::SquareDecomposition dec = sfa::decompose_square(b);
  if (cfg.format == "json") {
    ojson doc;
    doc["meta"] = meta_json(cfg);
    doc["value"] = dec.base.get_str();
    doc["root"] = dec.root.get_str();
    doc["exponent"] = dec.exponent;
    emit_json(doc);
  } else if (cfg.format == "csv") {
    std::cout << header_line(cfg) << "value,root,exponent\n"
              << dec.base << "," << dec.root << "," << dec.exponent << "\n";
  } else {
    std::cout << header_line(cfg) << "value: " << dec.base
              << "\nroot: " << dec.root << "\nexponent: " << dec.exponent
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"classical order finding, factor recovery and success-rate "
               "statistics for Shor's factoring algorithm"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"text", "json", "csv"});
  const auto strategy_check = CLI::IsMember({"uniform", "avoid-squares", "jacobi"});
  const auto oracle_check = CLI::IsMember({"bruteforce", "factored"});

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit seed for every random draw");
    sub->add_option("--format", cfg.format, "output format")->check(format_check);
    sub->add_option("--workers", cfg.workers,
                    "worker threads; never changes output bytes")
        ->check(CLI::Range(1u, 256u));
  };

  CLI::App* order = app.add_subcommand("order", "multiplicative order of c mod N");
  order->add_option("N", cfg.arg_n, "odd modulus")->required();
  order->add_option("c", cfg.arg_c, "coprime base")->required();
  order->add_option("--oracle", cfg.oracle, "order oracle")->check(oracle_check);
  add_common(order);

  CLI::App* factor = app.add_subcommand("factor", "factor N via order finding");
  factor->add_option("N", cfg.arg_n, "odd composite, not a prime power")->required();
  factor->add_option("--strategy", cfg.strategy, "coprime strategy")
      ->check(strategy_check);
  factor->add_option("--oracle", cfg.oracle, "order oracle")->check(oracle_check);
  factor->add_option("--max-attempts", cfg.max_attempts, "retry budget")
      ->check(CLI::Range(1u, 100000u));
  add_common(factor);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "exact coprime classification of a semiprime");
  enumerate->add_option("N", cfg.arg_n, "semiprime to enumerate");
  enumerate->add_option("--sweep", cfg.sweep, "enumerate every semiprime below this limit");
  enumerate->add_flag("--hard-only", cfg.hard_only, "restrict the sweep to hard-form semiprimes");
  enumerate->add_option("--samples", cfg.samples,
                        "Monte Carlo sample count (sampled estimate instead of exact)");
  add_common(enumerate);

  CLI::App* gen = app.add_subcommand("gen", "generate a hard-form semiprime");
  gen->add_option("--bits", cfg.bits, "total size in bits (>= 6)")->required();
  add_common(gen);

  CLI::App* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi symbol (a|n)");
  jacobi_cmd->add_option("a", cfg.arg_n, "numerator")->required();
  jacobi_cmd->add_option("n", cfg.arg_c, "odd modulus >= 3")->required();
  add_common(jacobi_cmd);

  CLI::App* decompose = app.add_subcommand("decompose", "square-tower decomposition b = a^(2^m)");
  decompose->add_option("b", cfg.arg_n, "value to decompose (>= 2)")->required();
  add_common(decompose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (order->parsed()) {
      cfg.command = "order";
      return cmd_order(cfg);
    }
    if (factor->parsed()) {
      cfg.command = "factor";
      return cmd_factor(cfg);
    }
    if (enumerate->parsed()) {
      cfg.command = "enumerate";
      cfg.oracle = "factored";  // enumeration always knows the factors
      if (!cfg.arg_n.empty() && cfg.sweep > 0)
        throw sfa::domain_error("enumerate: give either N or --sweep, not both");
      if (cfg.arg_n.empty() && cfg.sweep == 0)
        throw sfa::domain_error("enumerate: need a semiprime N or --sweep <limit>");
      if (cfg.samples > 0) {
        if (cfg.arg_n.empty())
          throw sfa::domain_error("enumerate: --samples needs a concrete N");
        return cmd_enumerate_sampled(cfg);
      }
      return cfg.sweep > 0 ? cmd_enumerate_sweep(cfg) : cmd_enumerate_exact(cfg);
    }
    if (gen->parsed()) {
      cfg.command = "gen";
      return cmd_gen(cfg);
    }
    if (jacobi_cmd->parsed()) {
      cfg.command = "jacobi";
      return cmd_jacobi(cfg);
    }
    if (decompose->parsed()) {
      cfg.command = "decompose";
      return cmd_decompose(cfg);
    }
    return 2;
  } catch (const sfa::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sfa::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sfa::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
