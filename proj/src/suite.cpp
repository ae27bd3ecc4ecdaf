#include "ctred/suite.hpp"

#include "ctred/analytic.hpp"
#include "ctred/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <new>
#include <sstream>
#include <thread>

namespace ctred {

namespace {

using Cell = std::function<VerificationReport()>;

struct Range {
  int lo;
  int hi;
};

Range pick(const std::optional<int>& single, const std::optional<int>& max, int lo, int default_hi) {
  if (single) return {*single, *single};
  return {lo, max ? *max : default_hi};
}

void check_bound(const char* what, const std::optional<int>& v, int lo, int hi) {
  if (v && (*v < lo || *v > hi))
    throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

VerificationReport boolean_report(const std::string& check, bool holds, int order) {
  VerificationReport r = new_report("jacobi", {{"check", check}, {"order", static_cast<long>(order)}});
  r.routes.push_back({"holds", holds ? 1 : 0});
  r.routes.push_back({"expected", 1});
  finalize(r);
  return r;
}

VerificationReport check_report(const std::string& check, long s, int order, const CheckResult& res) {
  VerificationReport r = new_report("jacobi", {{"check", check}, {"s", s}, {"order", static_cast<long>(order)}});
  if (res.status == CheckStatus::Undecidable) {
    r.skipped = true;
    r.note = "undecidable at this order: " + res.note;
    return r;
  }
  r.routes.push_back({"lhs", res.lhs});
  r.routes.push_back({"rhs", res.rhs});
  finalize(r);
  return r;
}

void add_jacobi_cells(const SuiteSpec& spec, std::vector<Cell>& cells) {
  const int order = spec.order;
  cells.push_back([order] { return boolean_report("observation", observation_check(), order); });
  cells.push_back([order] {
    VerificationReport r = new_report("jacobi", {{"check", std::string("observation-spot")}, {"order", static_cast<long>(order)}});
    const auto [lhs, rhs] = observation_at(1, 2);
    r.routes = {{"lhs", lhs}, {"rhs", rhs}, {"expected", make_rat(1, 4)}};
    finalize(r);
    return r;
  });
  cells.push_back([order] { return boolean_report("uij", uij_check(4), order); });
  cells.push_back([order] { return boolean_report("extra-factor", extra_factor_check(), order); });
  for (int s = -6; s <= 6; ++s)
    cells.push_back([order, s] {
      const ChangeOfVariable cov = catalan_change_of_variable(order);
      const TruncLaurent g = TruncLaurent::monomial(s, 1, TruncLaurent::kExact);
      return check_report("jacobi", s, order, jacobi_check(g, cov, order));
    });
  for (int s = -6; s <= 1; ++s)
    cells.push_back([order, s] {
      const TruncLaurent g = TruncLaurent::monomial(s, 1, TruncLaurent::kExact);
      VerificationReport r = check_report("crucial-jacobi", s, order, crucial_jacobi_check(g, order));
      if (!r.skipped && s <= 0) {
        // CT_x ((1+x)^2/x)^m = C(2m, m).
        r.routes.push_back({"central-binomial", BigRat(binomial(-2L * s, -s))});
        finalize(r);
      }
      return r;
    });
}

std::vector<Cell> expand(const SuiteSpec& spec, const std::string& suite) {
  std::vector<Cell> cells;
  const int threads = 1;
  if (suite == "identity1") {
    const Range n = pick(spec.n, spec.max_n, 1, 5);
    for (int v = n.lo; v <= n.hi; ++v) cells.push_back([v, threads] { return verify_identity1(v, threads); });
  } else if (suite == "identity2") {
    const Range n = pick(spec.n, spec.max_n, 1, 4);
    const Range m = pick(spec.m, spec.max_m, 0, 2);
    for (int nv = n.lo; nv <= n.hi; ++nv)
      for (int mv = m.lo; mv <= m.hi; ++mv)
        cells.push_back([nv, mv, threads] { return verify_identity2(nv, mv, threads); });
  } else if (suite == "conjecture") {
    const Range n = pick(spec.n, spec.max_n, 1, 5);
    const Range m = pick(spec.m, spec.max_m, 0, 3);
    for (int nv = n.lo; nv <= std::min(n.hi, 5); ++nv)
      for (int mv = m.lo; mv <= m.hi; ++mv)
        cells.push_back([nv, mv, threads] { return verify_conjecture(nv, mv, threads); });
  } else if (suite == "morris") {
    const Range n = pick(spec.n, spec.max_n, 1, 3);
    const int top = spec.max_abc.value_or(2);
    const Range a = pick(spec.a, std::nullopt, 0, top);
    const Range b = pick(spec.b, std::nullopt, 0, top);
    const Range k = pick(spec.k, std::nullopt, 0, top);
    for (int nv = n.lo; nv <= std::min(n.hi, 3); ++nv)
      for (int av = a.lo; av <= a.hi; ++av)
        for (int bv = b.lo; bv <= b.hi; ++bv)
          for (int kv = k.lo; kv <= k.hi; ++kv) cells.push_back([=] { return verify_morris(av, bv, kv, nv); });
  } else if (suite == "macdonald") {
    const Range n = pick(spec.n, spec.max_n, 1, 3);
    const int top = spec.max_abc.value_or(2);
    for (int nv = n.lo; nv <= std::min(n.hi, 3); ++nv) {
      // Three variables only at the smallest parameters unless asked for explicitly.
      const int cap = (nv == 3) ? std::min(top, 1) : top;
      const Range a = pick(spec.a, std::nullopt, 0, cap);
      const Range b = pick(spec.b, std::nullopt, 0, cap);
      const Range c = pick(spec.c, std::nullopt, 0, cap);
      for (int av = a.lo; av <= a.hi; ++av)
        for (int bv = b.lo; bv <= b.hi; ++bv)
          for (int cv = c.lo; cv <= c.hi; ++cv) cells.push_back([=] { return verify_macdonald(nv, av, bv, cv); });
    }
  } else if (suite == "reduction") {
    const Range n = pick(spec.n, spec.max_n, 1, 5);
    for (int nv = n.lo; nv <= std::min(n.hi, 5); ++nv)
      for (int s = 0; s < spec.samples; ++s) {
        const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(s);
        cells.push_back([nv, seed, threads] { return verify_reduction(nv, seed, threads); });
      }
  } else if (suite == "jacobi") {
    add_jacobi_cells(spec, cells);
  }
  return cells;
}

std::string param_text(const ParamValue& v) {
  if (const long* i = std::get_if<long>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identity1", "identity2", "conjecture", "morris",
                                              "macdonald", "reduction", "jacobi"};
  return names;
}

void validate(const SuiteSpec& spec) {
  const auto& names = suite_names();
  if (spec.suite != "all" && std::find(names.begin(), names.end(), spec.suite) == names.end())
    throw UsageError("unknown suite '" + spec.suite + "'");
  check_bound("--n", spec.n, 1, kMaxN);
  check_bound("--max-n", spec.max_n, 1, kMaxN);
  check_bound("--m", spec.m, 0, kMaxM);
  check_bound("--max-m", spec.max_m, 0, kMaxM);
  check_bound("--a", spec.a, 0, kMaxAbc);
  check_bound("--b", spec.b, 0, kMaxAbc);
  check_bound("--c", spec.c, 0, kMaxAbc);
  check_bound("--k", spec.k, 0, kMaxAbc);
  check_bound("--max-abc", spec.max_abc, 0, kMaxAbc);
  if (spec.order < 2 || spec.order > kMaxOrder)
    throw UsageError("--order must lie in [2, " + std::to_string(kMaxOrder) + "]");
  if (spec.samples < 1 || spec.samples > 1000) throw UsageError("--samples must lie in [1, 1000]");
  if (spec.threads < 1 || spec.threads > 256) throw UsageError("--threads must lie in [1, 256]");
  if ((spec.suite == "morris" || spec.suite == "macdonald") && spec.n && *spec.n > 3)
    throw UsageError("--n must be at most 3 for " + spec.suite);
  if ((spec.suite == "conjecture" || spec.suite == "reduction") && spec.n && *spec.n > 5)
    throw UsageError("--n must be at most 5 for " + spec.suite);
}

std::vector<VerificationReport> run_suites(const SuiteSpec& spec) {
  validate(spec);
  std::vector<Cell> cells;
  for (const auto& name : suite_names()) {
    if (spec.suite != "all" && spec.suite != name) continue;
    auto more = expand(spec, name);
    cells.insert(cells.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }

  std::vector<VerificationReport> reports(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        reports[i] = cells[i]();
      } catch (const std::bad_alloc&) {
        reports[i].skipped = true;
        reports[i].note = "out of memory";
      }
      if (reports[i].elapsed_ms == 0)
        reports[i].elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int nthreads = std::min<int>(spec.threads, static_cast<int>(std::max<std::size_t>(1, cells.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& x, const VerificationReport& y) {
    if (x.suite != y.suite) return x.suite < y.suite;
    return x.params < y.params;
  });
  return reports;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) {
    if (const long* i = std::get_if<long>(&v)) params[k] = *i;
    else params[k] = std::get<std::string>(v);
  }
  nlohmann::json routes = nlohmann::json::array();
  for (const auto& route : r.routes) routes.push_back({{"name", route.name}, {"value", to_string(route.value)}});
  nlohmann::json j = {{"suite", r.suite},   {"params", params},          {"routes", routes},
                      {"equal", r.equal},   {"elapsed_ms", r.elapsed_ms}};
  if (r.skipped) {
    j["skipped"] = true;
    j["note"] = r.note;
  }
  return j;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string format_text(const VerificationReport& r, bool color) {
  std::ostringstream os;
  const char* tag = r.skipped ? "SKIP" : (r.equal ? "PASS" : "FAIL");
  if (color) os << (r.skipped ? "\033[33m" : (r.equal ? "\033[32m" : "\033[31m")) << tag << "\033[0m";
  else os << tag;
  os << "  " << r.suite;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << param_text(v);
  if (r.skipped) {
    os << "  (" << r.note << ')';
  } else if (!r.routes.empty()) {
    os << "  value=" << to_string(r.routes.front().value) << "  routes:";
    for (std::size_t i = 0; i < r.routes.size(); ++i) os << (i ? ", " : " ") << r.routes[i].name;
  }
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "  [" << r.elapsed_ms << " ms]";
  return os.str();
}

std::string format_failure(const VerificationReport& r) {
  std::ostringstream os;
  os << "first mismatch: " << r.suite;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << param_text(v);
  os << '\n';
  for (const auto& route : r.routes) os << "  " << route.name << " = " << to_string(route.value) << '\n';
  return os.str();
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.skipped && !r.equal) return 1;
  return 0;
}

}  // namespace ctred
