#include "permpat/asymptotics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "permpat/errors.hpp"

namespace permpat {

const char* to_string(TightConstant which) {
  switch (which) {
    case TightConstant::Rho1342:
      return "rho1342";
    case TightConstant::Rho1234:
      return "rho1234";
    case TightConstant::Rho132:
      return "rho132";
  }
  return "?";
}

namespace {

enum class CountSource {
  Catalan,
  Gessel,
  S1342,
  TightMonotone,
  Tight132,
  VeryTightMonotone,
  Brute,
};

// Avoider counts are invariant under reverse and complement for all three
// containment kinds, so a formula for any symmetry image of q applies.
CountSource classify_source(const Permutation& q, ContainmentKind kind) {
  const Permutation candidates[] = {q, q.reversed(), q.complemented(),
                                    q.reversed().complemented()};
  for (const Permutation& c : candidates) {
    switch (kind) {
      case ContainmentKind::Classic:
        if (c.size() == 3) return CountSource::Catalan;
        if (c == Permutation::identity(4)) return CountSource::Gessel;
        if (c == Permutation({1, 3, 4, 2})) return CountSource::S1342;
        break;
      case ContainmentKind::Tight:
        if (c.is_increasing() && c.size() >= 3)
          return CountSource::TightMonotone;
        if (c == Permutation({1, 3, 2})) return CountSource::Tight132;
        break;
      case ContainmentKind::VeryTight:
        if (c.is_increasing() && c.size() >= 2)
          return CountSource::VeryTightMonotone;
        break;
    }
  }
  return CountSource::Brute;
}

CountMethod method_of(CountSource source) {
  switch (source) {
    case CountSource::Catalan:
    case CountSource::Gessel:
    case CountSource::S1342:
      return CountMethod::Formula;
    case CountSource::TightMonotone:
    case CountSource::Tight132:
    case CountSource::VeryTightMonotone:
      return CountMethod::GeneratingFunction;
    case CountSource::Brute:
      return CountMethod::BruteForce;
  }
  return CountMethod::BruteForce;
}

// Exact avoider counts for n = 0..n_max from the best available source.
std::vector<BigInt> counts_for(const Permutation& q, ContainmentKind kind,
                               int n_max, int max_brute_n,
                               CountMethod* method_out) {
  CountSource source = classify_source(q, kind);
  if (method_out) *method_out = method_of(source);
  int k = q.size();
  switch (source) {
    case CountSource::Catalan: {
      std::vector<BigInt> out(n_max + 1);
      for (int n = 0; n <= n_max; ++n) out[n] = catalan(n);
      return out;
    }
    case CountSource::Gessel: {
      std::vector<BigInt> out(n_max + 1);
      out[0] = 1;
      for (int n = 1; n <= n_max; ++n) out[n] = s_1234(n, GesselForm::Product);
      return out;
    }
    case CountSource::S1342: {
      std::vector<BigInt> out(n_max + 1);
      out[0] = 1;
      for (int n = 1; n <= n_max; ++n) out[n] = s_1342(n);
      return out;
    }
    case CountSource::TightMonotone:
      return tight_monotone_counts(k, n_max);
    case CountSource::Tight132:
      return tight_132_counts(n_max);
    case CountSource::VeryTightMonotone:
      return very_tight_monotone_counts(k, n_max);
    case CountSource::Brute: {
      std::vector<BigInt> out(n_max + 1);
      for (int n = 0; n <= n_max; ++n)
        out[n] = brute_force_count(n, q, kind, max_brute_n);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

GrowthSequence growth_sequence(const Permutation& q, ContainmentKind kind,
                               int n_max, int max_brute_n) {
  if (q.empty())
    throw PreconditionViolated("growth_sequence: pattern must be nonempty");
  if (n_max < 1)
    throw std::invalid_argument("growth_sequence: n_max must be >= 1");

  CountMethod method = CountMethod::BruteForce;
  std::vector<BigInt> counts = counts_for(q, kind, n_max, max_brute_n,
                                          &method);
  GrowthSequence seq;
  seq.pattern = q;
  seq.kind = kind;
  BigInt fact = 1;
  for (int n = 1; n <= n_max; ++n) {
    fact *= n;
    GrowthRow row;
    row.n = n;
    row.count = counts[n];
    row.method = method;
    double base = kind == ContainmentKind::Classic
                      ? row.count.convert_to<double>()
                      : Rational(row.count, fact).convert_to<double>();
    row.root = std::pow(base, 1.0 / n);
    seq.rows.push_back(std::move(row));
  }
  return seq;
}

namespace {

// f_k(x) summed until the first omitted term is below eps with a
// geometric tail; f_k is entire so the tail bound is immediate.
double evaluate_f_k(int k, double x, double eps) {
  double sum = 0.0, term = 1.0;  // term = x^m / m!
  for (int m = 0;; ++m) {
    if (m % k == 0)
      sum += term;
    else if (m % k == 1)
      sum -= term;
    double next = term * x / (m + 1);
    if (next < eps && x / (m + 2) < 0.5 && m > 2) break;
    term = next;
    if (m > 500) break;  // unreachable for x in (0, 4]
  }
  return sum;
}

struct Bracket {
  double lo, hi;
};

Bracket scan_for_sign_change(const std::function<double(double)>& f,
                             double start, double limit, double step,
                             const char* what) {
  double prev_x = start;
  double prev_f = f(start);
  for (double x = start + step; x <= limit + step / 2; x += step) {
    double fx = f(x);
    if ((prev_f > 0) != (fx > 0) || fx == 0) return {prev_x, x};
    prev_x = x;
    prev_f = fx;
  }
  throw BracketingFailed(std::string(what) + ": no sign change in (" +
                         std::to_string(start) + ", " +
                         std::to_string(limit) + "]");
}

RootResult bisect(const std::function<double(double)>& f, Bracket bracket,
                  double tol) {
  double flo = f(bracket.lo);
  double mid = 0.5 * (bracket.lo + bracket.hi);
  double fmid = f(mid);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (bracket.lo + bracket.hi);
    fmid = f(mid);
    if ((flo > 0) != (fmid > 0)) {
      bracket.hi = mid;
    } else {
      bracket.lo = mid;
      flo = fmid;
    }
    if (bracket.hi - bracket.lo <= tol && std::abs(fmid) <= tol) break;
  }
  RootResult out;
  out.value = 0.5 * (bracket.lo + bracket.hi);
  out.residual = f(out.value);
  out.lo = bracket.lo;
  out.hi = bracket.hi;
  out.tolerance = tol;
  return out;
}

double adaptive_simpson_step(const std::function<double(double)>& f, double a,
                             double b, double fa, double fm, double fb,
                             double whole, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * eps)
    return left + right + (left + right - whole) / 15;
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, eps / 2,
                               depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, eps / 2,
                               depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double eps) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return adaptive_simpson_step(f, a, b, fa, fm, fb, whole, eps, 40);
}

}  // namespace

RootResult smallest_positive_root_fk(int k, double tol) {
  if (k < 3)
    throw std::invalid_argument("smallest_positive_root_fk: k must be >= 3");
  if (tol <= 0)
    throw std::invalid_argument("smallest_positive_root_fk: tol must be > 0");
  auto f = [k, tol](double x) { return evaluate_f_k(k, x, tol / 100); };
  Bracket bracket = scan_for_sign_change(f, 0.0, 4.0, 1.0 / 16,
                                         "smallest_positive_root_fk");
  return bisect(f, bracket, tol);
}

TightConstantResult tight_constant_roots(TightConstant which, double tol) {
  if (tol <= 0)
    throw std::invalid_argument("tight_constant_roots: tol must be > 0");

  std::function<double(double)> g;  // g(z) = 0 at the defining z
  double quadrature_eps = tol / 10;
  switch (which) {
    case TightConstant::Rho1342:
      g = [quadrature_eps](double z) {
        return adaptive_simpson(
                   [](double t) { return std::exp(-t * t * t / 6); }, 0.0, z,
                   quadrature_eps) -
               1.0;
      };
      break;
    case TightConstant::Rho132:
      g = [quadrature_eps](double z) {
        return adaptive_simpson(
                   [](double t) { return std::exp(-t * t / 2); }, 0.0, z,
                   quadrature_eps) -
               1.0;
      };
      break;
    case TightConstant::Rho1234:
      g = [](double z) {
        return std::cos(z) - std::sin(z) + std::exp(-z);
      };
      break;
  }

  Bracket z_bracket =
      scan_for_sign_change(g, 1.0 / 64, 8.0, 1.0 / 16, to_string(which));
  // Bisect in z until the bracket is narrow enough in rho = 1/z space.
  double flo = g(z_bracket.lo);
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (z_bracket.lo + z_bracket.hi);
    double fmid = g(mid);
    if ((flo > 0) != (fmid > 0)) {
      z_bracket.hi = mid;
    } else {
      z_bracket.lo = mid;
      flo = fmid;
    }
    double rho_width = 1.0 / z_bracket.lo - 1.0 / z_bracket.hi;
    if (rho_width <= tol && std::abs(fmid) <= tol) break;
  }

  double z = 0.5 * (z_bracket.lo + z_bracket.hi);
  TightConstantResult result;
  result.which = which;
  result.rho.value = 1.0 / z;
  result.rho.residual = g(z);
  result.rho.lo = 1.0 / z_bracket.hi;
  result.rho.hi = 1.0 / z_bracket.lo;
  result.rho.tolerance = tol;
  if (which == TightConstant::Rho132) result.gamma = std::exp(z * z / 2);
  return result;
}

RatioTrendReport ratio_trend(const Permutation& q, ContainmentKind kind,
                             int n_min, int n_max, int max_brute_n) {
  if (kind != ContainmentKind::Tight)
    throw std::invalid_argument(
        "ratio_trend: the subword bound applies to tight containment");
  if (q.empty())
    throw PreconditionViolated("ratio_trend: pattern must be nonempty");
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("ratio_trend: need 1 <= n_min <= n_max");

  int k = q.size();
  std::vector<BigInt> counts = counts_for(q, kind, n_max, max_brute_n,
                                          nullptr);
  Rational per_window(big_factorial(k) - 1, big_factorial(k));

  RatioTrendReport report;
  report.pattern = q;
  report.kind = kind;
  report.all_bounds_hold = true;
  for (int n = n_min; n <= n_max; ++n) {
    RatioTrendRow row;
    row.n = n;
    row.count = counts[n];
    row.ratio = Rational(counts[n], big_factorial(n));
    row.ratio_root = std::pow(row.ratio.convert_to<double>(), 1.0 / n);
    row.bound = 1;
    for (int i = 0; i < n / k; ++i) row.bound *= per_window;
    row.bound_holds = row.ratio <= row.bound;
    report.all_bounds_hold = report.all_bounds_hold && row.bound_holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace permpat
