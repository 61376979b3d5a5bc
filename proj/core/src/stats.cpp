#include "euler_pencil/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "euler_pencil/continuum.hpp"
#include "euler_pencil/error.hpp"
#include "euler_pencil/matching.hpp"
#include "euler_pencil/parallel.hpp"

namespace ep {

const char* prime_class_name(PrimeClass c) {
  switch (c) {
    case PrimeClass::inert: return "inert";
    case PrimeClass::split: return "split";
    case PrimeClass::bad: return "bad";
  }
  return "bad";
}

bool PrimeSeries::all_epsilon_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SeriesRow& r) { return r.epsilon_ok; });
}

namespace {

int kronecker_cm(long D, long p) {
  if (D == -4) return p % 4 == 1 ? 1 : -1;
  if (D == -3) return p % 3 == 1 ? 1 : -1;
  return 0;
}

}  // namespace

PrimeSeries delta_p_series(const WeierstrassCurve& curve, long X, unsigned threads) {
  if (X < 10) throw Error(ErrorKind::domain, "prime series needs X >= 10");
  PrimeSeries s;
  s.label = curve.name();
  s.X = X;
  s.cm_discriminant = curve.cm_discriminant_from_j();
  std::vector<long> all = primes_up_to(X);
  s.prime_count = static_cast<long>(all.size());
  std::vector<long> ps;
  for (long p : all)
    if (!curve.is_bad_prime(p)) ps.push_back(p);
  s.rows.resize(ps.size());
  parallel_for(ps.size(), threads, [&](std::size_t i) {
    long p = ps[i];
    long a = ap_count(curve, SquareTable(p));
    Basepoint bp = canonical_basepoint(a, p, Branch::plus);
    SeriesRow r;
    r.p = p;
    r.a_p = a;
    r.w_plus = bp.w.real();
    r.u = bp.u.real();
    r.lambda = bp.lambda.real();
    double sp = std::sqrt(static_cast<double>(p));
    r.delta = (r.u - 1.0) * 2.0 * sp;
    if (s.cm_discriminant) r.cls = kronecker_cm(*s.cm_discriminant, p) < 0 ? PrimeClass::inert : PrimeClass::split;
    else r.cls = a == 0 ? PrimeClass::inert : PrimeClass::split;
    r.epsilon_ok = std::abs(r.delta - static_cast<double>(a) / (2.0 * sp)) <= 1.5 / sp;
    s.rows[i] = r;
  });
  return s;
}

double ks_distance_arcsine(std::vector<double> sample) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double c = arcsine_cdf(sample[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / n - c), std::abs(static_cast<double>(i) / n - c)});
  }
  return d;
}

SatoTateReport sato_tate_report(const PrimeSeries& series) {
  SatoTateReport r;
  if (!series.cm_discriminant || *series.cm_discriminant != -4)
    r.warning = "curve is not CM by Z[i]; the arcsine equidistribution claim does not apply";
  std::vector<double> split;
  for (const auto& row : series.rows) {
    ++r.good;
    if (row.cls == PrimeClass::inert) ++r.inert;
    else if (row.cls == PrimeClass::split) {
      ++r.split;
      split.push_back(row.delta);
    }
  }
  r.inert_fraction = r.good ? static_cast<double>(r.inert) / static_cast<double>(r.good) : 0.0;
  r.split_ks_distance = ks_distance_arcsine(split);
  for (int k = 0; k < 30; ++k) {
    double lo = -1.5 + 0.1 * k;
    r.histogram.push_back({lo, lo + 0.1, 0});
  }
  for (double d : split) {
    int k = static_cast<int>(std::floor((d + 1.5) / 0.1));
    if (k >= 0 && k < 30) ++r.histogram[static_cast<size_t>(k)].count;
  }
  return r;
}

BulkCount bulk_count(const PrimeSeries& series, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::domain, "bulk count needs 0 < eps < 1");
  BulkCount b;
  for (const auto& row : series.rows)
    if (std::abs(row.delta) < eps) ++b.N_delta;
  b.ratio = series.prime_count ? static_cast<double>(b.N_delta) / static_cast<double>(series.prime_count) : 0.0;
  b.expected = 0.5 + std::asin(eps) / std::numbers::pi;
  return b;
}

std::vector<AccumulationPoint> accumulation_means(const PrimeSeries& series, const std::vector<long>& X_list) {
  if (!std::is_sorted(X_list.begin(), X_list.end())) throw Error(ErrorKind::domain, "X list must be ascending");
  std::vector<AccumulationPoint> out;
  double w = 0, su = 0, sl = 0;
  std::size_t i = 0;
  for (long X : X_list) {
    if (X > series.X) throw Error(ErrorKind::domain, "X exceeds the series cutoff");
    for (; i < series.rows.size() && series.rows[i].p <= X; ++i) {
      double lp = std::log(static_cast<double>(series.rows[i].p));
      w += lp;
      su += lp * series.rows[i].u;
      sl += lp * series.rows[i].lambda;
    }
    double ub = w > 0 ? su / w : 0.0;
    double lb = w > 0 ? sl / w : 0.0;
    out.push_back({X, ub, lb, std::abs(ub - 1.0) + std::abs(lb - 1.0)});
  }
  return out;
}

std::vector<AccumulationPoint> accumulation_means(const WeierstrassCurve& curve, const std::vector<long>& X_list,
                                                  unsigned threads) {
  if (X_list.empty()) return {};
  PrimeSeries s = delta_p_series(curve, std::max(10L, X_list.back()), threads);
  return accumulation_means(s, X_list);
}

}  // namespace ep
