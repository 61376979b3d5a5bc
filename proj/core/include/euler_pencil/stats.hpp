#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euler_pencil/curves.hpp"

namespace ep {

enum class PrimeClass { inert, split, bad };

const char* prime_class_name(PrimeClass c);

struct SeriesRow {
  long p;
  long a_p;
  double w_plus;
  double u;
  double lambda;
  double delta;
  PrimeClass cls;
  bool epsilon_ok;  ///< |delta - a_p/(2 sqrt p)| <= 3/(2 sqrt p)
};

struct PrimeSeries {
  std::string label;
  long X = 0;
  std::optional<long> cm_discriminant;
  std::vector<SeriesRow> rows;  ///< good primes, ascending
  long prime_count = 0;         ///< pi(X), all primes

  bool all_epsilon_ok() const;
};

/// Canonical plus-branch basepoint observables at every good prime <= X.
/// Rows are inert/split by the CM field when j is 0 or 1728, otherwise by a_p = 0.
PrimeSeries delta_p_series(const WeierstrassCurve& curve, long X, unsigned threads = 1);

struct HistogramBin {
  double lo, hi;
  long count;
};

struct SatoTateReport {
  double inert_fraction = 0;
  double split_ks_distance = 0;
  long good = 0, inert = 0, split = 0;
  std::vector<HistogramBin> histogram;  ///< split delta_p, width 0.1 on [-1.5, 1.5]
  std::optional<std::string> warning;
};

SatoTateReport sato_tate_report(const PrimeSeries& series);

/// Kolmogorov-Smirnov distance of a sample to the arcsine law on [-1, 1].
double ks_distance_arcsine(std::vector<double> sample);

struct BulkCount {
  long N_delta = 0;
  double ratio = 0;     ///< N_delta / pi(X)
  double expected = 0;  ///< 1/2 + arcsin(eps)/pi
};

BulkCount bulk_count(const PrimeSeries& series, double eps);

struct AccumulationPoint {
  long X;
  double u_bar, lambda_bar, dev;
};

/// log p weighted means of u_p and lambda_p over good primes <= X, summed in ascending p.
std::vector<AccumulationPoint> accumulation_means(const WeierstrassCurve& curve, const std::vector<long>& X_list,
                                                  unsigned threads = 1);
std::vector<AccumulationPoint> accumulation_means(const PrimeSeries& series, const std::vector<long>& X_list);

}  // namespace ep
