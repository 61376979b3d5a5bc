#include "euler_pencil/rational.hpp"

#include <cctype>

#include "euler_pencil/error.hpp"

namespace ep {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::singular: return "singular";
    case ErrorKind::bad_reduction: return "bad-reduction";
    case ErrorKind::on_shell: return "on-shell";
    case ErrorKind::pole: return "pole";
    case ErrorKind::branch: return "branch";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::radicand_mismatch: return "radicand-mismatch";
    case ErrorKind::hasse: return "hasse-violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_implemented: return "not-implemented";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::pole, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::parse, "not a rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::parse, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class n = parse_int(text.substr(0, slash), text);
    std::string_view ds = text.substr(slash + 1);
    if (!all_digits(ds)) throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
    mpz_class d(std::string(ds), 10);
    if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  std::string_view body = text;
  bool neg = false;
  if (body.front() == '-' || body.front() == '+') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view ip = body.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
    throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
  std::string digits = std::string(ip) + std::string(fp);
  mpz_class n(digits.empty() ? std::string("0") : digits, 10);
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
  if (neg) n = -n;
  return Rational(n, d);
}

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw Error(ErrorKind::domain, "rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::pole, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q_.get_num_mpz_t()) || !mpz_perfect_square_p(q_.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::pole, "division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace ep
