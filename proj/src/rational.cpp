#include "rational.hpp"

#include <cctype>

namespace iwb {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "Ok";
    case Status::InvalidArgument: return "InvalidArgument";
    case Status::ParseError: return "ParseError";
    case Status::ZeroConstantTerm: return "ZeroConstantTerm";
    case Status::NotPositiveDefinite: return "NotPositiveDefinite";
    case Status::NotInP: return "NotInP";
    case Status::ZeroPolynomial: return "ZeroPolynomial";
    case Status::NoSolution: return "NoSolution";
    case Status::NonUniqueSolution: return "NonUniqueSolution";
    case Status::NoConvergence: return "NoConvergence";
    case Status::DomainError: return "DomainError";
    case Status::StabilizationNotReached: return "StabilizationNotReached";
    case Status::LeadingMonomialMismatch: return "LeadingMonomialMismatch";
    case Status::Overflow: return "Overflow";
    case Status::Internal: return "Internal";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Status::ParseError, "empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(Status::ParseError, "malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(Status::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace iwb
