#include "zhelo/rational.hpp"

#include <ostream>

namespace zhelo {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rat::parse: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  }
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rat: division by zero");
  return Rat(mpq_class(1) / v_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.to_string();
}

}  // namespace zhelo
