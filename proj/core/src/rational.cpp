#include "dcospan/rational.hpp"

#include <stdexcept>

namespace dcospan {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.isZero()) throw std::invalid_argument("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rat Rat::reciprocal() const {
  if (isZero()) throw std::invalid_argument("reciprocal of zero");
  return Rat(mpq_class(v_.get_den(), v_.get_num()));
}

Rat Rat::parse(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t numStart = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == numStart) throw bad();
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    ++pos;
    const std::size_t denStart = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == denStart || pos != text.size()) throw bad();
    if (mpz_class(text.substr(denStart)) == 0) throw bad();
  }
  mpq_class v(text);
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const { return v_.get_str(); }

}  // namespace dcospan
