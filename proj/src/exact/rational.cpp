#include "tensamp/exact/rational.hpp"

#include <cctype>
#include <ostream>

namespace tensamp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rat(parse_integer(text), mpz_class(1));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(num), d);
}

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw UsageError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace tensamp
