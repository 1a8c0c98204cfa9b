#include "tensamp/io/expression.hpp"

#include <cctype>
#include <charconv>

namespace tensamp {

namespace {

// U+2212 is accepted as a minus sign.
std::string normalize(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  }
  return true;
}

Rat parse_rat(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return Rat::parse(t);
}

DivisorClass symbol_class(const SurfaceModel& m, const std::string& sym) {
  const auto& names = m.lattice.basis_names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == sym) return RatVec::unit(m.rank(), i);
  }
  if (const CurveEntry* c = m.find_curve(sym)) return c->cls;
  if (sym == "K") return m.canonical;
  throw ParseError("unknown symbol '" + sym + "' in class expression");
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

DivisorClass parse_expression(const SurfaceModel& m, const std::string& s) {
  DivisorClass total(m.rank());
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Rat sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = Rat(-1);
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i) + " of '" + s + "'");
    }
    first = false;
    Rat coeff(1);
    const std::size_t num_start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > num_start) {
      coeff = parse_rat(s.substr(num_start, i - num_start));
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i >= s.size() || !is_ident_start(s[i])) {
      throw ParseError("expected a symbol at position " + std::to_string(i) + " of '" + s + "'");
    }
    const std::size_t sym_start = i;
    while (i < s.size() && is_ident_char(s[i])) ++i;
    total += (sign * coeff) * symbol_class(m, s.substr(sym_start, i - sym_start));
  }
  return total;
}

}  // namespace

DivisorClass parse_class_spec(const SurfaceModel& m, const std::string& text) {
  const std::string s = normalize(text);
  if (s.empty()) throw ParseError("empty class expression");
  if (s.find(',') != std::string::npos || looks_numeric(s)) {
    const auto parts = split(s, ',');
    std::vector<Rat> values;
    for (const auto& p : parts) {
      if (!looks_numeric(p)) throw ParseError("'" + p + "' is not an exact rational");
      values.push_back(parse_rat(p));
    }
    if (values.size() != m.rank()) {
      throw UsageError("class has " + std::to_string(values.size()) + " coefficients, model rank is " +
                       std::to_string(m.rank()));
    }
    return RatVec(std::move(values));
  }
  return parse_expression(m, s);
}

std::vector<long> parse_integer_list(const std::string& text) {
  const std::string s = normalize(text);
  std::vector<long> out;
  for (const auto& p : split(s, ',')) {
    long v = 0;
    const std::string t = (!p.empty() && p[0] == '+') ? p.substr(1) : p;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError("'" + p + "' is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace tensamp
