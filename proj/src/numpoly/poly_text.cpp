#include <cctype>
#include <map>

#include "pfc/numpoly.hpp"

namespace pfc {

namespace {

template <typename T>
std::string format_poly(const Poly<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const T& c = p.coeffs()[i];
    if (c == 0) continue;
    std::string cs = c.get_str();
    const bool neg = cs.front() == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") {
      out += mag;
      out += '*';
    }
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

class TermParser {
 public:
  TermParser(std::string_view text, char var) : var_(var) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  std::map<std::size_t, Rational> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::map<std::size_t, Rational> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = get() == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        have_coeff = true;
      }
      std::size_t power = 0;
      if (have_coeff && peek() == '*') {
        get();
        if (peek() != var_) fail("expected variable after '*'");
      }
      if (peek() == var_) {
        get();
        power = 1;
        if (peek() == '^') {
          get();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          power = static_cast<std::size_t>(std::stoul(digits()));
        }
      } else if (!have_coeff) {
        fail("expected coefficient or variable");
      }
      if (neg) coeff = -coeff;
      terms[power] += coeff;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }
  Rational number() {
    Integer num(digits());
    Integer den = 1;
    if (peek() == '/') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      den = Integer(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                         " in '" + s_ + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

std::string to_string(const RatPoly& p, char var) { return format_poly(p, var); }
std::string to_string(const IntPoly& p, char var) { return format_poly(p, var); }

RatPoly parse_ratpoly(std::string_view text, char var) {
  auto terms = TermParser(text, var).parse();
  std::vector<Rational> c(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [k, v] : terms) c[k] = v;
  return RatPoly(std::move(c));
}

IntPoly parse_intpoly(std::string_view text, char var) {
  auto p = to_int(parse_ratpoly(text, var));
  if (!p) throw PolyParseError("polynomial has non-integer coefficients: " + std::string(text));
  return *p;
}

Rational parse_rational(std::string_view text) {
  RatPoly p = parse_ratpoly(text, 'x');
  if (p.degree() > 0) throw PolyParseError("expected a rational number: " + std::string(text));
  return p.coeff(0);
}

}  // namespace pfc
