#ifndef HICALC_RATIONAL_HPP
#define HICALC_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hicalc {

// Input that is malformed or insufficient on its face.  CLI maps this to exit 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Failure discovered while computing (non-isolated germ, inconsistent data,
// resource caps).  CLI maps this to exit 3.
class compute_error : public std::runtime_error {
 public:
  explicit compute_error(const std::string& what) : std::runtime_error(what) {}
};

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar.  cpp_rational keeps lowest terms with positive
// denominator, which is exactly the canonical form required here.
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Accepts "p" or "p/q" with optional leading sign, q > 0 after normalization.
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](const char* part) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw input_error(std::string("bad rational literal '") + text + "': missing " + part);
    return text.substr(start, pos - start);
  };
  const std::string num = read_digits("numerator");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits("denominator");
  }
  if (pos != text.size())
    throw input_error(std::string("bad rational literal '") + text + "'");
  Int n(num), d(den);
  if (d == 0) throw input_error(std::string("zero denominator in '") + text + "'");
  if (neg) n = -n;
  return Rational(n, d);
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_to_string(const Rational& q) {
  std::string s = rational_num(q).str();
  if (rational_den(q) != 1) s += "/" + rational_den(q).str();
  return s;
}

// Checked narrowing for counts that end up in reports.
inline long long to_int64(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw compute_error(std::string(what) + " exceeds 64-bit range");
  return static_cast<long long>(v);
}

}  // namespace hicalc

#endif
