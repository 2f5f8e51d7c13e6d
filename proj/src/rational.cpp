#include "ambig/rational.hpp"

#include <cctype>

namespace ambig {

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational: " + text);
  }
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

Rat rat_floor(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(),
             value.get_den().get_mpz_t());
  return Rat(q);
}

Rat mod1(const Rat& value) { return value - rat_floor(value); }

long rat_to_long(const Rat& value) {
  if (value.get_den() != 1) throw std::invalid_argument("not an integer");
  if (!value.get_num().fits_slong_p()) throw std::overflow_error("rat_to_long");
  return value.get_num().get_si();
}

unsigned long common_denominator(const std::vector<Rat>& values) {
  mpz_class l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  if (!l.fits_ulong_p()) throw std::overflow_error("common_denominator");
  return l.get_ui();
}

}  // namespace ambig
