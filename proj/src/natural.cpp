#include "collatz_net/natural.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace collatz {

Natural natural_from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

Rational make_rational(const Natural& num, const Natural& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_signed = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') return Natural(-parse_natural(s.substr(1)));
    return parse_natural(s);
  };
  if (slash == std::string_view::npos) return Rational(parse_signed(text));
  return make_rational(parse_signed(text.substr(0, slash)), parse_natural(text.substr(slash + 1)));
}

double to_double(const Rational& q) {
  const auto bits = [](const Natural& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); };
  if (bits(q.get_num()) <= 53 && bits(q.get_den()) <= 53) return q.get_num().get_d() / q.get_den().get_d();
  return q.get_d();
}

std::uint64_t to_u64(const Natural& v) {
  if (sgn(v) <= 0) return 0;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::size_t NaturalHash::operator()(const Natural& v) const noexcept {
  const mpz_srcptr z = v.get_mpz_t();
  const auto limbs = mpz_size(z);
  std::size_t h = limbs;
  // Low two limbs are enough to spread orbit values.
  for (std::size_t i = 0; i < std::min<std::size_t>(limbs, 2); ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace collatz
