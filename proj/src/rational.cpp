#include "flatband/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flatband {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream)
    : rng_(derive_seed(seed, stream)) {}

Rational RationalSampler::any() {
  std::uniform_int_distribution<std::int64_t> num(-kNumeratorBound, kNumeratorBound);
  std::uniform_int_distribution<std::int64_t> den(1, kDenominatorBound);
  const std::int64_t p = num(rng_);
  const std::int64_t q = den(rng_);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

Rational RationalSampler::nonzero() {
  for (;;) {
    Rational r = any();
    if (r != 0) return r;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair; cheap and well mixed.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace flatband
