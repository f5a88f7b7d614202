#include "golomb/rational.hpp"

#include <cctype>

#include "golomb/error.hpp"

namespace golomb {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return std::string(text);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class num(strip_plus(num_text), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(den_text), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rat result(num, den);
  result.canonicalize();
  return result;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

mpz_class common_denominator(const RatVector& values) {
  mpz_class lcm = 1;
  for (const auto& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return lcm;
}

std::vector<mpz_class> primitive_integer_vector(const RatVector& values) {
  const mpz_class lcm = common_denominator(values);
  std::vector<mpz_class> out;
  out.reserve(values.size());
  mpz_class g = 0;
  for (const auto& v : values) {
    mpz_class scaled = v.get_num() * (lcm / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

}  // namespace golomb
