#include "biuniv/phi.hpp"

#include <cctype>
#include <stdexcept>

namespace biuniv {

const Rat PhiSpec::zero_{0};

PhiSpec::PhiSpec(std::vector<Rat> b, std::string label)
    : b_(std::move(b)), label_(std::move(label)) {
  if (b_.empty()) throw std::invalid_argument("PhiSpec: empty coefficient sequence");
  if (b_[0] <= 0) throw std::invalid_argument("PhiSpec: B1 must be positive");
}

const Rat& PhiSpec::bk(int k) const {
  if (k < 1) throw std::out_of_range("PhiSpec::bk: k must be >= 1");
  return k <= stored() ? b_[static_cast<size_t>(k - 1)] : zero_;
}

QSeries PhiSpec::series_exact(int order) const {
  QSeries s(order);
  s.set(0, RatC(1));
  for (int k = 1; k <= order; ++k) s.set(k, RatC(bk(k)));
  return s;
}

DSeries PhiSpec::series(int order) const { return to_double_series(series_exact(order)); }

namespace {

constexpr int kFamilyOrder = 32;

std::vector<Rat> real_prefix(const QSeries& s, int count) {
  std::vector<Rat> b;
  b.reserve(static_cast<size_t>(count));
  for (int k = 1; k <= count; ++k) b.push_back(s[k].re);
  return b;
}

}  // namespace

PhiSpec power_alpha(const Rat& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw std::invalid_argument("power_alpha: alpha must lie in (0, 1]");
  QSeries num(kFamilyOrder), den(kFamilyOrder);
  num.set(0, RatC(1));
  num.set(1, RatC(1));
  den.set(0, RatC(1));
  den.set(1, RatC(-1));
  QSeries base = mul(num, reciprocal(den));
  QSeries s = pow_fractional(base, alpha);
  return PhiSpec(real_prefix(s, kFamilyOrder), "power:" + rat_to_string(alpha));
}

PhiSpec mobius_beta(const Rat& beta) {
  if (beta < 0 || beta >= 1)
    throw std::invalid_argument("mobius_beta: beta must lie in [0, 1)");
  QSeries num(kFamilyOrder), den(kFamilyOrder);
  num.set(0, RatC(1));
  num.set(1, RatC(1 - 2 * beta));
  den.set(0, RatC(1));
  den.set(1, RatC(-1));
  QSeries s = mul(num, reciprocal(den));
  return PhiSpec(real_prefix(s, kFamilyOrder), "mobius:" + rat_to_string(beta));
}

PhiSpec custom_phi(std::vector<Rat> coeffs) {
  return PhiSpec(std::move(coeffs), "custom");
}

PhiSpec power_alpha_conjugate(const Rat& alpha) {
  PhiSpec base = power_alpha(alpha);
  std::vector<Rat> b;
  for (int k = 1; k <= base.stored(); ++k) b.push_back(base.bk(k));
  return PhiSpec(std::move(b), "power-conj:" + rat_to_string(alpha));
}

PhiSpec mobius_beta_conjugate(const Rat& beta) {
  PhiSpec base = mobius_beta(beta);
  std::vector<Rat> b;
  for (int k = 1; k <= base.stored(); ++k) b.push_back(base.bk(k));
  return PhiSpec(std::move(b), "mobius-conj:" + rat_to_string(beta));
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  if (text.find('/') != std::string::npos) return rat_from_string(text);
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';
  Rat value{0};
  Rat scale{1};
  bool seen_digit = false, seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad numeric literal: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      value = value * 10 + (c - '0');
      if (seen_dot) scale *= 10;
    } else {
      throw std::invalid_argument("bad numeric literal: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad numeric literal: " + text);
  value /= scale;
  return neg ? -value : value;
}

PhiSpec parse_phi(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("phi spec must look like power:A, mobius:B, or custom:B1,B2,...");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "power") return power_alpha(parse_rat(rest));
  if (kind == "mobius") return mobius_beta(parse_rat(rest));
  if (kind == "power-conj") return power_alpha_conjugate(parse_rat(rest));
  if (kind == "mobius-conj") return mobius_beta_conjugate(parse_rat(rest));
  if (kind == "custom") {
    std::vector<Rat> b;
    size_t start = 0;
    while (start <= rest.size()) {
      size_t comma = rest.find(',', start);
      std::string item =
          comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
      b.push_back(parse_rat(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (b.size() < 2) throw std::invalid_argument("custom phi needs at least B1,B2");
    return custom_phi(std::move(b));
  }
  throw std::invalid_argument("unknown phi family: " + kind);
}

}  // namespace biuniv
