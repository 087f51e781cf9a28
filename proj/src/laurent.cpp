#include "mosaic/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace mosaic {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coef_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coef_.push_back(coeff);
  }
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coef_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coef_[i]);
  return out;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coef_.begin(), coef_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coef_.end()) {
    coef_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coef_.begin());
  coef_.erase(coef_.begin(), first);
  while (coef_.back() == 0) coef_.pop_back();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  std::vector<std::int64_t> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] += coef_[i];
  for (std::size_t i = 0; i < o.coef_.size(); ++i) sum[static_cast<std::size_t>(o.low_ - lo) + i] += o.coef_[i];
  low_ = lo;
  coef_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  std::vector<std::int64_t> prod(coef_.size() + o.coef_.size() - 1, 0);
  for (std::size_t i = 0; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < o.coef_.size(); ++j) prod[i + j] += coef_[i] * o.coef_[j];
  low_ += o.low_;
  coef_ = std::move(prod);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coef_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted() const { return substituted_power(-1); }

LaurentPoly LaurentPoly::substituted_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitution exponent must be nonzero");
  LaurentPoly out;
  for (auto [e, c] : terms()) out += monomial(c, e * k);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (std::int64_t c : coef_) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace mosaic
