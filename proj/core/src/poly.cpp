#include "pncube/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pncube {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial evaluation overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial evaluation overflow");
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

void normalize_powers(Monomial& mono) {
  std::sort(mono.powers.begin(), mono.powers.end(), [](const auto& a, const auto& b) {
    return shortlex_less(a.first, b.first);
  });
  std::vector<std::pair<std::string, std::int64_t>> merged;
  for (auto& [name, e] : mono.powers) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == name) {
      merged.back().second += e;
    } else {
      merged.emplace_back(std::move(name), e);
    }
  }
  mono.powers = std::move(merged);
}

}  // namespace

FlowPolynomial::FlowPolynomial(std::vector<Monomial> monomials) {
  for (auto& mono : monomials) add_monomial(std::move(mono));
}

FlowPolynomial FlowPolynomial::constant(std::int64_t c) {
  FlowPolynomial p;
  if (c != 0) p.add_monomial(Monomial{c, {}});
  return p;
}

FlowPolynomial FlowPolynomial::variable(const std::string& place) {
  FlowPolynomial p;
  p.add_monomial(Monomial{1, {{place, 1}}});
  return p;
}

bool FlowPolynomial::is_constant() const {
  return monomials_.empty() || (monomials_.size() == 1 && monomials_[0].powers.empty());
}

std::int64_t FlowPolynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return monomials_.empty() ? 0 : monomials_[0].coeff;
}

std::int64_t FlowPolynomial::eval(const Marking& m) const {
  std::int64_t sum = 0;
  for (const auto& mono : monomials_) {
    std::int64_t term = mono.coeff;
    for (const auto& [place, exp] : mono.powers) {
      term = checked_mul(term, checked_pow(m.count(place), exp));
    }
    sum = checked_add(sum, term);
  }
  return sum;
}

void FlowPolynomial::add_monomial(Monomial mono) {
  if (mono.coeff < 0) throw std::invalid_argument("negative coefficient in monomial");
  if (mono.coeff == 0) return;
  normalize_powers(mono);
  auto it = std::lower_bound(
      monomials_.begin(), monomials_.end(), mono,
      [](const Monomial& a, const Monomial& b) { return a.powers < b.powers; });
  if (it != monomials_.end() && it->powers == mono.powers) {
    it->coeff = checked_add(it->coeff, mono.coeff);
  } else {
    monomials_.insert(it, std::move(mono));
  }
}

FlowPolynomial& FlowPolynomial::operator+=(const FlowPolynomial& other) {
  for (const auto& mono : other.monomials_) add_monomial(mono);
  return *this;
}

std::vector<std::string> FlowPolynomial::variables() const {
  std::vector<std::string> vars;
  for (const auto& mono : monomials_) {
    for (const auto& [place, _] : mono.powers) vars.push_back(place);
  }
  std::sort(vars.begin(), vars.end(), ShortlexLess{});
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string FlowPolynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const auto& mono : monomials_) {
    if (!out.empty()) out += " + ";
    bool need_coeff = mono.coeff != 1 || mono.powers.empty();
    if (need_coeff) out += std::to_string(mono.coeff);
    bool first = !need_coeff;
    for (const auto& [place, exp] : mono.powers) {
      for (std::int64_t i = 0; i < exp; ++i) {
        if (!first || need_coeff) out += '*';
        out += place;
        first = false;
        need_coeff = false;
      }
    }
  }
  return out;
}

std::int64_t eval_poly(const FlowPolynomial& p, const Marking& m) { return p.eval(m); }

}  // namespace pncube
