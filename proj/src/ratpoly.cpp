#include "maxspread/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace maxspread {

RatPoly::RatPoly(long c) : c_{mpq_class(c)} { trim(); }

RatPoly::RatPoly(const mpq_class& c) : c_{c} { trim(); }

RatPoly RatPoly::from_coeffs(std::vector<mpq_class> coeffs) {
  RatPoly p;
  p.c_ = std::move(coeffs);
  for (auto& x : p.c_) x.canonicalize();
  p.trim();
  return p;
}

RatPoly RatPoly::monomial(const mpq_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("RatPoly::monomial: negative degree");
  RatPoly p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.c_.back() = c;
  p.trim();
  return p;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  mpq_class t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      r.c_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RatPoly RatPoly::rescale(const mpq_class& f) const {
  RatPoly r = *this;
  mpq_class pw = 1;
  for (auto& x : r.c_) {
    x *= pw;
    pw *= f;
  }
  r.trim();
  return r;
}

std::string RatPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::vector<std::string> RatPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.get_str());
  return out;
}

LaurentPoly::LaurentPoly(long c) { add_term(0, RatPoly(c)); }

LaurentPoly::LaurentPoly(const RatPoly& c) { add_term(0, c); }

LaurentPoly LaurentPoly::term(const RatPoly& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int e, const RatPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

RatPoly LaurentPoly::coeff(int exponent) const {
  auto it = t_.find(exponent);
  return it == t_.end() ? RatPoly{} : it->second;
}

int LaurentPoly::low() const {
  if (t_.empty()) throw std::logic_error("LaurentPoly::low on zero");
  return t_.begin()->first;
}

int LaurentPoly::high() const {
  if (t_.empty()) throw std::logic_error("LaurentPoly::high on zero");
  return t_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly operator*(LaurentPoly a, const mpq_class& s) {
  if (s == 0) return {};
  for (auto& [e, c] : a.t_) c *= s;
  return a;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

}  // namespace maxspread
