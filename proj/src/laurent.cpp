#include <motzeta/errors.hpp>
#include <motzeta/laurent.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace motzeta {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.second); });
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

int LaurentPoly::vdim() const {
  if (terms_.empty()) throw DomainError("vdim: undefined filtration level for the zero class");
  return terms_.back().first;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent: zero polynomial");
  return terms_.front().first;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(exponent, c));
  }
}

namespace {

// Merge two sorted term lists with sign on the right operand.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const auto& [me, mc] = mono.terms_[0];
    out.terms_.reserve(other.terms_.size());
    for (const auto& [e, c] : other.terms_) out.terms_.emplace_back(e + me, c * mc);
    return out;
  }
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly& LaurentPoly::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("LaurentPoly: division by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) {
    Rational s = 0;
    for (const auto& t : terms_) s += t.second;
    return LaurentPoly(s);
  }
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [e, c] : terms_) t.emplace_back(e * k, c);
  return from_terms(std::move(t));
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (terms_.empty()) return Rational(0);
  if (x == 0) {
    if (terms_.front().first < 0) throw DomainError("eval: pole at zero");
    return coeff(0);
  }
  // Horner over the dense exponent range, then rescale by x^lo.
  const int lo = terms_.front().first;
  const int hi = terms_.back().first;
  Rational acc = 0;
  auto it = terms_.rbegin();
  for (int e = hi; e >= lo; --e) {
    acc *= x;
    if (it != terms_.rend() && it->first == e) {
      acc += it->second;
      ++it;
    }
  }
  Rational scale = 1;
  const Rational base = lo < 0 ? Rational(1 / x) : x;
  for (int i = 0; i < std::abs(lo); ++i) scale *= base;
  return acc * scale;
}

double LaurentPoly::eval(double x) const {
  if (terms_.empty()) return 0.0;
  if (x == 0.0 && terms_.front().first < 0) throw DomainError("eval: pole at zero");
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += to_double(c) * std::pow(x, e);
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.str();
      continue;
    }
    if (mag != 1) os << mag.str() << '*';
    os << 'L';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    std::vector<LaurentPoly::Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term term(int sign) {
    Rational c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coeff = true;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        Rational d = number();
        if (d == 0) fail("zero denominator");
        c /= d;
        skip();
      }
      if (peek() == '*') {
        ++pos_;
        skip();
      } else if (peek() != 'L') {
        return {0, c * sign};
      }
    }
    if (peek() != 'L') fail(have_coeff ? "expected 'L' after '*'" : "expected coefficient or 'L'");
    ++pos_;
    skip();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      int esign = 1;
      if (peek() == '-') {
        esign = -1;
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      e = esign * static_cast<int>(number().convert_to<long long>());
    }
    return {e, c * sign};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Rational(BigInt(std::string(s_.substr(start, pos_ - start))));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("LaurentPoly::parse: " + why + " at column " + std::to_string(pos_ + 1) +
                     " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).run(); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly binomial(const LaurentPoly& x, unsigned n) {
  LaurentPoly out(1);
  Rational factorial = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= x - LaurentPoly(static_cast<long long>(i));
    factorial *= (i + 1);
  }
  return out / factorial;
}

LaurentPoly projective_class(int n) {
  std::vector<LaurentPoly::Term> t;
  for (int i = 0; i <= n; ++i) t.emplace_back(i, Rational(1));
  return LaurentPoly::from_terms(std::move(t));
}

}  // namespace motzeta
