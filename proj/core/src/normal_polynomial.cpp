#include "ptwitness/normal_polynomial.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ptwitness/errors.hpp"

namespace ptwitness {

namespace {

void check_index(const MultiIndex& u) {
  if (!u.valid())
    throw std::invalid_argument("NormalPolynomial: negative exponent in index");
  if (u.degree() > kMaxMonomialDegree)
    throw degree_error("NormalPolynomial: monomial degree " +
                       std::to_string(u.degree()) + " exceeds the supported " +
                       std::to_string(kMaxMonomialDegree));
}

// Coefficients C_j of a^n ad^m = sum_j C_j ad^(m-j) a^(n-j). Running-product
// recurrence C_{j+1} = C_j (n-j)(m-j)/(j+1), C_0 = 1; exact in doubles for
// n + m <= kMaxMonomialDegree.
std::vector<double> antinormal_coeffs(int n, int m) {
  const int jmax = std::min(n, m);
  std::vector<double> c(static_cast<std::size_t>(jmax) + 1);
  c[0] = 1.0;
  for (int j = 0; j < jmax; ++j)
    c[static_cast<std::size_t>(j) + 1] =
        c[static_cast<std::size_t>(j)] * double(n - j) * double(m - j) / double(j + 1);
  return c;
}

}  // namespace

NormalPolynomial NormalPolynomial::identity(Complex coeff) {
  return monomial(MultiIndex{}, coeff);
}

NormalPolynomial NormalPolynomial::monomial(const MultiIndex& u, Complex coeff) {
  check_index(u);
  NormalPolynomial p;
  if (coeff != Complex{}) p.terms_.emplace(u, coeff);
  return p;
}

int NormalPolynomial::degree() const noexcept {
  if (terms_.empty()) return 0;
  // Map order is degree-major, so the last term carries the max degree.
  return terms_.rbegin()->first.degree();
}

Complex NormalPolynomial::coefficient(const MultiIndex& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Complex{} : it->second;
}

void NormalPolynomial::add_term(const MultiIndex& u, Complex coeff) {
  check_index(u);
  auto [it, inserted] = terms_.try_emplace(u, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == Complex{}) terms_.erase(it);
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& rhs) {
  for (const auto& [u, c] : rhs.terms_) add_term(u, c);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& rhs) {
  for (const auto& [u, c] : rhs.terms_) add_term(u, -c);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [u, c] : terms_) c *= scale;
  return *this;
}

NormalPolynomial operator+(NormalPolynomial lhs, const NormalPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

NormalPolynomial operator-(NormalPolynomial lhs, const NormalPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

NormalPolynomial operator*(NormalPolynomial p, Complex scale) {
  p *= scale;
  return p;
}

NormalPolynomial operator*(Complex scale, NormalPolynomial p) {
  p *= scale;
  return p;
}

NormalPolynomial antinormal_to_normal(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("antinormal_to_normal: negative exponent");
  if (n + m > kMaxMonomialDegree)
    throw degree_error("antinormal_to_normal: degree " + std::to_string(n + m) +
                       " exceeds the supported " + std::to_string(kMaxMonomialDegree));
  NormalPolynomial out;
  const auto coeffs = antinormal_coeffs(n, m);
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
    out.add_term({m - j, n - j, 0, 0}, coeffs[static_cast<std::size_t>(j)]);
  return out;
}

NormalPolynomial multiply(const NormalPolynomial& p, const NormalPolynomial& q) {
  NormalPolynomial out;
  for (const auto& [u, cu] : p.terms()) {
    for (const auto& [v, cv] : q.terms()) {
      if (u.degree() + v.degree() > kMaxMonomialDegree)
        throw degree_error("multiply: product of " + to_string(u) + " and " +
                           to_string(v) + " exceeds degree " +
                           std::to_string(kMaxMonomialDegree));
      // Modes commute; only a^m · ad^n (per mode) needs reordering.
      const auto ca = antinormal_coeffs(u.m, v.n);
      const auto cb = antinormal_coeffs(u.l, v.k);
      const Complex cuv = cu * cv;
      for (int j = 0; j < static_cast<int>(ca.size()); ++j) {
        for (int i = 0; i < static_cast<int>(cb.size()); ++i) {
          const MultiIndex w{u.n + v.n - j, u.m + v.m - j, u.k + v.k - i,
                             u.l + v.l - i};
          out.add_term(w, cuv * ca[static_cast<std::size_t>(j)] *
                              cb[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
  return out;
}

NormalPolynomial adjoint(const NormalPolynomial& p) {
  NormalPolynomial out;
  for (const auto& [u, c] : p.terms()) out.add_term(u.adjoint(), std::conj(c));
  return out;
}

NormalPolynomial pt_transform(const NormalPolynomial& p) {
  NormalPolynomial out;
  for (const auto& [u, c] : p.terms()) out.add_term(u.pt(), c);
  return out;
}

std::string to_string(const NormalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  char buf[64];
  for (const auto& [u, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", c.real(), c.imag());
    s += buf;
    if (u.degree() == 0) continue;
    std::string factors;
    auto factor = [&factors](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += ' ';
      factors += name;
      factors += '^';
      factors += std::to_string(e);
    };
    factor("ad", u.n);
    factor("a", u.m);
    factor("bd", u.k);
    factor("b", u.l);
    s += "\xc2\xb7";  // '·'
    s += factors;
  }
  return s;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument("parse_polynomial: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
  }
  double number() {
    skip_ws();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("parse_polynomial: expected a number");
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      // must not be a prefix of a longer name ("a" vs "ad")
      const std::size_t next = pos + w.size();
      if (next < text.size() && (std::isalpha(static_cast<unsigned char>(text[next]))))
        return false;
      pos = next;
      return true;
    }
    return false;
  }
};

}  // namespace

NormalPolynomial parse_polynomial(std::string_view text) {
  Cursor c{text};
  NormalPolynomial out;
  if (c.done()) throw std::invalid_argument("parse_polynomial: empty input");
  if (c.accept('0')) {
    if (!c.done()) throw std::invalid_argument("parse_polynomial: trailing input after 0");
    return out;
  }
  bool first = true;
  while (true) {
    if (!first) {
      if (c.done()) break;
      c.expect('+');
    }
    first = false;
    c.expect('(');
    const double re = c.number();
    c.expect(',');
    const double im = c.number();
    c.expect(')');
    // optional separator before the factor list
    c.skip_ws();
    if (c.text.substr(c.pos, 2) == "\xc2\xb7")
      c.pos += 2;
    else
      c.accept('*');
    MultiIndex u;
    auto exponent = [&c]() {
      if (!c.accept('^')) return 1;
      const double e = c.number();
      if (e < 0 || e != static_cast<int>(e))
        throw std::invalid_argument("parse_polynomial: bad exponent");
      return static_cast<int>(e);
    };
    while (true) {
      // "ad"/"bd" must be tried before "a"/"b"
      if (c.accept_word("ad")) {
        u.n += exponent();
      } else if (c.accept_word("bd")) {
        u.k += exponent();
      } else if (c.accept_word("a")) {
        u.m += exponent();
      } else if (c.accept_word("b")) {
        u.l += exponent();
      } else {
        break;
      }
    }
    out.add_term(u, Complex{re, im});
    if (c.done()) break;
  }
  return out;
}

}  // namespace ptwitness
