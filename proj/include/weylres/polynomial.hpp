#pragma once

// Sparse multivariate polynomials over Q with exact coefficients.
//
// Terms are kept in a map ordered by graded-lex exponent order, so two
// polynomials are equal iff their term maps are equal.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "group_table.hpp"
#include "rational.hpp"
#include "signed_permutation.hpp"

namespace weylres {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {
    require(num_vars >= 0, "negative variable count");
  }

  static Polynomial constant(int num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  // x_j, 1-based.
  static Polynomial x(int num_vars, int j) {
    require(j >= 1 && j <= num_vars, "variable index out of range");
    Exponent e(num_vars, 0);
    e[j - 1] = 1;
    Polynomial p(num_vars);
    p.add_term(e, 1);
    return p;
  }

  static Polynomial monomial(const Exponent& e, const Rational& c = 1) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
  }

  // Every variable appears to an even power in every term.
  bool all_exponents_even() const {
    for (const auto& [e, c] : terms_)
      for (int a : e)
        if (a % 2) return false;
    return true;
  }

  // Every term has even total degree, i.e. p(-x) = p(x).
  bool all_degrees_even() const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) % 2) return false;
    return true;
  }

  void add_term(const Exponent& e, const Rational& c) {
    require(static_cast<int>(e.size()) == num_vars_, "exponent length does not match");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) it->second.canonicalize();
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial out(a.num_vars_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    require(k >= 0, "negative power");
    Polynomial r = constant(num_vars_, 1), base = *this;
    while (k) {
      if (k & 1) r *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(std::span<const Rational> point) const {
    require(static_cast<int>(point.size()) == num_vars_, "evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < num_vars_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  // d/dx_j, 1-based.
  Polynomial partial(int j) const {
    require(j >= 1 && j <= num_vars_, "variable index out of range");
    Polynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[j - 1] == 0) continue;
      Exponent f = e;
      --f[j - 1];
      out.add_term(f, c * e[j - 1]);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool constant_term = total_degree(e) == 0;
      if (mag != 1 || constant_term) os << mag.get_str() << (constant_term ? "" : "*");
      bool first_var = true;
      for (int i = 0; i < num_vars_; ++i) {
        if (!e[i]) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_same(const Polynomial& o) const {
    require(num_vars_ == o.num_vars_, "polynomials live in different variable counts");
  }

  int num_vars_ = 0;
  TermMap terms_;
};

// (w . p)(x) = p(w^{-1} x). For a monomial prod x_i^{a_i} this sends the
// exponent of x_i to x_{perm(i)} and multiplies by prod sign_i^{a_i}.
inline Polynomial act(const SignedPermutation& w, const Polynomial& p) {
  require(w.size() == p.num_vars(), "group element and polynomial dimensions differ");
  Polynomial out(p.num_vars());
  Exponent f(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    int sign = 1;
    for (int i = 0; i < w.size(); ++i) {
      f[w.image(i)] = e[i];
      if (w.sign(i) < 0 && (e[i] & 1)) sign = -sign;
    }
    out.add_term(f, sign > 0 ? c : Rational(-c));
  }
  return out;
}

// Sets x_{m+1}, ..., x_s to zero and drops them.
inline Polynomial restrict_poly(const Polynomial& p, int m) {
  require(m >= 0 && m <= p.num_vars(), "restriction size out of range");
  Polynomial out(m);
  for (const auto& [e, c] : p.terms()) {
    if (std::any_of(e.begin() + m, e.end(), [](int a) { return a != 0; })) continue;
    out.add_term(Exponent(e.begin(), e.begin() + m), c);
  }
  return out;
}

// Views p as a polynomial in more variables (the new ones absent).
inline Polynomial embed_poly(const Polynomial& p, int num_vars) {
  require(num_vars >= p.num_vars(), "cannot embed into fewer variables");
  Polynomial out(num_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.resize(num_vars, 0);
    out.add_term(f, c);
  }
  return out;
}

// p(M y): x_j -> sum_i M[j][i] y_i, with M of size num_vars x new_vars.
inline Polynomial linear_substitute(const Polynomial& p, const std::vector<RationalVector>& m,
                                    int new_vars) {
  require(static_cast<int>(m.size()) == p.num_vars(), "substitution matrix has wrong row count");
  std::vector<Polynomial> images;
  for (const auto& row : m) {
    require(static_cast<int>(row.size()) == new_vars, "substitution matrix has wrong column count");
    Polynomial img(new_vars);
    for (int i = 0; i < new_vars; ++i) {
      Exponent e(new_vars, 0);
      e[i] = 1;
      img.add_term(e, row[i]);
    }
    images.push_back(img);
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t j, int k) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(new_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[j]);
    return cache[k];
  };
  Polynomial out(new_vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(new_vars, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) t *= power(j, e[j]);
    out += t;
  }
  return out;
}

// Canonical representative modulo x_1 + ... + x_s: substitute
// x_s := -(x_1 + ... + x_{s-1}). The result keeps s variables.
inline Polynomial reduce_trace_zero(const Polynomial& p) {
  const int s = p.num_vars();
  require(s >= 2, "trace reduction needs at least two variables");
  std::vector<RationalVector> m(s, RationalVector(s, 0));
  for (int j = 0; j + 1 < s; ++j) m[j][j] = 1;
  for (int i = 0; i + 1 < s; ++i) m[s - 1][i] = -1;
  return linear_substitute(p, m, s);
}

// (1/|g|) sum_w w . p, summed in table order.
inline Polynomial reynolds(const GroupTable& g, const Polynomial& p) {
  require(g.dim == p.num_vars(), "group and polynomial dimensions differ");
  Polynomial sum(p.num_vars());
  for (const auto& w : g.elements) sum += act(w, p);
  return sum * Rational(1, static_cast<unsigned long>(g.order()));
}

inline bool is_invariant(std::span<const SignedPermutation> elements, const Polynomial& p) {
  for (const auto& w : elements) {
    require(w.size() == p.num_vars(), "group and polynomial dimensions differ");
    if (!(act(w, p) == p)) return false;
  }
  return true;
}

// Checks the generators when the table has them; `full` forces every element.
inline bool is_invariant(const GroupTable& g, const Polynomial& p, bool full = false) {
  require(g.dim == p.num_vars(), "group and polynomial dimensions differ");
  const auto& set = (full || g.generators.empty()) ? g.elements : g.generators;
  return is_invariant(std::span<const SignedPermutation>(set), p);
}

inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json t{{"exp", it->first}};
    mpz_class num = it->second.get_num(), den = it->second.get_den();
    t["num"] = num.fits_slong_p() ? nlohmann::json(num.get_si()) : nlohmann::json(num.get_str());
    t["den"] = den.fits_slong_p() ? nlohmann::json(den.get_si()) : nlohmann::json(den.get_str());
    terms.push_back(t);
  }
  return {{"vars", p.num_vars()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    nlohmann::json r{{"num", t.at("num")}, {"den", t.at("den")}};
    p.add_term(t.at("exp").get<Exponent>(), rational_from_json(r));
  }
  return p;
}

}  // namespace weylres
