#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "minrank/scalar.hpp"

namespace minrank {

// Sparse multivariate polynomial with exact coefficients; zero
// coefficients are never stored.
template <class D>
class MultiPoly {
 public:
  using Scalar = typename D::Scalar;
  using Exponents = std::vector<unsigned>;

  MultiPoly(D dom, std::size_t num_vars)
      : dom_(std::move(dom)), num_vars_(num_vars) {}

  static MultiPoly constant(D dom, std::size_t num_vars, Scalar c) {
    MultiPoly p(std::move(dom), num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
  }

  static MultiPoly variable(D dom, std::size_t num_vars, std::size_t idx) {
    MultiPoly p(dom, num_vars);
    Exponents e(num_vars, 0);
    e.at(idx) = 1;
    p.add_term(e, dom.one());
    return p;
  }

  const D& domain() const { return dom_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != num_vars_)
      throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!dom_.is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second = dom_.add(it->second, c);
      if (dom_.is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, dom_.neg(c));
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compat(b);
    MultiPoly r(a.dom_, a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.num_vars_);
        for (std::size_t i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, a.dom_.mul(ca, cb));
      }
    return r;
  }

  MultiPoly scaled(const Scalar& c) const {
    MultiPoly r(dom_, num_vars_);
    for (const auto& [e, t] : terms_) r.add_term(e, dom_.mul(t, c));
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_ || !(dom_ == o.dom_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
      auto it = o.terms_.find(e);
      if (it == o.terms_.end() || !dom_.eq(c, it->second)) return false;
    }
    return true;
  }

  Scalar eval(const std::vector<Scalar>& point) const {
    if (point.size() != num_vars_)
      throw std::invalid_argument("MultiPoly: point arity mismatch");
    Scalar acc = dom_.zero();
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < num_vars_; ++i)
        for (unsigned r = 0; r < e[i]; ++r) t = dom_.mul(t, point[i]);
      acc = dom_.add(acc, t);
    }
    return acc;
  }

  // Substitutes variables by index map: new poly in new_vars variables
  // with variable i renamed to var_map[i].
  MultiPoly rename_vars(std::size_t new_vars,
                        const std::vector<std::size_t>& var_map) const {
    MultiPoly r(dom_, new_vars);
    for (const auto& [e, c] : terms_) {
      Exponents ne(new_vars, 0);
      for (std::size_t i = 0; i < num_vars_; ++i) {
        if (e[i] == 0) continue;
        ne.at(var_map.at(i)) += e[i];
      }
      r.add_term(ne, c);
    }
    return r;
  }

 private:
  void check_compat(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_ || !(dom_ == o.dom_))
      throw std::invalid_argument("MultiPoly: incompatible operands");
  }

  D dom_;
  std::size_t num_vars_;
  std::map<Exponents, Scalar> terms_;
};

template <class D>
typename D::Scalar poly_eval(const MultiPoly<D>& p,
                             const std::vector<typename D::Scalar>& point) {
  return p.eval(point);
}

}  // namespace minrank
