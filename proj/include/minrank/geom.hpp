#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"
#include "minrank/poly.hpp"

namespace minrank {

struct PointConfig {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
};

struct SphereConfig {
  std::size_t dim = 0;
  std::vector<std::vector<double>> centers;
  std::vector<double> radii;
};

namespace detail {

inline void require_proper(const Coloring& c, const Graph& target,
                           const char* who) {
  if (c.n != target.n() || c.class_of.size() != target.n())
    throw std::invalid_argument(std::string(who) + ": coloring size mismatch");
  for (auto [i, j] : target.edges())
    if (c.class_of[i] == c.class_of[j])
      throw std::invalid_argument(std::string(who) + ": improper coloring at {" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  "}");
}

}  // namespace detail

// 0/1 fit from a proper coloring of the complement: M_{i,j} = 1 iff i and
// j share a color class.  Its rank equals the number of colors.
template <class D>
Matrix<D> fit_from_coloring(D dom, const Graph& g, const Coloring& coloring) {
  detail::require_proper(coloring, complement(g), "fit_from_coloring");
  Matrix<D> m(dom, g.n(), g.n());
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      if (coloring.class_of[i] == coloring.class_of[j]) m(i, j) = dom.one();
  return m;
}

struct OrthogonalRep {
  std::vector<std::vector<double>> vectors;  // one per vertex, in R^c
  Matrix<Rationals> gram;
};

// Vertex i maps to the standard basis vector of its clique-cover class;
// the Gram matrix is then an exact 0/1 fit of rank c.
inline OrthogonalRep orthogonal_rep_from_cover(const Graph& g,
                                               const Coloring& coloring) {
  detail::require_proper(coloring, complement(g), "orthogonal_rep_from_cover");
  OrthogonalRep rep{{}, fit_from_coloring(Rationals{}, g, coloring)};
  rep.vectors.reserve(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) {
    std::vector<double> v(coloring.num_colors, 0.0);
    v[coloring.class_of[i]] = 1.0;
    rep.vectors.push_back(std::move(v));
  }
  return rep;
}

// d vertices of a regular simplex of diameter 1 in R^{max(d-1,1)}:
// the origin plus the Cholesky rows of the Gram matrix with unit norms
// and pairwise inner products 1/2.
inline PointConfig regular_simplex(std::size_t d) {
  if (d < 1) throw std::invalid_argument("regular_simplex: d must be >= 1");
  const std::size_t dim = d >= 2 ? d - 1 : 1;
  PointConfig cfg{dim, {}};
  cfg.points.assign(d, std::vector<double>(dim, 0.0));
  // chol[i] = coordinates of point i+1; G_{ij} = (i==j ? 1 : 1/2)
  std::vector<std::vector<double>> chol(d >= 1 ? d - 1 : 0,
                                        std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < chol.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < j; ++t) dot += chol[i][t] * chol[j][t];
      chol[i][j] = (0.5 - dot) / chol[j][j];
    }
    double norm2 = 0.0;
    for (std::size_t t = 0; t < i; ++t) norm2 += chol[i][t] * chol[i][t];
    chol[i][i] = std::sqrt(1.0 - norm2);
    cfg.points[i + 1] = chol[i];
  }
  return cfg;
}

// Places each vertex on the simplex vertex of its color class; a proper
// coloring of G puts every edge at distance exactly 1.
inline PointConfig unit_distance_points(const Graph& g, const Coloring& coloring) {
  detail::require_proper(coloring, g, "unit_distance_points");
  PointConfig simplex = regular_simplex(std::max<std::size_t>(coloring.num_colors, 1));
  PointConfig cfg{simplex.dim, {}};
  cfg.points.reserve(g.n());
  for (std::size_t i = 0; i < g.n(); ++i)
    cfg.points.push_back(simplex.points[coloring.class_of[i]]);
  return cfg;
}

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
  return s;
}

inline double dist2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) s += (a[t] - b[t]) * (a[t] - b[t]);
  return s;
}

}  // namespace detail

struct UnitDistanceMatrices {
  Matrix<Reals> m;       // 1 - ||u_i - u_j||^2
  Matrix<Reals> a;       // 1 - ||u_i||^2          (rank <= 1)
  Matrix<Reals> b;       // -||u_j||^2             (rank <= 1)
  Matrix<Reals> c;       // 2 u_i . u_j            (rank <= d)
};

inline UnitDistanceMatrices unit_distance_matrix(const PointConfig& pts) {
  const std::size_t n = pts.points.size();
  Reals dom;
  UnitDistanceMatrices out{Matrix<Reals>(dom, n, n), Matrix<Reals>(dom, n, n),
                           Matrix<Reals>(dom, n, n), Matrix<Reals>(dom, n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.m(i, j) = 1.0 - detail::dist2(pts.points[i], pts.points[j]);
      out.a(i, j) = 1.0 - detail::dot(pts.points[i], pts.points[i]);
      out.b(i, j) = -detail::dot(pts.points[j], pts.points[j]);
      out.c(i, j) = 2.0 * detail::dot(pts.points[i], pts.points[j]);
    }
  return out;
}

// Exact-rational route for the same construction, free of tolerances.
inline Matrix<Rationals> unit_distance_matrix_exact(
    const std::vector<std::vector<mpq_class>>& pts) {
  Rationals dom;
  const std::size_t n = pts.size();
  Matrix<Rationals> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class d2 = 0;
      for (std::size_t t = 0; t < pts[i].size(); ++t) {
        mpq_class diff = pts[i][t] - pts[j][t];
        d2 += diff * diff;
      }
      m(i, j) = 1 - d2;
    }
  return m;
}

struct TouchingSpheresMatrices {
  Matrix<Reals> m;   // (r_i + r_j)^2 - ||u_i - u_j||^2
  Matrix<Reals> p1;  // r_i^2 - ||u_i||^2   (rank <= 1)
  Matrix<Reals> p2;  // r_j^2 - ||u_j||^2   (rank <= 1)
  Matrix<Reals> p3;  // 2 r_i r_j           (rank <= 1)
  Matrix<Reals> p4;  // 2 u_i . u_j         (rank <= d)
};

inline TouchingSpheresMatrices touching_spheres_matrix(const SphereConfig& cfg) {
  const std::size_t n = cfg.centers.size();
  if (cfg.radii.size() != n)
    throw std::invalid_argument("touching_spheres_matrix: size mismatch");
  for (double r : cfg.radii)
    if (!(r > 0.0))
      throw std::invalid_argument("touching_spheres_matrix: radii must be > 0");
  Reals dom;
  TouchingSpheresMatrices out{Matrix<Reals>(dom, n, n), Matrix<Reals>(dom, n, n),
                              Matrix<Reals>(dom, n, n), Matrix<Reals>(dom, n, n),
                              Matrix<Reals>(dom, n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double rr = cfg.radii[i] + cfg.radii[j];
      out.m(i, j) = rr * rr - detail::dist2(cfg.centers[i], cfg.centers[j]);
      out.p1(i, j) = cfg.radii[i] * cfg.radii[i] -
                     detail::dot(cfg.centers[i], cfg.centers[i]);
      out.p2(i, j) = cfg.radii[j] * cfg.radii[j] -
                     detail::dot(cfg.centers[j], cfg.centers[j]);
      out.p3(i, j) = 2.0 * cfg.radii[i] * cfg.radii[j];
      out.p4(i, j) = 2.0 * detail::dot(cfg.centers[i], cfg.centers[j]);
    }
  return out;
}

inline Matrix<Rationals> touching_spheres_matrix_exact(
    const std::vector<std::vector<mpq_class>>& centers,
    const std::vector<mpq_class>& radii) {
  Rationals dom;
  const std::size_t n = centers.size();
  if (radii.size() != n)
    throw std::invalid_argument("touching_spheres_matrix_exact: size mismatch");
  Matrix<Rationals> m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class rr = radii[i] + radii[j];
      mpq_class d2 = 0;
      for (std::size_t t = 0; t < centers[i].size(); ++t) {
        mpq_class diff = centers[i][t] - centers[j][t];
        d2 += diff * diff;
      }
      m(i, j) = rr * rr - d2;
    }
  return m;
}

// Factorization of a symmetric degree-<=3 polynomial P(x,y) in 2d
// variables as <F(x), H(y)>, giving the P-graph rank bound.  The stated
// form c + sum x_i f_i(y) + sum y_j h_j(x) cannot absorb pure-x monomials
// of degree >= 2; those go to one extra symmetric coordinate g.
template <class D>
struct BilinearFactorization {
  std::size_t d = 0;
  std::size_t length = 0;                  // L <= 2d+2; <= 2d+1 when g == 0
  std::vector<MultiPoly<D>> f_coords;      // F(x), polynomials in d variables
  std::vector<MultiPoly<D>> h_coords;      // H(y), polynomials in d variables
  MultiPoly<D> pure_part;                  // g
  typename D::Scalar constant;             // c
};

namespace detail {

// Embeds a d-variable polynomial into 2d variables as the x-block (0..d-1)
// or the y-block (d..2d-1).
inline std::vector<std::size_t> x_block_map(std::size_t d) {
  std::vector<std::size_t> m(d);
  for (std::size_t i = 0; i < d; ++i) m[i] = i;
  return m;
}

inline std::vector<std::size_t> y_block_map(std::size_t d) {
  std::vector<std::size_t> m(d);
  for (std::size_t i = 0; i < d; ++i) m[i] = d + i;
  return m;
}

}  // namespace detail

template <class D>
BilinearFactorization<D> pgraph_factorize(const MultiPoly<D>& p, std::size_t d) {
  const D& dom = p.domain();
  if (p.num_vars() != 2 * d)
    throw std::invalid_argument("pgraph_factorize: expected 2d variables");
  if (p.total_degree() > 3)
    throw std::invalid_argument("pgraph_factorize: degree too high");

  // x-block: vars 0..d-1, y-block: vars d..2d-1
  std::vector<std::size_t> swap_map(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    swap_map[i] = d + i;
    swap_map[d + i] = i;
  }
  if (!(p.rename_vars(2 * d, swap_map) == p))
    throw std::invalid_argument("pgraph_factorize: not symmetric");

  auto c = dom.zero();
  MultiPoly<D> g(dom, d), gy(dom, d);
  std::vector<MultiPoly<D>> f(d, MultiPoly<D>(dom, d));
  std::vector<MultiPoly<D>> h(d, MultiPoly<D>(dom, d));

  for (const auto& [e, coef] : p.terms()) {
    unsigned xdeg = 0, ydeg = 0;
    for (std::size_t i = 0; i < d; ++i) {
      xdeg += e[i];
      ydeg += e[d + i];
    }
    typename MultiPoly<D>::Exponents xpart(d, 0), ypart(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      xpart[i] = e[i];
      ypart[i] = e[d + i];
    }
    if (xdeg == 0 && ydeg == 0) {
      c = dom.add(c, coef);
    } else if (xdeg == 1) {
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      f[i].add_term(ypart, coef);
    } else if (ydeg == 1) {
      std::size_t j = 0;
      while (e[d + j] == 0) ++j;
      h[j].add_term(xpart, coef);
    } else if (ydeg == 0) {
      g.add_term(xpart, coef);
    } else if (xdeg == 0) {
      gy.add_term(ypart, coef);
    } else {
      throw std::invalid_argument("pgraph_factorize: degree too high");
    }
  }
  if (!(gy == g))
    throw std::logic_error("pgraph_factorize: pure parts disagree");

  BilinearFactorization<D> fact{d, 0, {}, {}, g, c};
  auto one = MultiPoly<D>::constant(dom, d, dom.one());
  auto cpoly = MultiPoly<D>::constant(dom, d, c);
  if (!g.is_zero()) {
    fact.f_coords.push_back(one);
    fact.h_coords.push_back(cpoly + g);
    fact.f_coords.push_back(g);
    fact.h_coords.push_back(one);
  } else {
    fact.f_coords.push_back(one);
    fact.h_coords.push_back(cpoly);
  }
  for (std::size_t i = 0; i < d; ++i) {
    fact.f_coords.push_back(MultiPoly<D>::variable(dom, d, i));
    fact.h_coords.push_back(f[i]);
  }
  for (std::size_t j = 0; j < d; ++j) {
    fact.f_coords.push_back(h[j]);
    fact.h_coords.push_back(MultiPoly<D>::variable(dom, d, j));
  }
  // Drop coordinate pairs that contribute nothing.
  for (std::size_t t = fact.f_coords.size(); t-- > 0;) {
    if (fact.f_coords[t].is_zero() || fact.h_coords[t].is_zero()) {
      fact.f_coords.erase(fact.f_coords.begin() + long(t));
      fact.h_coords.erase(fact.h_coords.begin() + long(t));
    }
  }
  fact.length = fact.f_coords.size();

  // Exact polynomial identity <F(x), H(y)> == P(x, y).
  MultiPoly<D> q(dom, 2 * d);
  for (std::size_t t = 0; t < fact.length; ++t)
    q += fact.f_coords[t].rename_vars(2 * d, detail::x_block_map(d)) *
         fact.h_coords[t].rename_vars(2 * d, detail::y_block_map(d));
  if (!(q == p))
    throw std::logic_error("pgraph_factorize: identity verification failed");
  return fact;
}

// M_{i,j} = <F(x^{(i)}), H(x^{(j)})> = P(x^{(i)}, x^{(j)}), exactly.
template <class D>
Matrix<D> pgraph_matrix(const BilinearFactorization<D>& fact,
                        const std::vector<std::vector<typename D::Scalar>>& reps) {
  const D& dom = fact.pure_part.domain();
  const std::size_t n = reps.size();
  for (const auto& r : reps)
    if (r.size() != fact.d)
      throw std::invalid_argument("pgraph_matrix: rep arity mismatch");
  Matrix<D> m(dom, n, n);
  // Evaluate the coordinate vectors once per representative.
  std::vector<std::vector<typename D::Scalar>> fv(n), hv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < fact.length; ++t) {
      fv[i].push_back(fact.f_coords[t].eval(reps[i]));
      hv[i].push_back(fact.h_coords[t].eval(reps[i]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto acc = dom.zero();
      for (std::size_t t = 0; t < fact.length; ++t)
        acc = dom.add(acc, dom.mul(fv[i][t], hv[j][t]));
      m(i, j) = acc;
    }
  return m;
}

}  // namespace minrank
