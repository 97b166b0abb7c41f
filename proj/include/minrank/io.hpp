#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minrank/experiment.hpp"
#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"
#include "minrank/poly.hpp"

namespace minrank {

using json = nlohmann::json;

// ---- Graph: {"n":5,"edges":[[0,1],[1,2]]}, i<j, lexicographic ----

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return json{{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON: missing n or edges");
  Graph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: bad edge");
    std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
    if (a >= b) throw std::invalid_argument("graph JSON: edges must have i<j");
    g.add_edge(a, b);
  }
  return g;
}

// ---- Matrix: {"domain":"gf:2"|"rational"|"float","rows":[[...]]} ----

using MatrixVariant = std::variant<Matrix<GF>, Matrix<Rationals>, Matrix<Reals>>;

inline json matrix_to_json(const Matrix<GF>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return json{{"domain", "gf:" + std::to_string(m.domain().q)}, {"rows", rows}};
}

inline json matrix_to_json(const Matrix<Rationals>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return json{{"domain", "rational"}, {"rows", rows}};
}

inline json matrix_to_json(const Matrix<Reals>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return json{{"domain", "float"}, {"rows", rows}};
}

inline json matrix_to_json(const MatrixVariant& m) {
  return std::visit([](const auto& mm) { return matrix_to_json(mm); }, m);
}

inline mpq_class rational_from_json(const json& v) {
  mpq_class r;
  if (v.is_string()) {
    if (mpq_set_str(r.get_mpq_t(), v.get<std::string>().c_str(), 10) != 0)
      throw std::invalid_argument("matrix JSON: bad rational " +
                                  v.get<std::string>());
    r.canonicalize();
  } else if (v.is_number_integer()) {
    r = mpq_class(v.get<long>());
  } else {
    throw std::invalid_argument("matrix JSON: rational must be string or int");
  }
  return r;
}

inline MatrixVariant matrix_from_json(const json& j) {
  if (!j.contains("domain") || !j.contains("rows"))
    throw std::invalid_argument("matrix JSON: missing domain or rows");
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("matrix JSON: rows must be a nonempty array");
  const std::size_t nr = rows.size();
  const std::size_t nc = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != nc) throw std::invalid_argument("matrix JSON: ragged rows");

  const std::string dom = j.at("domain").get<std::string>();
  if (dom.rfind("gf:", 0) == 0) {
    std::uint32_t q = static_cast<std::uint32_t>(std::stoul(dom.substr(3)));
    Matrix<GF> m(GF(q), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t jj = 0; jj < nc; ++jj) {
        long v = rows[i][jj].get<long>();
        if (v < 0 || std::uint64_t(v) >= q)
          throw std::invalid_argument("matrix JSON: residue out of [0,q)");
        m(i, jj) = static_cast<std::uint32_t>(v);
      }
    return m;
  }
  if (dom == "rational") {
    Matrix<Rationals> m(Rationals{}, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t jj = 0; jj < nc; ++jj)
        m(i, jj) = rational_from_json(rows[i][jj]);
    return m;
  }
  if (dom == "float") {
    Matrix<Reals> m(Reals{}, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t jj = 0; jj < nc; ++jj) m(i, jj) = rows[i][jj].get<double>();
    return m;
  }
  throw std::invalid_argument("matrix JSON: unknown domain " + dom);
}

// ---- MultiPoly: {"num_vars":N,"terms":[{"exps":[...],"coef":...}]} ----

inline json poly_to_json(const MultiPoly<Rationals>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exps", e}, {"coef", c.get_str()}});
  return json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline json poly_to_json(const MultiPoly<GF>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exps", e}, {"coef", c}});
  return json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline MultiPoly<Rationals> poly_from_json_rational(const json& j) {
  MultiPoly<Rationals> p(Rationals{}, j.at("num_vars").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<std::vector<unsigned>>(),
               rational_from_json(t.at("coef")));
  return p;
}

inline MultiPoly<GF> poly_from_json_gf(const json& j, std::uint32_t q) {
  GF gf(q);
  MultiPoly<GF> p(gf, j.at("num_vars").get<std::size_t>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<std::vector<unsigned>>(),
               gf.from_int(t.at("coef").get<long>()));
  return p;
}

// ---- Certificate bundle consumed by the `verify` subcommand ----

inline json certificate_to_json(const Graph& g, const MatrixVariant& m,
                                std::size_t claimed) {
  json mj = matrix_to_json(m);
  return json{{"graph", graph_to_json(g)},
              {"matrix", mj},
              {"claimed_rank", claimed},
              {"field", mj.at("domain")}};
}

// ---- Experiment report ----

inline json report_to_json(const ExperimentReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(json{{"n", r.n},
                        {"p", r.p},
                        {"seed", r.seed},
                        {"trial", r.trial},
                        {"alpha", r.alpha},
                        {"cc", r.cc},
                        {"cc_mode", r.cc_mode},
                        {"minrank_lo", r.minrank_lo},
                        {"minrank_hi", r.minrank_hi},
                        {"status", r.status},
                        {"theory_lower", r.theory_lower},
                        {"reference_scale", r.reference_scale},
                        {"ratio", r.ratio}});
  }
  return json{{"schema", "minrank-report/1"}, {"rows", rows}};
}

}  // namespace minrank
