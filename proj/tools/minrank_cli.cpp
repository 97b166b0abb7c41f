// Command-line surface for the minrank laboratory: graph generation,
// exact solving with certificates, certificate verification, bound
// evaluation, zero-pattern tooling, geometric constructions, and the
// Monte Carlo experiment harness.
//
// Exit codes: 0 success, 1 invalid input, 2 resource/budget limit,
// 3 verification failure or counterexample anomaly.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minrank/io.hpp"
#include "minrank/minrank.hpp"

namespace {

using namespace minrank;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + out_path);
    out << text;
  }
}

int cmd_gen(std::size_t n, double p, std::uint64_t seed, const std::string& out) {
  Graph g = gnp(n, p, seed);
  write_output(out, graph_to_json(g).dump(2));
  return 0;
}

int cmd_minrank(const std::string& in, std::uint32_t q, std::uint64_t budget,
                std::size_t limit, const std::string& out) {
  Graph g = graph_from_json(read_json_file(in));
  MinrankResult res = minrank_exact(g, q, budget, limit);
  json summary{{"n", g.n()},
               {"field", "gf:" + std::to_string(q)},
               {"lower", res.lower},
               {"upper", res.upper},
               {"exact", res.exact},
               {"nodes", res.nodes_used}};
  if (res.exact) summary["value"] = res.value;
  std::cerr << summary.dump() << '\n';
  if (res.witness) {
    std::size_t claimed = res.exact ? res.value : res.upper;
    write_output(out, certificate_to_json(g, MatrixVariant(*res.witness), claimed)
                          .dump(2));
  }
  return res.exact ? 0 : 2;
}

int cmd_verify(const std::string& in) {
  json j = read_json_file(in);
  Graph g = graph_from_json(j.at("graph"));
  MatrixVariant m = matrix_from_json(j.at("matrix"));
  std::size_t claimed = j.at("claimed_rank").get<std::size_t>();
  bool ok = std::visit(
      [&](const auto& mm) -> bool {
        using D = std::decay_t<decltype(mm.domain())>;
        if constexpr (D::exact) {
          return verify_certificate(g, mm, claimed);
        } else {
          throw std::invalid_argument("verify: float certificates not accepted");
        }
      },
      m);
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? 0 : 3;
}

int cmd_bounds(std::size_t n, double p, std::optional<std::size_t> k_opt,
               const std::string& out) {
  auto [threshold, scale] = envelope(n, p);
  std::size_t k = k_opt.value_or(
      std::max<std::size_t>(1, static_cast<std::size_t>(threshold)));
  json j{{"n", n},
         {"p", p},
         {"k", k},
         {"threshold", threshold},
         {"reference_scale", scale}};
  if (p < 1.0)
    j["log_union_bound"] = union_bound_log({n, p, k});
  else
    j["log_union_bound"] = nullptr;  // vacuous at p = 1
  write_output(out, j.dump(2));
  return 0;
}

int cmd_experiment(const ExperimentConfig& cfg, const std::string& out,
                   const std::string& format) {
  ExperimentReport rep = run_experiment(cfg);
  if (format == "csv")
    write_output(out, report_to_csv(rep));
  else
    write_output(out, report_to_json(rep).dump(2) + "\n");
  return 0;
}

MatrixVariant read_matrix(const std::string& in) {
  return matrix_from_json(read_json_file(in));
}

int cmd_patterns_rbg(std::size_t m, std::size_t d, std::size_t nvars,
                     const std::string& out) {
  json j{{"m", m}, {"d", d}, {"num_vars", nvars},
         {"bound", rbg_bound(m, d, nvars).get_str()}};
  write_output(out, j.dump(2));
  return 0;
}

int cmd_patterns_nks_witness(const std::string& in, const std::string& out) {
  MatrixVariant mv = read_matrix(in);
  json j;
  auto run = [&](const auto& m) {
    using D = std::decay_t<decltype(m.domain())>;
    if constexpr (D::exact) {
      auto w = nks_witness(m);
      if (w) {
        j = json{{"found", true},
                 {"n", w->n},
                 {"k", w->k},
                 {"s", w->s},
                 {"row_basis", w->row_basis},
                 {"col_basis", w->col_basis},
                 {"basis_nonzeros", w->basis_nonzeros}};
      } else {
        j = json{{"found", false}};
      }
    } else {
      throw std::invalid_argument("nks-witness: exact domains only");
    }
  };
  std::visit(run, mv);
  write_output(out, j.dump(2));
  return 0;
}

int cmd_patterns_census(std::size_t n, std::uint32_t q,
                        std::optional<std::size_t> k,
                        std::optional<std::size_t> s, unsigned jobs,
                        const std::string& out) {
  json rows = json::array();
  auto census = nks_census_all(n, q, jobs);
  for (const auto& [ks, count] : census) {
    if (k && ks.first != *k) continue;
    if (s && ks.second != *s) continue;
    if (ks.first == 0) continue;
    rows.push_back(json{{"n", n},
                        {"k", ks.first},
                        {"s", ks.second},
                        {"q", q},
                        {"count", count},
                        {"log_bound", lemma24_bound(n, ks.first, ks.second)}});
  }
  write_output(out, rows.dump(2));
  return 0;
}

int cmd_patterns_lemma22(const std::string& in, const std::string& out) {
  MatrixVariant mv = read_matrix(in);
  json j;
  auto run = [&](const auto& m) {
    using D = std::decay_t<decltype(m.domain())>;
    if constexpr (D::exact) {
      auto [subset, w] = find_nks_principal_submatrix(m);
      j = json{{"subset", subset},
               {"n_prime", w.n},
               {"k_prime", w.k},
               {"s_prime", w.s},
               {"basis_nonzeros", w.basis_nonzeros}};
    } else {
      throw std::invalid_argument("lemma22: exact domains only");
    }
  };
  std::visit(run, mv);
  write_output(out, j.dump(2));
  return 0;
}

json points_to_json(const PointConfig& cfg) {
  return json{{"dim", cfg.dim}, {"points", cfg.points}};
}

PointConfig points_from_json(const json& j) {
  PointConfig cfg;
  cfg.dim = j.at("dim").get<std::size_t>();
  cfg.points = j.at("points").get<std::vector<std::vector<double>>>();
  for (const auto& pt : cfg.points)
    if (pt.size() != cfg.dim)
      throw std::invalid_argument("points JSON: dimension mismatch");
  return cfg;
}

int cmd_geom_simplex(std::size_t d, const std::string& out) {
  write_output(out, points_to_json(regular_simplex(d)).dump(2));
  return 0;
}

int cmd_geom_unit_distance(const std::string& in, double tol,
                           const std::string& out) {
  PointConfig cfg = points_from_json(read_json_file(in));
  auto mats = unit_distance_matrix(cfg);
  json j{{"matrix", matrix_to_json(mats.m)},
         {"rank", real_rank(mats.m, tol)},
         {"rank_bound", cfg.dim + 2}};
  write_output(out, j.dump(2));
  return 0;
}

int cmd_geom_spheres(const std::string& in, double tol, const std::string& out) {
  json sj = read_json_file(in);
  SphereConfig cfg;
  cfg.dim = sj.at("dim").get<std::size_t>();
  cfg.centers = sj.at("centers").get<std::vector<std::vector<double>>>();
  cfg.radii = sj.at("radii").get<std::vector<double>>();
  auto mats = touching_spheres_matrix(cfg);
  json j{{"matrix", matrix_to_json(mats.m)},
         {"rank", real_rank(mats.m, tol)},
         {"rank_bound", cfg.dim + 3}};
  write_output(out, j.dump(2));
  return 0;
}

int cmd_geom_pgraph(const std::string& in, std::size_t d, std::uint32_t q,
                    const std::string& out) {
  json pj = read_json_file(in);
  json j;
  if (q != 0) {
    auto fact = pgraph_factorize(poly_from_json_gf(pj, q), d);
    json fc = json::array(), hc = json::array();
    for (const auto& c : fact.f_coords) fc.push_back(poly_to_json(c));
    for (const auto& c : fact.h_coords) hc.push_back(poly_to_json(c));
    j = json{{"d", d}, {"length", fact.length}, {"f_coords", fc},
             {"h_coords", hc}, {"pure_part", poly_to_json(fact.pure_part)},
             {"constant", fact.constant}};
  } else {
    auto fact = pgraph_factorize(poly_from_json_rational(pj), d);
    json fc = json::array(), hc = json::array();
    for (const auto& c : fact.f_coords) fc.push_back(poly_to_json(c));
    for (const auto& c : fact.h_coords) hc.push_back(poly_to_json(c));
    j = json{{"d", d}, {"length", fact.length}, {"f_coords", fc},
             {"h_coords", hc}, {"pure_part", poly_to_json(fact.pure_part)},
             {"constant", fact.constant.get_str()}};
  }
  write_output(out, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minrank laboratory"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "csv";
  std::uint64_t seed = 0;
  std::size_t n = 0, k = 0, m_count = 0, degree = 0, nvars = 0, d = 0;
  double p = 0.5, tol = 1e-9;
  std::uint32_t field_q = 2;
  std::uint64_t budget = kDefaultSolverBudget;
  unsigned jobs = 1;
  bool have_k = false, have_s = false;
  std::size_t s_val = 0;

  auto* gen = app.add_subcommand("gen", "generate a seeded G(n,p) graph as JSON");
  gen->add_option("--n", n, "number of vertices")->required();
  gen->add_option("--p", p, "edge probability")->required();
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* mr = app.add_subcommand("minrank", "exact minrank with certificate");
  mr->add_option("--in", in_path, "graph JSON")->required();
  mr->add_option("--field", field_q, "prime field size q");
  mr->add_option("--budget", budget, "node-expansion budget");
  std::size_t mr_limit = kDefaultMinrankLimit;
  mr->add_option("--limit", mr_limit, "exact-solve size limit");
  mr->add_option("--out", out_path, "certificate output path");

  auto* ver = app.add_subcommand("verify", "check a certificate bundle");
  ver->add_option("--in", in_path, "certificate JSON")->required();

  auto* bnd = app.add_subcommand("bounds", "threshold and union bound");
  bnd->add_option("--n", n, "n")->required();
  bnd->add_option("--p", p, "p")->required();
  auto* kopt = bnd->add_option("--k", k, "rank parameter (default: floor threshold)");
  bnd->add_option("--out", out_path, "output path");

  auto* exp = app.add_subcommand("experiment", "Monte Carlo minrank report");
  std::vector<std::size_t> n_list;
  std::vector<double> p_list;
  std::size_t trials = 1;
  exp->add_option("--n,--n-list", n_list, "vertex counts")->required();
  exp->add_option("--p,--p-list", p_list, "edge probabilities")->required();
  exp->add_option("--trials", trials, "trials per (n,p)");
  exp->add_option("--seed", seed, "master seed");
  exp->add_option("--field", field_q, "prime field size q");
  exp->add_option("--budget", budget, "per-instance node budget");
  exp->add_option("--jobs", jobs, "worker threads");
  exp->add_option("--out", out_path, "output path");
  exp->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* pat = app.add_subcommand("patterns", "zero-pattern tooling");
  pat->require_subcommand(1);
  auto* rbg = pat->add_subcommand("rbg", "polynomial-family pattern cap");
  rbg->add_option("--m", m_count, "family size")->required();
  rbg->add_option("--d", degree, "max degree")->required();
  rbg->add_option("--num-vars", nvars, "variable count")->required();
  rbg->add_option("--out", out_path, "output path");
  auto* nksw = pat->add_subcommand("nks-witness", "sparse-basis witness search");
  nksw->add_option("--in", in_path, "matrix JSON")->required();
  nksw->add_option("--out", out_path, "output path");
  auto* census = pat->add_subcommand("nks-census", "exhaustive pattern census");
  census->add_option("--n", n, "matrix size (<= 4)")->required();
  census->add_option("--field", field_q, "prime field size q");
  auto* copt_k = census->add_option("--k", k, "restrict to rank k");
  auto* copt_s = census->add_option("--s", s_val, "restrict to s nonzeros");
  census->add_option("--jobs", jobs, "worker threads");
  census->add_option("--out", out_path, "output path");
  auto* l22 = pat->add_subcommand("lemma22", "principal-submatrix witness");
  l22->add_option("--in", in_path, "matrix JSON")->required();
  l22->add_option("--out", out_path, "output path");

  auto* geo = app.add_subcommand("geom", "geometric constructions");
  geo->require_subcommand(1);
  auto* simp = geo->add_subcommand("simplex", "regular simplex of diameter 1");
  simp->add_option("--d", d, "number of vertices")->required();
  simp->add_option("--out", out_path, "output path");
  auto* ud = geo->add_subcommand("unit-distance", "1 - ||u_i - u_j||^2 matrix");
  ud->add_option("--in", in_path, "points JSON")->required();
  ud->add_option("--tol", tol, "rank tolerance");
  ud->add_option("--out", out_path, "output path");
  auto* sph = geo->add_subcommand("spheres", "touching-spheres matrix");
  sph->add_option("--in", in_path, "spheres JSON")->required();
  sph->add_option("--tol", tol, "rank tolerance");
  sph->add_option("--out", out_path, "output path");
  auto* pg = geo->add_subcommand("pgraph", "bilinear factorization of P(x,y)");
  pg->add_option("--in", in_path, "polynomial JSON")->required();
  pg->add_option("--d", d, "half the variable count")->required();
  std::uint32_t pg_field = 0;
  pg->add_option("--field", pg_field, "prime q (omit for rationals)");
  pg->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(n, p, seed, out_path);
    if (*mr) return cmd_minrank(in_path, field_q, budget, mr_limit, out_path);
    if (*ver) return cmd_verify(in_path);
    if (*bnd)
      return cmd_bounds(n, p,
                        kopt->count() ? std::optional<std::size_t>(k)
                                      : std::nullopt,
                        out_path);
    if (*exp) {
      ExperimentConfig cfg;
      cfg.n_list = n_list;
      cfg.p_list = p_list;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.field_q = field_q;
      cfg.budget = budget;
      cfg.jobs = jobs;
      return cmd_experiment(cfg, out_path, format);
    }
    if (*rbg) return cmd_patterns_rbg(m_count, degree, nvars, out_path);
    if (*nksw) return cmd_patterns_nks_witness(in_path, out_path);
    if (*census)
      return cmd_patterns_census(
          n, field_q,
          copt_k->count() ? std::optional<std::size_t>(k) : std::nullopt,
          copt_s->count() ? std::optional<std::size_t>(s_val) : std::nullopt,
          jobs, out_path);
    if (*l22) return cmd_patterns_lemma22(in_path, out_path);
    if (*simp) return cmd_geom_simplex(d, out_path);
    if (*ud) return cmd_geom_unit_distance(in_path, tol, out_path);
    if (*sph) return cmd_geom_spheres(in_path, tol, out_path);
    if (*pg) return cmd_geom_pgraph(in_path, d, pg_field, out_path);
  } catch (const minrank::counterexample_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const minrank::limit_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
