// Command line front end: point correlators, Gelfand-Dikii polynomials,
// verification suites, table and model handling, residual evaluation and the
// genus-0 checks.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gwvir/genus_zero.hpp"
#include "gwvir/gw_table.hpp"
#include "gwvir/kdv.hpp"
#include "gwvir/quad_operator.hpp"

using namespace gwvir;

namespace {

struct Global {
  std::string cache;
  std::string format = "text";
  int threads = 1;
  bool failed = false;
};

CohModel load_model(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return CohModel::builtin(ref.substr(8));
  std::ifstream is(ref);
  if (!is) throw std::runtime_error("cannot open model file: " + ref);
  return CohModel::parse(is);
}

GWTable load_table(const std::string& ref, TauStore& store) {
  if (ref == "sample:P1") return sample_p1_table();
  if (ref.rfind("point:", 0) == 0) {
    std::stringstream ss(ref.substr(6));
    int g = 2;
    long k = 14;
    char c;
    ss >> g >> c >> k;
    return export_point_table(store, g, k);
  }
  std::ifstream is(ref);
  if (!is) throw std::runtime_error("cannot open table file: " + ref);
  return GWTable::parse(is);
}

std::vector<int> parse_ks(const std::string& s) {
  std::vector<int> ks;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) ks.push_back(std::stoi(part));
  return ks;
}

void report(Global& g, const std::string& name, bool pass, const std::string& detail) {
  if (g.format == "tsv")
    std::cout << name << "\t" << (pass ? "PASS" : "FAIL")
              << (detail.empty() ? "" : "\t" + detail) << "\n";
  else
    std::cout << (pass ? "PASS " : "FAIL ") << name
              << (detail.empty() ? "" : ": " + detail) << "\n";
  if (!pass) g.failed = true;
}

// multisets of (m,a) probes with level sum <= msum and size <= len
void enumerate_probes(long dim, int msum, int len,
                      std::vector<std::pair<int, long>>& cur,
                      std::vector<std::vector<std::pair<int, long>>>& out) {
  out.push_back(cur);
  if ((int)cur.size() >= len) return;
  int used = 0;
  for (auto& [m, a] : cur) used += m;
  std::pair<int, long> start = cur.empty() ? std::pair<int, long>{0, 0} : cur.back();
  for (int m = start.first; m + used <= msum; ++m)
    for (long a = (m == start.first ? start.second : 0); a < dim; ++a) {
      cur.emplace_back(m, a);
      enumerate_probes(dim, msum, len, cur, out);
      cur.pop_back();
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descendent invariants of a point via Virasoro "
               "constraints, KdV cross-checks, and symbolic Virasoro "
               "operators for finite cohomology models"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--cache", gl.cache, "correlator cache file");
  app.add_option("--format", gl.format, "output format: text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--threads", gl.threads, "worker threads (accepted, serial)");

  TauStore store;

  // tau
  int tau_genus = 0;
  std::string tau_ks;
  bool tau_sym = false;
  auto* c_tau = app.add_subcommand("tau", "one point correlator");
  c_tau->add_option("--genus", tau_genus)->required();
  c_tau->add_option("--ks", tau_ks)->required();
  c_tau->add_flag("--over-sym", tau_sym, "divide by multiplicity factorials");

  // tau-table
  int tt_gmax = 2;
  long tt_kmax = 14;
  auto* c_tt = app.add_subcommand("tau-table", "emit the point correlator table");
  c_tt->add_option("--gmax", tt_gmax);
  c_tt->add_option("--kmax", tt_kmax);

  // gd
  int gd_m = 1;
  auto* c_gd = app.add_subcommand("gd", "Gelfand-Dikii polynomial R_m");
  c_gd->add_option("--m", gd_m)->required();

  // potential-iz
  int iz_genus = 2;
  auto* c_iz = app.add_subcommand("potential-iz", "genus potential in IZ form");
  c_iz->add_option("--genus", iz_genus)->required();

  // verify
  auto* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify->require_subcommand(1);
  int vk_gmax = 3;
  long vk_kmax = 12;
  auto* c_vk = c_verify->add_subcommand("kdv", "KdV route equals Virasoro route");
  c_vk->add_option("--gmax", vk_gmax);
  c_vk->add_option("--kmax", vk_kmax);
  std::string vv_model = "builtin:point";
  int vv_kmax = 5, vv_cutoff = 12;
  std::string vv_s;
  auto* c_vv = c_verify->add_subcommand("virasoro", "symbol and operator relations");
  c_vv->add_option("--model", vv_model);
  c_vv->add_option("--kmax", vv_kmax);
  c_vv->add_option("--cutoff", vv_cutoff);
  c_vv->add_option("--s", vv_s, "modified grading parameter p/q");
  std::string vl_model = "builtin:point";
  auto* c_vl = c_verify->add_subcommand("libgober", "Str(mu^2) Chern identity");
  c_vl->add_option("--model", vl_model);

  // model
  std::string m_model;
  bool m_emit = false;
  auto* c_model = app.add_subcommand("model", "validate or emit a model");
  c_model->add_option("--model", m_model)->required();
  c_model->add_flag("--emit", m_emit);

  // residual
  std::string r_model = "builtin:point", r_table = "point:2,14", r_identity;
  int r_kmax = 5, r_gmax = 2, r_msum = 6, r_len = 3;
  auto* c_res = app.add_subcommand("residual", "constraint residuals on a table");
  c_res->add_option("--model", r_model);
  c_res->add_option("--table", r_table);
  c_res->add_option("--kmax", r_kmax);
  c_res->add_option("--gmax", r_gmax);
  c_res->add_option("--probe-sum", r_msum);
  c_res->add_option("--probe-len", r_len);
  c_res->add_option("--identity", r_identity,
                    "puncture, dilaton, or divisor:<index> instead of z");

  // genus0
  std::string g_model = "builtin:point", g_table = "point:0,20", g_check = "invert";
  int g_D = 5, g_M = 5;
  auto* c_g0 = app.add_subcommand("genus0", "genus zero identity checks");
  c_g0->add_option("--model", g_model);
  c_g0->add_option("--table", g_table);
  c_g0->add_option("--check", g_check)
      ->check(CLI::IsMember({"invert", "bilinear", "g-vanish", "trr", "wdvv",
                             "fp", "amat", "string", "uv", "iterate", "nabla"}));
  c_g0->add_option("--degree", g_D, "jet degree cutoff");
  c_g0->add_option("--indices", g_M, "level index cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!gl.cache.empty()) {
      std::ifstream is(gl.cache);
      if (is) store.load_cache(is);
    }

    if (*c_tau) {
      TauKey key = TauKey::make(tau_genus, parse_ks(tau_ks));
      Rational v = tau_sym ? store.tau_over_sym(key) : store.tau(key);
      if (gl.format == "tsv")
        std::cout << tau_genus << "\t" << tau_ks << "\t" << rat_str(v) << "\n";
      else
        std::cout << rat_str(v) << "\n";
    } else if (*c_tt) {
      std::cout << export_point_table(store, tt_gmax, tt_kmax).emit();
    } else if (*c_gd) {
      GelfandDikii gd;
      std::cout << gd.R(gd_m).str() << "\n";
    } else if (*c_iz) {
      for (auto& t : genus_potential_iz(store, iz_genus)) {
        std::ostringstream ks;
        for (size_t i = 0; i < t.ks.size(); ++i)
          ks << (i ? "," : "") << t.ks[i];
        if (gl.format == "tsv")
          std::cout << rat_str(t.coeff) << "\t" << ks.str() << "\t"
                    << t.uprime_power << "\n";
        else
          std::cout << "(" << rat_str(t.coeff) << ") G[" << ks.str() << "] u'^-"
                    << t.uprime_power << "\n";
      }
    } else if (*c_vk) {
      GelfandDikii gd;
      KdvOracle oracle(gd);
      long checked = 0;
      bool ok = true;
      std::string detail;
      for (int g = 0; g <= vk_gmax && ok; ++g)
        for (long s = 0; s <= vk_kmax && ok; ++s) {
          long n = s - 3L * g + 3;
          if (n < 1 || 2 * g - 2 + n <= 0) continue;
          std::vector<int> parts;
          std::function<void(long, long, int)> gen = [&](long rem, long slots,
                                                         int maxv) {
            if (!ok) return;
            if (slots == 0) {
              if (rem != 0) return;
              std::vector<int> ks(parts.rbegin(), parts.rend());
              ++checked;
              if (store.tau(g, ks) != oracle.tau(g, ks)) {
                ok = false;
                detail = TauKey::make(g, ks).str();
              }
              return;
            }
            for (int v = (int)std::min<long>(maxv, rem); v >= 0; --v) {
              if ((long)v * slots < rem) break;
              parts.push_back(v);
              gen(rem - v, slots - 1, v);
              parts.pop_back();
            }
          };
          gen(s, n, (int)s);
        }
      report(gl, "kdv-virasoro (" + std::to_string(checked) + " keys)", ok, detail);
    } else if (*c_vv) {
      CohModel m = load_model(vv_model);
      // symbol commutators
      bool ok = true;
      std::string detail;
      for (int k = -1; k <= vv_kmax && ok; ++k)
        for (int l = -1; l <= vv_kmax && ok; ++l) {
          PsiSymbol c = psi_commutator(symbol_Lk(m, k), symbol_Lk(m, l));
          PsiSymbol want(m.dim());
          if (k + l >= -1) want = Rational(k - l) * symbol_Lk(m, k + l);
          if (!(c == want)) {
            ok = false;
            detail = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
          }
        }
      report(gl, "symbol commutators", ok, detail);
      auto ct = central_term_check(m, vv_kmax);
      report(gl, "central terms", ct.pass, ct.detail);
      if (vv_cutoff > 0 && m.is_even()) {
        bool op_ok = true;
        std::string w;
        int opk = std::min(vv_kmax, 3);
        for (int k = -1; k <= opk && op_ok; ++k)
          for (int l = -1; l <= opk && op_ok; ++l) {
            QuadOperator c = quad_commutator(build_Lk_direct(m, k, vv_cutoff),
                                             build_Lk_direct(m, l, vv_cutoff));
            QuadOperator want = (k + l >= -1)
                ? Rational(k - l) * build_Lk_direct(m, k + l, vv_cutoff)
                : QuadOperator(m.dim(), vv_cutoff, 0);
            if (!trusted_equal(c, want, &w)) op_ok = false;
          }
        report(gl, "operator commutators", op_ok, w);
        bool ff_ok = true;
        std::string ffw;
        for (int k = -1; k <= opk && ff_ok; ++k) {
          auto rep = free_field_symbol_check(
              m, build_Lk_direct(m, k, vv_cutoff), symbol_Lk(m, k), vv_cutoff);
          if (!rep.pass) {
            ff_ok = false;
            ffw = rep.detail;
          }
        }
        report(gl, "free field identity", ff_ok, ffw);
      }
      if (!vv_s.empty()) {
        auto rep = modified_virasoro_check(m, parse_rational(vv_s), vv_cutoff);
        report(gl, "modified relation s=" + vv_s, rep.pass, rep.detail);
      }
    } else if (*c_vl) {
      CohModel m = load_model(vl_model);
      auto r = m.libgober_check();
      std::cout << (r.pass ? "PASS " : "FAIL ") << rat_str(r.lhs) << " = "
                << rat_str(r.rhs) << "\n";
      if (!r.pass) gl.failed = true;
    } else if (*c_model) {
      CohModel m = load_model(m_model);
      auto bad = m.validate();
      if (m_emit) std::cout << m.emit();
      report(gl, "model invariants", bad.empty(),
             bad.empty() ? "" : bad.front());
    } else if (*c_res) {
      CohModel m = load_model(r_model);
      GWTable t = load_table(r_table, store);
      if (!r_identity.empty()) {
        EqCheckReport rep;
        if (r_identity == "puncture")
          rep = puncture_check(t, m);
        else if (r_identity == "dilaton")
          rep = dilaton_check(t, m);
        else if (r_identity.rfind("divisor:", 0) == 0)
          rep = divisor_check(t, m, std::stol(r_identity.substr(8)));
        else
          throw CLI::ValidationError("--identity", "unknown identity");
        std::string detail = "checked=" + std::to_string(rep.checked) +
                             " skipped=" + std::to_string(rep.skipped);
        if (!rep.pass()) detail += " " + rep.failures.front();
        report(gl, r_identity, rep.pass(), detail);
      } else {
        std::vector<std::vector<std::pair<int, long>>> probes;
        std::vector<std::pair<int, long>> cur;
        long pd = m.is_even() ? m.dim() : 1;
        int plen = m.is_even() ? r_len : 0;
        enumerate_probes(pd, r_msum, plen, cur, probes);
        long zero = 0, nonzero = 0, indet = 0;
        std::string first;
        std::vector<std::vector<long>> betas{std::vector<long>(t.degree_rank, 0)};
        for (auto& b : t.allowed) betas.push_back(b);
        for (int k = -1; k <= r_kmax; ++k)
          for (int g = 0; g <= r_gmax; ++g)
            for (auto& beta : betas)
              for (auto& p : probes) {
                auto v = z_residual(t, m, k, g, p, beta);
                if (!v)
                  ++indet;
                else if (*v == 0)
                  ++zero;
                else {
                  ++nonzero;
                  if (first.empty())
                    first = "z(" + std::to_string(k) + "," + std::to_string(g) +
                            ") = " + rat_str(*v);
                }
              }
        report(gl, "z residuals",  nonzero == 0,
               "zero=" + std::to_string(zero) + " nonzero=" +
                   std::to_string(nonzero) + " indeterminate=" +
                   std::to_string(indet) +
                   (first.empty() ? "" : " first " + first));
      }
    } else if (*c_g0) {
      CohModel m = load_model(g_model);
      GWTable t = load_table(g_table, store);
      G0Env env(t, m, g_D, g_M);
      G0Report rep;
      if (g_check == "invert") rep = invert_check(env);
      else if (g_check == "bilinear") rep = bilinear_check(env, 2);
      else if (g_check == "g-vanish") rep = g_vanish_check(env, -4);
      else if (g_check == "trr") rep = trr_check(env, 2);
      else if (g_check == "wdvv") rep = wdvv_check(env, 1);
      else if (g_check == "fp") rep = fp_check(env, 2);
      else if (g_check == "amat") rep = amat_check(env, 6);
      else if (g_check == "string") rep = string_theta_check(env);
      else if (g_check == "uv") rep = uv_delta_check(env);
      else if (g_check == "iterate") rep = iterate_check(env, 3);
      else rep = nabla_z_check(env, 3);
      std::string detail = "checked=" + std::to_string(rep.checked) +
                           " indeterminate=" + std::to_string(env.indeterminate());
      if (!rep.detail.empty()) detail += " " + rep.detail;
      report(gl, "genus0 " + g_check, rep.pass, detail);
    }

    if (!gl.cache.empty()) {
      std::ofstream os(gl.cache, std::ios::trunc);
      store.save_cache(os);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return gl.failed ? 1 : 0;
}
