// Python bindings for the main operations: exact correlators, hierarchy
// polynomials, model handling, constraint residuals and the genus zero checks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gwvir/genus_zero.hpp"
#include "gwvir/gw_table.hpp"
#include "gwvir/kdv.hpp"
#include "gwvir/quad_operator.hpp"

namespace py = pybind11;
using namespace gwvir;

namespace {

CohModel model_from(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return CohModel::builtin(ref.substr(8));
  // anything with a newline is the model text itself
  std::istringstream is(ref);
  return CohModel::parse(is);
}

GWTable table_from(const std::string& text) {
  std::istringstream is(text);
  return GWTable::parse(is);
}

}  // namespace

PYBIND11_MODULE(_gwvir, m) {
  m.doc() = "exact descendent invariants, Virasoro constraints and KdV checks";

  m.def("tau", [](int g, std::vector<int> ks) {
    TauStore s;
    return rat_str(s.tau(g, std::move(ks)));
  }, py::arg("g"), py::arg("ks"),
  "one point-target correlator as an exact rational string");

  m.def("point_table", [](int gmax, long kmax) {
    TauStore s;
    return export_point_table(s, gmax, kmax).emit();
  }, py::arg("gmax"), py::arg("kmax"));

  m.def("sample_line_table", [] { return sample_p1_table().emit(); });

  m.def("gd_poly", [](int mm) {
    GelfandDikii gd;
    return gd.R(mm).str();
  }, py::arg("m"));

  m.def("genus_potential", [](int g) {
    TauStore s;
    std::vector<std::tuple<std::string, std::vector<int>, int>> out;
    for (auto& t : genus_potential_iz(s, g))
      out.emplace_back(rat_str(t.coeff), t.ks, t.uprime_power);
    return out;
  }, py::arg("g"));

  m.def("libgober", [](const std::string& model) {
    auto r = model_from(model).libgober_check();
    return std::make_tuple(r.pass, rat_str(r.lhs), rat_str(r.rhs));
  }, py::arg("model"));

  m.def("validate_model", [](const std::string& model) {
    return model_from(model).validate();
  }, py::arg("model"));

  m.def("emit_builtin", [](const std::string& name) {
    return CohModel::builtin(name).emit();
  }, py::arg("name"));

  m.def("cocycle_value", [](const std::string& model, int k, int l) {
    CohModel mo = model_from(model);
    return rat_str(cocycle(mo, symbol_Lk(mo, k), symbol_Lk(mo, l)));
  }, py::arg("model"), py::arg("k"), py::arg("l"));

  m.def("symbol_commutators_ok", [](const std::string& model, int kmax) {
    CohModel mo = model_from(model);
    for (int k = -1; k <= kmax; ++k)
      for (int l = -1; l <= kmax; ++l) {
        PsiSymbol c = psi_commutator(symbol_Lk(mo, k), symbol_Lk(mo, l));
        PsiSymbol want(mo.dim());
        if (k + l >= -1) want = Rational(k - l) * symbol_Lk(mo, k + l);
        if (!(c == want)) return false;
      }
    return true;
  }, py::arg("model"), py::arg("kmax") = 3);

  m.def("kdv_matches", [](int gmax, long kmax_sum, int g, std::vector<int> ks) {
    (void)gmax; (void)kmax_sum;
    GelfandDikii gd;
    KdvOracle ko(gd);
    TauStore ts;
    Rational a = ko.tau(g, ks);
    return a == ts.tau(g, std::move(ks));
  }, py::arg("gmax") = 0, py::arg("kmax_sum") = 0, py::arg("g") = 2,
     py::arg("ks") = std::vector<int>{4});

  m.def("z_residual", [](const std::string& table, const std::string& model,
                         int k, int g, std::vector<std::pair<int, long>> probe,
                         std::vector<long> beta) -> py::object {
    GWTable t = table_from(table);
    CohModel mo = model_from(model);
    auto v = z_residual(t, mo, k, g, probe, beta);
    if (!v) return py::none();
    return py::str(rat_str(*v));
  }, py::arg("table"), py::arg("model"), py::arg("k"), py::arg("g"),
     py::arg("probe") = std::vector<std::pair<int, long>>{},
     py::arg("beta") = std::vector<long>{});

  m.def("identity_check", [](const std::string& table, const std::string& model,
                             const std::string& which, long omega) {
    GWTable t = table_from(table);
    CohModel mo = model_from(model);
    EqCheckReport r;
    if (which == "puncture")
      r = puncture_check(t, mo);
    else if (which == "dilaton")
      r = dilaton_check(t, mo);
    else if (which == "divisor")
      r = divisor_check(t, mo, omega);
    else
      throw std::invalid_argument("unknown identity: " + which);
    return std::make_tuple(r.pass(), r.checked, r.skipped);
  }, py::arg("table"), py::arg("model"), py::arg("which"), py::arg("omega") = 1);

  m.def("genus0_check", [](const std::string& table, const std::string& model,
                           const std::string& which, int D, int M) {
    GWTable t = table_from(table);
    CohModel mo = model_from(model);
    G0Env env(t, mo, D, M);
    G0Report r;
    if (which == "invert") r = invert_check(env);
    else if (which == "bilinear") r = bilinear_check(env, 2);
    else if (which == "g-vanish") r = g_vanish_check(env, -4);
    else if (which == "trr") r = trr_check(env, 2);
    else if (which == "wdvv") r = wdvv_check(env, 1);
    else if (which == "fp") r = fp_check(env, 2);
    else if (which == "amat") r = amat_check(env, 6);
    else if (which == "string") r = string_theta_check(env);
    else if (which == "uv") r = uv_delta_check(env);
    else throw std::invalid_argument("unknown check: " + which);
    return std::make_tuple(r.pass && env.indeterminate() == 0, r.checked);
  }, py::arg("table"), py::arg("model"), py::arg("which"), py::arg("d") = 4,
     py::arg("m") = 4);
}
