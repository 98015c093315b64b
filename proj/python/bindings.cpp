#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratavol/completed.hpp"
#include "stratavol/core.hpp"
#include "stratavol/errors.hpp"
#include "stratavol/graphs.hpp"
#include "stratavol/ribboncount.hpp"
#include "stratavol/volumes.hpp"

namespace py = pybind11;
using namespace stratavol;

// Rationals cross the boundary as fractions.Fraction.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      value = Rational::parse(py::str(src).cast<std::string>());
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  static handle cast(const Rational& r, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(r.str()).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_int(const Integer& z) { return py::int_(py::str(z.get_str())); }

py::dict graph_dict(const TwoLevelGraph& g) {
  py::dict d;
  d["graph"] = serialize(g);
  d["kind"] = g.kind == GraphKind::SpecialStar ? "star" : "sunflower";
  d["edge_data"] = edge_data(g);
  d["aut"] = to_int(aut_order(g));
  d["h_ab"] = h_ab(g);
  d["prefactor"] = prefactor(g);
  d["kappa_prod"] = to_int(kappa_product(g));
  return d;
}

VolumeTable tables(const std::vector<std::string>& files, const std::string& text) {
  VolumeTable t;
  for (const auto& f : files) t.merge(VolumeTable::load(f));
  if (!text.empty()) t.merge(VolumeTable::parse(text));
  return t;
}

}  // namespace

PYBIND11_MODULE(_stratavol, m) {
  m.doc() = "Completed volumes of strata of quadratic differentials";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InvalidSignature>(m, "InvalidSignature", base.ptr());
  py::register_exception<UnsupportedConversion>(m, "UnsupportedConversion", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DuplicateKey>(m, "DuplicateKey", base.ptr());
  py::register_exception<MissingVolume>(m, "MissingVolume", base.ptr());

  m.def("dfact2", [](long a) { return to_int(dfact2(a)); });
  m.def("f2", &f2, py::arg("a"), py::arg("n"));
  m.def("bracket", &bracket, py::arg("a"), py::arg("r"));

  m.def("genus", [](int k, std::vector<int> mu) { return genus(Signature(k, mu)); },
        py::arg("k"), py::arg("mu"));
  m.def("proj_dim", [](int k, std::vector<int> mu) { return proj_dim(Signature(k, mu)); },
        py::arg("k"), py::arg("mu"));
  m.def("is_holo_abelian",
        [](int k, std::vector<int> mu) { return is_holo_abelian(Signature(k, mu)); },
        py::arg("k"), py::arg("mu"));
  m.def("canonical_key",
        [](int k, std::vector<int> mu) { return Signature(k, mu).canonical_key(); },
        py::arg("k"), py::arg("mu"));
  m.def(
      "mv_convert",
      [](int k, std::vector<int> mu, const Rational& v, const std::string& kind) {
        VolumeKind vk = kind == "stratum" ? VolumeKind::Stratum : VolumeKind::Completed;
        if (kind != "stratum" && kind != "completed")
          throw DomainError("kind must be stratum or completed");
        auto p = mv_convert(Signature(k, mu), v, vk);
        return py::make_tuple(p.coefficient, p.pi_power);
      },
      py::arg("k"), py::arg("mu"), py::arg("vol"), py::arg("kind") = "completed");

  m.def(
      "enumerate",
      [](int k, std::vector<int> mu) {
        py::list out;
        for (const auto& g : all_graphs(Signature(k, mu))) out.append(graph_dict(g));
        return out;
      },
      py::arg("k"), py::arg("mu"));

  m.def(
      "completed_volume",
      [](int k, std::vector<int> mu, std::vector<std::string> files, std::string text,
         std::string format) -> py::object {
        auto r = completed_volume(Signature(k, mu), tables(files, text));
        if (!format.empty()) return py::str(render(r, parse_format(format)));
        py::dict d;
        d["signature"] = r.sig.canonical_key();
        d["main_vol"] = r.main_vol;
        py::list rows;
        for (size_t i = 0; i < r.contributions.size(); ++i) {
          const auto& c = r.contributions[i];
          py::dict row = graph_dict(c.graph);
          row["label"] = row_label(i);
          row["vol_prod"] = c.vol_prod;
          row["total"] = c.total;
          rows.append(row);
        }
        d["rows"] = rows;
        d["completed_vol"] = r.completed_vol;
        if (r.mv_value)
          d["mv_value"] = py::make_tuple(r.mv_value->coefficient, r.mv_value->pi_power);
        else
          d["mv_value"] = py::none();
        d["warnings"] = r.warnings;
        return d;
      },
      py::arg("k"), py::arg("mu"), py::arg("volume_files") = std::vector<std::string>{},
      py::arg("volumes") = "", py::arg("format") = "");

  m.def("vol_q0_two_poles", &vol_q0_two_poles, py::arg("m1"), py::arg("m2"),
        py::arg("genera"));
  m.def("vol_sf_bottom", &vol_sf_bottom, py::arg("m"), py::arg("r"));
  m.def("coefficient_Cgg", &coefficient_Cgg, py::arg("mvec"), py::arg("gvec"));

  m.def("alpha_closed", &alpha_closed, py::arg("eps"), py::arg("u"), py::arg("m2"),
        py::arg("lprime_genera"), py::arg("h_size"));
  m.def("alpha_brute", &alpha_brute, py::arg("eps"), py::arg("u"), py::arg("m2"),
        py::arg("lprime_genera"), py::arg("h_size"));
  m.def("s_sum", &s_sum, py::arg("m1"), py::arg("m2"), py::arg("lprime_genera"),
        py::arg("u_genera"));
  m.def("g_count", [](int m1, int m2, std::vector<int> g) { return g_count({m1, m2, g}); },
        py::arg("m1"), py::arg("m2"), py::arg("genera"));
  m.def("f_count", [](int m1, int m2, std::vector<int> g) { return f_count({m1, m2, g}); },
        py::arg("m1"), py::arg("m2"), py::arg("genera"));
  m.def("vandermonde_check", &vandermonde_check, py::arg("m2"), py::arg("lprime_genera"),
        py::arg("u"));
}
