// Copyright 2026 The searchduo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "searchduo/conditions.h"
#include "searchduo/demand.h"
#include "searchduo/equilibrium.h"
#include "searchduo/firm.h"
#include "searchduo/io.h"
#include "searchduo/sim.h"
#include "searchduo/variants.h"

namespace py = pybind11;
using namespace searchduo;

namespace {

Firm ToFirm(const std::string& name) {
  if (name == "X" || name == "x") return Firm::kX;
  if (name == "Y" || name == "y") return Firm::kY;
  throw py::value_error("firm must be \"X\" or \"Y\"");
}

SweepParam ToParam(const std::string& name) {
  for (SweepParam p : {SweepParam::kS, SweepParam::kCostX, SweepParam::kCostY,
                       SweepParam::kMuX}) {
    if (name == SweepParamName(p)) return p;
  }
  throw py::value_error("unknown sweep parameter: " + name);
}

py::dict Dict(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Consumer-search duopoly: demand, pricing and equilibrium";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::enum_<Variant>(m, "Variant")
      .value("KNOWN", Variant::kKnown)
      .value("UNKNOWN", Variant::kUnknown)
      .value("FULL_INFORMATION", Variant::kFullInformation);

  py::class_<Distribution>(m, "Distribution")
      .def_static("uniform", &Distribution::Uniform)
      .def_static("truncexp", &Distribution::TruncatedExponential,
                  py::arg("rate") = 1.0)
      .def_static("step", &Distribution::Step, py::arg("breaks"),
                  py::arg("densities"))
      .def("pdf", &Distribution::Pdf)
      .def("cdf", &Distribution::Cdf)
      .def("pdf_slope", &Distribution::PdfSlope)
      .def("quantile", &Distribution::Quantile)
      .def("mean", &Distribution::Mean)
      .def("__repr__", [](const Distribution& d) {
        return "<Distribution " + d.Describe() + ">";
      });

  py::class_<FirmParams>(m, "FirmParams")
      .def(py::init([](double cost, double mu, const Distribution& dist) {
             return FirmParams{cost, mu, dist};
           }),
           py::arg("cost") = 0.0, py::arg("mu") = 0.5,
           py::arg("dist") = Distribution::Uniform())
      .def_readwrite("cost", &FirmParams::cost)
      .def_readwrite("mu", &FirmParams::mu)
      .def_readwrite("dist", &FirmParams::dist);

  py::class_<MarketParams>(m, "MarketParams")
      .def(py::init([](const FirmParams& x, const FirmParams& y, double s,
                       Variant variant) {
             MarketParams out{x, y, s, variant};
             out.Validate();
             return out;
           }),
           py::arg("x"), py::arg("y"), py::arg("s") = 0.1,
           py::arg("variant") = Variant::kKnown)
      .def_static("symmetric", &MarketParams::Symmetric, py::arg("dist"),
                  py::arg("cost") = 0.0, py::arg("s") = 0.1,
                  py::arg("variant") = Variant::kKnown)
      .def_static(
          "from_json",
          [](const std::string& text) { return ParseMarket(Json::parse(text)); })
      .def_readwrite("x", &MarketParams::x)
      .def_readwrite("y", &MarketParams::y)
      .def_readwrite("s", &MarketParams::s)
      .def_readwrite("variant", &MarketParams::variant)
      .def("to_dict", [](const MarketParams& mk) { return Dict(ToJson(mk)); });

  py::class_<PriceProfile>(m, "PriceProfile")
      .def(py::init([](double p_x, double p_y, py::object ce_x,
                       py::object ce_y) {
             PriceProfile p = PriceProfile::Pure(p_x, p_y);
             if (!ce_x.is_none()) p.ce_x = ce_x.cast<double>();
             if (!ce_y.is_none()) p.ce_y = ce_y.cast<double>();
             return p;
           }),
           py::arg("p_x"), py::arg("p_y"), py::arg("ce_x") = py::none(),
           py::arg("ce_y") = py::none())
      .def_readwrite("p_x", &PriceProfile::p_x)
      .def_readwrite("p_y", &PriceProfile::p_y)
      .def_readwrite("ce_x", &PriceProfile::ce_x)
      .def_readwrite("ce_y", &PriceProfile::ce_y);

  py::class_<DemandBreakdown>(m, "DemandBreakdown")
      .def_readonly("loyal_no_search", &DemandBreakdown::loyal_no_search)
      .def_readonly("loyal_after_search", &DemandBreakdown::loyal_after_search)
      .def_readonly("switchers_in", &DemandBreakdown::switchers_in)
      .def_readonly("exit_mass", &DemandBreakdown::exit_mass)
      .def_readonly("search_mass", &DemandBreakdown::search_mass)
      .def_property_readonly("total", &DemandBreakdown::total);

  py::class_<EquilibriumResult>(m, "EquilibriumResult")
      .def_readonly("p_x", &EquilibriumResult::p_x)
      .def_readonly("p_y", &EquilibriumResult::p_y)
      .def_readonly("profit_x", &EquilibriumResult::profit_x)
      .def_readonly("profit_y", &EquilibriumResult::profit_y)
      .def_readonly("stable", &EquilibriumResult::stable)
      .def_readonly("dp_ds_x", &EquilibriumResult::dp_ds_x)
      .def_readonly("dp_ds_y", &EquilibriumResult::dp_ds_y)
      .def_property_readonly("multiplicity",
                             [](const EquilibriumResult& r) {
                               return MultiplicityName(r.multiplicity);
                             })
      .def("to_dict", [](const EquilibriumResult& r) { return Dict(ToJson(r)); });

  m.def(
      "demand",
      [](const std::string& firm, const PriceProfile& p,
         const MarketParams& mk) { return Demand(ToFirm(firm), p, mk); },
      py::arg("firm"), py::arg("prices"), py::arg("market"));
  m.def(
      "profit",
      [](const std::string& firm, const PriceProfile& p,
         const MarketParams& mk) { return Profit(ToFirm(firm), p, mk); },
      py::arg("firm"), py::arg("prices"), py::arg("market"));
  m.def(
      "foc",
      [](const std::string& firm, const PriceProfile& p,
         const MarketParams& mk) { return Foc(ToFirm(firm), p, mk); },
      py::arg("firm"), py::arg("prices"), py::arg("market"));
  m.def(
      "surplus",
      [](const PriceProfile& p, const MarketParams& mk) {
        return Dict(ToJson(Surplus(p, mk)));
      },
      py::arg("prices"), py::arg("market"));
  m.def(
      "solve",
      [](const MarketParams& mk) { return Solve(mk); },
      py::arg("market"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "solve_highest", [](const MarketParams& mk) { return SolveHighest(mk); },
      py::arg("market"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep",
      [](const MarketParams& mk, const std::string& param,
         const std::vector<double>& grid, int threads) {
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = Sweep(mk, ToParam(param), grid, threads);
        }
        py::list out;
        for (const SweepRow& r : rows) {
          py::dict d;
          d["value"] = r.value;
          d["p_x"] = r.p_x;
          d["p_y"] = r.p_y;
          d["profit_x"] = r.profit_x;
          d["profit_y"] = r.profit_y;
          d["consumer_surplus"] = r.consumer_surplus;
          d["total_surplus"] = r.total_surplus;
          d["exit_mass"] = r.exit_mass;
          d["search_mass"] = r.search_mass;
          d["switch_share_x"] = r.switch_share_x;
          d["switch_share_y"] = r.switch_share_y;
          out.append(d);
        }
        return out;
      },
      py::arg("market"), py::arg("param"), py::arg("grid"),
      py::arg("threads") = 1);
  m.def("monopoly_price", &MonopolyPrice, py::arg("dist"), py::arg("c") = 0.0);
  m.def(
      "hotelling_prices",
      [](double mu_x, double mu_y, double c_x, double c_y, double s) {
        return Dict(ToJson(HotellingPrices(mu_x, mu_y, c_x, c_y, s)));
      },
      py::arg("mu_x"), py::arg("mu_y"), py::arg("c_x"), py::arg("c_y"),
      py::arg("s"));
  m.def(
      "oligopoly_solve",
      [](int n, const Distribution& dist, double c, double s) {
        return Dict(ToJson(OligopolySolve(n, dist, c, s)));
      },
      py::arg("n"), py::arg("dist"), py::arg("c"), py::arg("s"));
  m.def(
      "check_lemma1",
      [](const Distribution& d, double c) {
        return Dict(ToJson(CheckLemma1(d, c)));
      },
      py::arg("dist"), py::arg("c") = 0.0);
  m.def(
      "simulate",
      [](const MarketParams& mk, const PriceProfile& p, std::int64_t n,
         std::uint64_t seed, int threads) {
        SimReport r;
        {
          py::gil_scoped_release release;
          r = Simulate(mk, p, n, seed, threads);
        }
        return Dict(ToJson(r));
      },
      py::arg("market"), py::arg("prices"), py::arg("n") = 1000000,
      py::arg("seed") = 1, py::arg("threads") = 1);
}
