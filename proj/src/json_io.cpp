#include "slantlab/json_io.hpp"

#include <stdexcept>

namespace slantlab {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex pair_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Json to_json(const CircleFunction& f) {
  Json coeffs = Json::array();
  for (int n = -f.band(); n <= f.band(); ++n)
    coeffs.push_back(complex_pair(f.coeff(n)));
  return Json{{"band", f.band()}, {"coeffs", coeffs}};
}

CircleFunction circle_fn_from_json(const Json& j) {
  const int band = j.at("band").get<int>();
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != 2 * band + 1)
    throw std::invalid_argument("circle function JSON needs 2*band+1 coefficients");
  CircleFunction f(band);
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
    f.set_coeff(i - band, pair_complex(coeffs[i]));
  return f;
}

Json to_json(const FiniteBlaschke& b) {
  Json zeros = Json::array();
  for (const Complex& a : b.zeros()) zeros.push_back(complex_pair(a));
  return Json{{"constant", complex_pair(b.constant())}, {"zeros", zeros}};
}

FiniteBlaschke blaschke_from_json(const Json& j) {
  std::vector<Complex> zeros;
  for (const Json& z : j.at("zeros")) zeros.push_back(pair_complex(z));
  return FiniteBlaschke(pair_complex(j.at("constant")), std::move(zeros));
}

Json to_json(const SpaceElement& e) {
  Json coords = Json::array();
  for (int i = 0; i < e.coords.size(); ++i)
    coords.push_back(complex_pair(e.coords(i)));
  return Json{{"space_id", e.space->id()}, {"coords", coords}};
}

Json to_json(const OperatorMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.entries.rows(); ++r)
    for (int c = 0; c < m.entries.cols(); ++c)
      entries.push_back(complex_pair(m.entries(r, c)));
  return Json{{"rows", static_cast<int>(m.entries.rows())},
              {"cols", static_cast<int>(m.entries.cols())},
              {"k", m.k},
              {"entries", entries}};
}

Json to_json(const ProductReport& r) {
  Json symbols = Json::object();
  for (const auto& [name, fn] : r.symbols) symbols[name] = to_json(fn);
  Json residuals = Json::object();
  for (const auto& [name, res] : r.residuals) residuals[name] = res;
  Json out{{"member", r.member},
           {"order", r.order},
           {"symbols", symbols},
           {"residuals", residuals}};
  if (r.product) out["product"] = to_json(*r.product);
  return out;
}

Json verdict_json(const std::string& test, double residual, double tol,
                  bool pass, const Json& witness) {
  Json v{{"test", test}, {"residual", residual}, {"tol", tol}, {"pass", pass}};
  if (!witness.is_null()) v["witness"] = witness;
  return v;
}

}  // namespace slantlab
