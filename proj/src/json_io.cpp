#include "qcount/json_io.hpp"

#include <stdexcept>

namespace qcount {

json poly_to_json(const QPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

QPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigRational> coeffs;
  for (const auto& item : j) coeffs.push_back(rational_from_string(item.get<std::string>()));
  return QPolynomial(std::move(coeffs));
}

json ratfunc_to_json(const RatFunc& f) {
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json partition_to_json(const Partition& p) {
  json arr = json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

json dimvector_to_json(const DimVector& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

DimVector dimvector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("dimension vector JSON must be an array");
  return DimVector(j.get<std::vector<int>>());
}

json quiver_to_json(const Quiver& q) {
  return json{{"n", q.n}, {"arrows", q.arrows}};
}

Quiver quiver_from_json(const json& j) {
  int n = j.at("n").get<int>();
  auto rows = j.at("arrows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("arrows must be n x n");
  std::vector<std::vector<int>> arrows;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("arrows must be n x n");
    arrows.push_back(row.get<std::vector<int>>());
  }
  return Quiver(n, std::move(arrows));
}

json stability_to_json(const Stability& s) { return json{{"theta", s.weights}}; }

Stability stability_from_json(const json& j) {
  return Stability(j.at("theta").get<std::vector<int>>());
}

json series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& [alpha, coeff] : s.coeffs())
    arr.push_back(json{{"alpha", dimvector_to_json(alpha)}, {"coeff", ratfunc_to_json(coeff)}});
  return arr;
}

TruncatedSeries series_from_json(const json& j, const SeriesBox& box) {
  TruncatedSeries s(box);
  for (const auto& item : j)
    s.set_coeff(dimvector_from_json(item.at("alpha")), ratfunc_from_json(item.at("coeff")));
  return s;
}

}  // namespace qcount
