#include "isolab/serialize.hpp"

#include "isolab/errors.hpp"

namespace isolab::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ValidationError(path + ": " + what); }

json points_json(const std::vector<std::string>& labels, const std::vector<int>& mults) {
  json out = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) out.push_back({{"label", labels[i]}, {"mult", mults[i]}});
  return out;
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const ZPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const CurvePoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const ZMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const covers::Divisor& d) {
  json out = json::object();
  for (const auto& [label, w] : d.weights()) out[label] = w;
  return out;
}

json to_json(const covers::FiberModel& f) {
  std::vector<std::string> labels;
  std::vector<int> mults;
  for (const auto& p : f.points) {
    labels.push_back(p.label);
    mults.push_back(p.mult);
  }
  json out = {{"base_label", f.base_label}, {"kind", covers::to_string(f.kind)}, {"points", points_json(labels, mults)}};
  if (!f.curve.empty()) out["curve"] = f.curve;
  return out;
}

json to_json(const covers::PairFiber& f) {
  std::vector<int> mults;
  for (const auto& p : f.points) mults.push_back(p.mult);
  json out = {{"base_label", f.base_label},
              {"diagonal_removed", f.diagonal_removed},
              {"degree", f.degree()},
              {"points", points_json(f.labels(), mults)}};
  if (!f.involution.empty()) {
    json inv = json::object();
    const auto labels = f.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) inv[labels[i]] = labels[f.involution[i]];
    out["involution"] = std::move(inv);
  }
  return out;
}

json to_json(const covers::SymFiber& f) {
  std::vector<int> mults;
  for (const auto& p : f.points) mults.push_back(p.mult);
  const auto labels = f.labels();
  json sigma = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) sigma[labels[i]] = labels[f.sigma[i]];
  return {{"base_label", f.base_label},
          {"kind", covers::to_string(f.kind)},
          {"degree", f.degree()},
          {"points", points_json(labels, mults)},
          {"sigma", std::move(sigma)},
          {"sigma_fixed_point_free", f.sigma_fixed_point_free()}};
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

std::string join(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "input" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing field");
  return *it;
}

Rational rational_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>(), 1);
  if (!j.is_string()) fail(path, "expected a rational as a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

ZPoly zpoly_from(const json& j, const std::string& path) {
  if (!j.is_array()) return ZPoly(rational_from(j, path));
  std::vector<Rational> c;
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from(j[k], join(path, k)));
  return ZPoly(std::move(c));
}

namespace {
template <class R, class Read>
Matrix<R> matrix_from(const json& j, const std::string& path, Read read) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  std::vector<std::vector<R>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = join(path, i);
    if (!j[i].is_array()) fail(rp, "expected an array");
    if (j[i].size() != j[0].size()) fail(rp, "row length differs from the first row");
    std::vector<R> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(read(j[i][k], join(rp, k)));
    rows.push_back(std::move(row));
  }
  return Matrix<R>::from_rows(rows);
}
} // namespace

QMatrix qmatrix_from(const json& j, const std::string& path) { return matrix_from<Rational>(j, path, rational_from); }

ZMatrix zmatrix_from(const json& j, const std::string& path) { return matrix_from<ZPoly>(j, path, zpoly_from); }

long long integer_from(const json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  fail(path, "expected an integer");
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

covers::Divisor divisor_from(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object {label: weight}");
  covers::Divisor d;
  for (auto it = j.begin(); it != j.end(); ++it) d.add(it.key(), integer_from(it.value(), join(path, it.key())));
  return d;
}

covers::FiberModel fiber_from(const json& j, const std::string& path) {
  covers::FiberModel f;
  f.base_label = string_from(field(j, "base_label", path), join(path, "base_label"));
  const std::string kind = string_from(field(j, "kind", path), join(path, "kind"));
  try {
    f.kind = covers::fiber_kind_from_string(kind);
  } catch (const ValidationError& e) {
    fail(join(path, "kind"), e.what());
  }
  const std::string pp = join(path, "points");
  const json& pts = field(j, "points", path);
  if (!pts.is_array()) fail(pp, "expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string ip = join(pp, i);
    covers::FiberPoint p;
    p.label = string_from(field(pts[i], "label", ip), join(ip, "label"));
    p.mult = static_cast<int>(integer_from(field(pts[i], "mult", ip), join(ip, "mult")));
    f.points.push_back(std::move(p));
  }
  if (j.contains("curve")) f.curve = string_from(j["curve"], join(path, "curve"));
  try {
    f.validate();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return f;
}

} // namespace isolab::io
