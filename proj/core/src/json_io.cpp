#include "spectile/json_io.hpp"

#include "spectile/errors.hpp"

#include <json.hpp>

#include <utility>

namespace spectile {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Rational rational_from(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": rationals are \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

RatVec vector_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": expected a nonempty array");
  std::vector<Rational> entries;
  entries.reserve(j.size());
  for (const auto& e : j) entries.push_back(rational_from(e, what));
  return RatVec(std::move(entries));
}

json vector_to(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v.entries()) out.push_back(format_rational(q));
  return out;
}

PeriodicSet periodic_set_from(const json& j) {
  if (!j.is_object()) throw ParseError("periodic set: expected an object");
  if (!j.contains("dim") || !j.contains("R") || !j.contains("offsets")) {
    throw ParseError("periodic set: needs dim, R and offsets");
  }
  const int dim = j.at("dim").get<int>();
  const json& rj = j.at("R");
  if (!rj.is_array() || static_cast<int>(rj.size()) != dim) {
    throw ParseError("periodic set: R must be a dim x dim array of rows");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& rowj : rj) {
    if (!rowj.is_array() || static_cast<int>(rowj.size()) != dim) {
      throw ParseError("periodic set: R must be a dim x dim array of rows");
    }
    std::vector<Rational> row;
    for (const auto& e : rowj) row.push_back(rational_from(e, "R"));
    rows.push_back(std::move(row));
  }
  std::vector<RatVec> offsets;
  for (const auto& oj : j.at("offsets")) {
    RatVec off = vector_from(oj, "offsets");
    if (off.dim() != dim) throw ParseError("periodic set: offset dimension differs from dim");
    offsets.push_back(std::move(off));
  }
  return PeriodicSet::create(RatMat(std::move(rows)), std::move(offsets));
}

json periodic_set_to(const PeriodicSet& ps) {
  json rj = json::array();
  for (const auto& row : ps.lattice().rows()) {
    json rowj = json::array();
    for (const auto& q : row) rowj.push_back(format_rational(q));
    rj.push_back(std::move(rowj));
  }
  json oj = json::array();
  for (const auto& off : ps.offsets()) oj.push_back(vector_to(off));
  return json{{"dim", ps.dim()}, {"R", std::move(rj)}, {"offsets", std::move(oj)}};
}

std::vector<int> group_element_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') {
    throw ParseError("group element keys look like \"(a,b,...)\"");
  }
  std::vector<int> coords;
  std::string body = key.substr(1, key.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) throw ParseError("empty coordinate in group element key");
    coords.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coords;
}

std::string group_element_key(const FiniteGroup& g, std::int64_t element) {
  std::vector<int> coords = g.decode(element);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  out += ')';
  return out;
}

FiniteGroup group_from(const json& j) {
  if (!j.contains("group") || !j.at("group").is_array()) throw ParseError("expected a \"group\" array");
  std::vector<int> orders;
  for (const auto& e : j.at("group")) orders.push_back(e.get<int>());
  return FiniteGroup(std::move(orders));
}

Measure measure_from(const FiniteGroup& g, const json& weights, const char* what) {
  if (!weights.is_object()) throw ParseError(std::string(what) + ": expected an object of weights");
  std::vector<Rational> w(static_cast<std::size_t>(g.order()));
  for (const auto& [key, value] : weights.items()) {
    std::vector<int> coords = group_element_key(key);
    if (static_cast<int>(coords.size()) != g.rank()) {
      throw ParseError(std::string(what) + ": key arity differs from group rank");
    }
    w[static_cast<std::size_t>(g.encode(coords))] = rational_from(value, what);
  }
  return Measure(g, std::move(w));
}

std::int64_t element_from(const FiniteGroup& g, const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + ": elements are \"(a,b,...)\" strings");
  std::vector<int> coords = group_element_key(j.get<std::string>());
  if (static_cast<int>(coords.size()) != g.rank()) {
    throw ParseError(std::string(what) + ": key arity differs from group rank");
  }
  return g.encode(coords);
}

Dim1Form dim1_from(const json& j) { return Dim1Form{rational_from(j.at("alpha"), "alpha")}; }

Dim2Form dim2_from(const json& j) {
  Dim2Form form;
  std::string orientation = j.value("orientation", std::string("column"));
  if (orientation == "column") {
    form.orientation = Dim2Orientation::ColumnShifted;
  } else if (orientation == "row") {
    form.orientation = Dim2Orientation::RowShifted;
  } else {
    throw ParseError("orientation must be \"column\" or \"row\"");
  }
  form.alpha = rational_from(j.at("alpha"), "alpha");
  for (const auto& e : j.at("beta")) form.beta.push_back(rational_from(e, "beta"));
  return form;
}

Dim3Form dim3_from(const json& j) {
  Dim3Form form;
  form.period = j.at("period").get<int>();
  for (const auto& e : j.at("partition")) {
    std::string cls = e.get<std::string>();
    if (cls == "A") {
      form.partition.push_back(ResidueClass::A);
    } else if (cls == "B") {
      form.partition.push_back(ResidueClass::B);
    } else {
      throw ParseError("partition entries must be \"A\" or \"B\"");
    }
  }
  form.alpha1_period = j.value("alpha1_period", 1);
  form.beta1_period = j.value("beta1_period", 1);
  auto table0 = [&](const char* name, std::map<int, Rational>& out) {
    if (!j.contains(name)) return;
    for (const auto& [key, value] : j.at(name).items()) {
      out.emplace(std::stoi(key), rational_from(value, name));
    }
  };
  auto table1 = [&](const char* name, std::map<int, std::vector<Rational>>& out) {
    if (!j.contains(name)) return;
    for (const auto& [key, value] : j.at(name).items()) {
      std::vector<Rational> row;
      for (const auto& e : value) row.push_back(rational_from(e, name));
      out.emplace(std::stoi(key), std::move(row));
    }
  };
  table0("alpha0", form.alpha0);
  table1("alpha1", form.alpha1);
  table0("beta0", form.beta0);
  table1("beta1", form.beta1);
  return form;
}

TowerSpec tower_from(const json& j) {
  TowerSpec spec;
  spec.alpha = rational_from(j.at("alpha"), "alpha");
  for (const auto& tj : j.at("betas")) {
    PeriodicTable table;
    for (const auto& p : tj.at("periods")) table.periods.push_back(p.get<int>());
    for (const auto& v : tj.at("values")) table.values.push_back(rational_from(v, "values"));
    spec.betas.push_back(std::move(table));
  }
  return spec;
}

CrossProductSpec cross_from(const json& j) {
  CrossProductSpec spec{periodic_set_from(j.at("left")), periodic_set_from(j.at("right")), {}};
  for (const auto& bj : j.at("beta")) spec.beta.push_back(vector_from(bj, "beta"));
  return spec;
}

json dim1_to(const Dim1Form& f) { return json{{"kind", "dim1"}, {"alpha", format_rational(f.alpha)}}; }

json dim2_to(const Dim2Form& f) {
  json beta = json::array();
  for (const auto& b : f.beta) beta.push_back(format_rational(b));
  return json{{"kind", "dim2"},
              {"orientation", f.orientation == Dim2Orientation::ColumnShifted ? "column" : "row"},
              {"alpha", format_rational(f.alpha)},
              {"beta", std::move(beta)}};
}

json dim3_to(const Dim3Form& f) {
  json partition = json::array();
  for (ResidueClass c : f.partition) partition.push_back(c == ResidueClass::A ? "A" : "B");
  json alpha0 = json::object();
  for (const auto& [r, v] : f.alpha0) alpha0[std::to_string(r)] = format_rational(v);
  json beta0 = json::object();
  for (const auto& [r, v] : f.beta0) beta0[std::to_string(r)] = format_rational(v);
  auto table1 = [](const std::map<int, std::vector<Rational>>& t) {
    json out = json::object();
    for (const auto& [r, row] : t) {
      json rowj = json::array();
      for (const auto& v : row) rowj.push_back(format_rational(v));
      out[std::to_string(r)] = std::move(rowj);
    }
    return out;
  };
  return json{{"kind", "dim3"},
              {"period", f.period},
              {"partition", std::move(partition)},
              {"alpha0", std::move(alpha0)},
              {"alpha1_period", f.alpha1_period},
              {"alpha1", table1(f.alpha1)},
              {"beta0", std::move(beta0)},
              {"beta1_period", f.beta1_period},
              {"beta1", table1(f.beta1)}};
}

}  // namespace

PeriodicSet parse_periodic_set(const std::string& text) { return periodic_set_from(parse_text(text)); }

std::string periodic_set_to_json(const PeriodicSet& ps, int indent) {
  return periodic_set_to(ps).dump(indent);
}

ConstructRequest parse_construct_request(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind")) throw ParseError("construction request needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  ConstructRequest req;
  if (kind == "dim1") {
    req.kind = ConstructRequest::Kind::Dim1;
    req.dim1 = dim1_from(j);
  } else if (kind == "dim2") {
    req.kind = ConstructRequest::Kind::Dim2;
    req.dim2 = dim2_from(j);
  } else if (kind == "dim3") {
    req.kind = ConstructRequest::Kind::Dim3;
    req.dim3 = dim3_from(j);
  } else if (kind == "tower") {
    req.kind = ConstructRequest::Kind::Tower;
    req.tower = tower_from(j);
  } else if (kind == "cross") {
    req.kind = ConstructRequest::Kind::Cross;
    req.cross = cross_from(j);
  } else {
    throw ParseError("unknown construction kind: " + kind);
  }
  return req;
}

PeriodicSet build_construct(const ConstructRequest& request) {
  switch (request.kind) {
    case ConstructRequest::Kind::Dim1: return build_1d(*request.dim1);
    case ConstructRequest::Kind::Dim2: return build_2d(*request.dim2);
    case ConstructRequest::Kind::Dim3: return build_3d(*request.dim3);
    case ConstructRequest::Kind::Tower: return build_tower(*request.tower);
    case ConstructRequest::Kind::Cross: return cross_product(*request.cross);
  }
  throw ParseError("unknown construction kind");
}

std::string recognition_to_json(const Recognition& rec, int indent) {
  json j;
  switch (rec.kind) {
    case Recognition::Kind::Dim1:
      j["form"] = dim1_to(*rec.dim1);
      break;
    case Recognition::Kind::Dim2:
      j["form"] = dim2_to(*rec.dim2);
      break;
    case Recognition::Kind::Dim3:
      j["form"] = dim3_to(*rec.dim3);
      break;
    case Recognition::Kind::NotCatalogForm:
      j["form"] = nullptr;
      break;
  }
  j["recognized"] = rec.kind != Recognition::Kind::NotCatalogForm;
  j["translation"] = vector_to(rec.translation);
  j["permutation"] = rec.permutation;
  j["alternative_permutations"] = rec.alternative_permutations;
  return j.dump(indent);
}

MeasurePairInput parse_measure_pair(const std::string& text) {
  json j = parse_text(text);
  FiniteGroup g = group_from(j);
  if (!j.contains("mu") || !j.contains("nu")) throw ParseError("measure pair needs \"mu\" and \"nu\"");
  MeasurePairInput input{measure_from(g, j.at("mu"), "mu"), measure_from(g, j.at("nu"), "nu")};
  input.relation = j.value("relation", std::string("spectral"));
  if (input.relation != "spectral" && input.relation != "tiling" && input.relation != "both") {
    throw ParseError("relation must be \"spectral\", \"tiling\" or \"both\"");
  }
  return input;
}

std::string measure_to_json(const Measure& m, int indent) {
  json weights = json::object();
  for (std::int64_t x : m.support()) {
    weights[group_element_key(m.group(), x)] = format_rational(m.weight(x));
  }
  json j{{"group", m.group().cyclic_orders()}, {"weights", std::move(weights)}};
  return j.dump(indent);
}

UncertaintyInput parse_uncertainty_input(const std::string& text) {
  json j = parse_text(text);
  FiniteGroup g = group_from(j);
  if (!j.contains("mu") || !j.contains("nu")) throw ParseError("uncertainty input needs \"mu\" and \"nu\"");
  UncertaintyInput input{measure_from(g, j.at("mu"), "mu"), measure_from(g, j.at("nu"), "nu"),
                         std::nullopt, std::nullopt, std::nullopt, 0};
  if (j.contains("f")) {
    std::vector<Cplx> f(static_cast<std::size_t>(g.order()));
    for (const auto& [key, value] : j.at("f").items()) {
      std::vector<int> coords = group_element_key(key);
      if (!value.is_array() || value.size() != 2) throw ParseError("f values are [re, im] pairs");
      f[static_cast<std::size_t>(g.encode(coords))] = Cplx(value[0].get<double>(), value[1].get<double>());
    }
    input.f = std::move(f);
  }
  auto subset = [&](const char* name) -> std::optional<std::vector<std::int64_t>> {
    if (!j.contains(name)) return std::nullopt;
    std::vector<std::int64_t> out;
    for (const auto& e : j.at(name)) out.push_back(element_from(g, e, name));
    return out;
  };
  input.A = subset("A");
  input.B = subset("B");
  if (j.contains("trials")) input.trials = j.at("trials").get<std::uint64_t>();
  return input;
}

}  // namespace spectile
