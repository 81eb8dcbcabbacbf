#include "quadperiod/serialize.hpp"

#include "quadperiod/errors.hpp"

namespace qp {

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw SyntaxError("expected integer or decimal string");
}

std::string value_string(const Real& v, int digits) { return v.decimal(digits); }

}  // namespace

Json json_int(const Int& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return n.convert_to<std::int64_t>();
  return n.str();
}

Json to_json(const Real& x) {
  switch (x.kind()) {
    case Real::Kind::rational:
      return Json{{"kind", "rational"},
                  {"num", num(x.as_rational()).str()},
                  {"den", den(x.as_rational()).str()}};
    case Real::Kind::surd: {
      const auto& s = x.as_surd();
      return Json{{"kind", "surd"},
                  {"p", s.p.str()},
                  {"q", s.q.str()},
                  {"r", s.r.str()},
                  {"D", s.d.str()}};
    }
    case Real::Kind::interval: {
      const auto& iv = x.as_interval();
      return Json{{"kind", "interval"},
                  {"lo", iv.lower_hex()},
                  {"hi", iv.upper_hex()},
                  {"prec", static_cast<long>(iv.precision())}};
    }
  }
  throw DomainError("unreachable");
}

Real real_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational")
    return Real::rational(Rat(Int(j.at("num").get<std::string>()),
                              Int(j.at("den").get<std::string>())));
  if (kind == "surd")
    return Real::surd(Int(j.at("p").get<std::string>()), Int(j.at("q").get<std::string>()),
                      Int(j.at("r").get<std::string>()), Int(j.at("D").get<std::string>()));
  if (kind == "interval")
    return Real::interval(Interval::from_endpoints_hex(
        j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
        static_cast<mpfr_prec_t>(j.at("prec").get<long>())));
  throw SyntaxError("unknown real kind: " + kind);
}

Json to_json(const QForm& q) { return Json::array({json_int(q.a), json_int(q.b), json_int(q.c)}); }

QForm form_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SyntaxError("form must be [a,b,c]");
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({json_int(m.r), json_int(m.s)}),
                      Json::array({json_int(m.t), json_int(m.u)})});
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return coeffs;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return IntPoly(std::move(coeffs));
}

Json to_json(const FormClass& cls) {
  Json simple = Json::array(), reduced = Json::array();
  for (const auto& q : cls.simple_cycle) simple.push_back(to_json(q));
  for (const auto& q : cls.reduced_cycle) reduced.push_back(to_json(q));
  return Json{{"simple_cycle", simple},
              {"reduced_cycle", reduced},
              {"representative", to_json(cls.representative)}};
}

Json class_dump(const Int& D, Group group, const std::vector<FormClass>& classes) {
  Json arr = Json::array();
  for (const auto& cls : classes) arr.push_back(to_json(cls));
  return Json{{"D", json_int(D)},
              {"group", group == Group::gamma1 ? "Gamma1" : "Gamma"},
              {"classes", arr}};
}

namespace {

template <typename Step>
Json step_common(const Step& st, int digits) {
  Json j;
  j["i"] = st.index;
  if (st.digit) j["digit"] = json_int(*st.digit);
  j["x"] = st.state ? value_string(*st.state, digits) : "inf";
  j["matrix"] = to_json(st.gamma);
  j["p"] = json_int(st.p_prev);
  j["q"] = json_int(st.q_prev);
  j["delta"] = value_string(st.delta, digits);
  return j;
}

}  // namespace

Json to_json(const PlusStep& st, int digits) { return step_common(st, digits); }
Json to_json(const MinusStep& st, int digits) { return step_common(st, digits); }

Json to_json(const SlowStep& st, int digits) {
  Json j;
  j["i"] = st.index;
  switch (st.branch) {
    case SlowBranch::shift_up: j["branch"] = "shift_up"; break;
    case SlowBranch::flip: j["branch"] = "flip"; break;
    case SlowBranch::shift_down: j["branch"] = "shift_down"; break;
  }
  j["x"] = value_string(st.state, digits);
  j["matrix"] = to_json(st.gamma);
  return j;
}

Json to_json(const SumResult& r, int digits) {
  Json j;
  j["value"] = value_string(r.value, digits);
  j["exact"] = r.exact;
  if (r.value.is_rational()) {
    j["rational"] = Json{{"num", num(r.value.as_rational()).str()},
                         {"den", den(r.value.as_rational()).str()}};
  }
  j["error_bound"] = r.error_bound().convert_to<double>();
  j["terms"] = r.terms;
  j["steps"] = r.steps;
  j["tolerance_met"] = r.tolerance_met;
  j["tail_certified"] = r.tail_certified;
  if (!r.ledger.empty()) {
    Json rows = Json::array();
    for (const auto& row : r.ledger) {
      rows.push_back(Json{{"i", row.index},
                          {"shift", row.shift},
                          {"base", to_json(row.base)},
                          {"form", to_json(row.image)},
                          {"matrix", to_json(row.gamma)},
                          {"value", value_string(row.value, digits)},
                          {"included", row.included}});
    }
    j["ledger"] = rows;
  }
  return j;
}

Json to_json(const ZagierTables& t, int digits) {
  Json lists = Json::array();
  for (const auto& list : t.lists) {
    Json rows = Json::array();
    for (const auto& row : list.rows) {
      rows.push_back(Json{{"i", row.index},
                          {"form", to_json(row.form)},
                          {"value", value_string(row.value, digits)},
                          {"cond_infinity", row.cond_infinity},
                          {"cond_floor", row.cond_floor},
                          {"included", row.included}});
    }
    lists.push_back(Json{{"base", to_json(list.base)},
                         {"rows", rows},
                         {"included_sum", value_string(list.included_sum, digits)},
                         {"full_sum", value_string(list.full_sum, digits)}});
  }
  return Json{{"lists", lists}, {"total", value_string(t.total, digits)}};
}

Json to_json(const BijectionAudit& a) {
  return Json{{"pass", a.pass},
              {"pairs", a.pairs},
              {"target_size", a.target_size},
              {"failure", a.failure}};
}

Json to_json(const IdentityReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items) {
    items.push_back(Json{{"identity", item.identity},
                         {"sample", item.sample},
                         {"residual_bound", item.residual_bound.convert_to<double>()},
                         {"pass", item.pass}});
  }
  return Json{{"pass", r.pass}, {"items", items}};
}

}  // namespace qp
