#include "mwiso/report.hpp"

#include <cstdio>

namespace mwiso {

const char* check_status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "PASS";
    case check_status::fail: return "FAIL";
    case check_status::not_applicable: return "NOT_APPLICABLE";
    case check_status::skipped_scale: return "SKIPPED_SCALE";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ordered_json value_json(const value& v) {
  ordered_json j;
  if (!v.expr.empty()) j["expr"] = v.expr;
  switch (v.k) {
    case value::kind::none:
      j["kind"] = "none";
      break;
    case value::kind::exact:
      j["kind"] = "ratio";
      j["num"] = v.r.num();
      j["den"] = v.r.den();
      break;
    case value::kind::real:
      j["kind"] = "float";
      j["value"] = format_double(v.f);
      break;
    case value::kind::integer:
      j["kind"] = "int";
      j["value"] = v.i;
      break;
  }
  return j;
}

ordered_json report_json(const check_report& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  ordered_json inst;
  inst["name"] = r.instance.name;
  inst["family"] = r.instance.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.instance.params) params[k] = v;
  inst["params"] = params;
  j["instance"] = inst;
  if (r.n >= 0) j["n"] = r.n;
  if (!r.mode.empty()) j["mode"] = r.mode;
  j["status"] = check_status_name(r.status);
  if (r.lhs.k != value::kind::none) j["lhs"] = value_json(r.lhs);
  if (r.rhs.k != value::kind::none) j["rhs"] = value_json(r.rhs);
  if (r.slack) j["slack"] = format_double(*r.slack);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.parts.empty()) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : r.parts) {
      ordered_json pj;
      pj["id"] = p.id;
      pj["lhs"] = value_json(p.lhs);
      pj["rhs"] = value_json(p.rhs);
      pj["pass"] = p.pass;
      parts.push_back(pj);
    }
    j["parts"] = parts;
  }
  if (r.repro) {
    ordered_json b;
    b["graph"] = r.repro->graph_text;
    b["perms"] = r.repro->perms_text;
    b["params"] = r.repro->params;
    j["repro"] = b;
  }
  return j;
}

}  // namespace mwiso
