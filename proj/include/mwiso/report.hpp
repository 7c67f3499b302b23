#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwiso/ratio.hpp"

namespace mwiso {

using ordered_json = nlohmann::ordered_json;

enum class check_status { pass, fail, not_applicable, skipped_scale };
const char* check_status_name(check_status s);

/// Exact or floating value carried by a report side, with the expression it
/// came from. Floats serialize as 12-significant-digit decimal strings so
/// reports diff cleanly.
struct value {
  enum class kind { none, exact, real, integer };
  kind k = kind::none;
  ratio r;
  double f = 0.0;
  long long i = 0;
  std::string expr;

  static value exact(ratio v, std::string e) {
    value out;
    out.k = kind::exact;
    out.r = v;
    out.expr = std::move(e);
    return out;
  }
  static value real(double v, std::string e) {
    value out;
    out.k = kind::real;
    out.f = v;
    out.expr = std::move(e);
    return out;
  }
  static value integer(long long v, std::string e) {
    value out;
    out.k = kind::integer;
    out.i = v;
    out.expr = std::move(e);
    return out;
  }
};

struct sub_check {
  std::string id;
  value lhs, rhs;
  bool pass = true;
};

struct instance_desc {
  std::string name;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
};

/// Reproduction bundle attached to FAIL reports: enough to rerun the check.
struct repro_bundle {
  std::string graph_text;
  std::string perms_text;
  std::string params;
};

struct check_report {
  std::string check_id;
  instance_desc instance;
  int n = -1;
  std::string mode;
  check_status status = check_status::pass;
  value lhs, rhs;
  std::optional<double> slack;
  std::string note;
  std::vector<sub_check> parts;
  std::optional<repro_bundle> repro;
};

std::string format_double(double x);  // %.12g
ordered_json value_json(const value& v);
ordered_json report_json(const check_report& r);

}  // namespace mwiso
