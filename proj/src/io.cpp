#include "blx/io.hpp"

#include <fstream>
#include <sstream>

#include "blx/parse.hpp"

namespace blx {

namespace {

std::string strip_comments(const std::string& text) {
  std::ostringstream out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    out << (pos == std::string::npos ? line : line.substr(0, pos)) << '\n';
  }
  return out.str();
}

std::vector<MPoly> parse_poly_list(const std::string& body, std::size_t expected) {
  // split on commas at bracket depth zero
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != expected)
    throw input_error("expected " + std::to_string(expected) + " polynomials, found " +
                      std::to_string(parts.size()));
  std::vector<MPoly> polys;
  for (const auto& p : parts) polys.push_back(parse_poly(p));
  return polys;
}

}  // namespace

InputObject read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = strip_comments(buf.str());

  auto eq = text.find('=');
  if (eq == std::string::npos) throw input_error("missing '=' in " + path);
  std::string head = text.substr(0, eq);
  std::string tail = text.substr(eq + 1);
  auto open = tail.find('[');
  auto close = tail.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw input_error("missing bracketed polynomial list in " + path);
  std::string body = tail.substr(open + 1, close - open - 1);

  std::string kind;
  for (char c : head)
    if (!std::isspace(static_cast<unsigned char>(c))) kind.push_back(c);

  try {
    if (kind == "P") {
      auto polys = parse_poly_list(body, 4);
      InputObject obj{ParamSurface::from_components({polys[0], polys[1], polys[2], polys[3]})};
      return obj;
    }
    if (kind == "S") {
      auto polys = parse_poly_list(body, 3);
      InputObject obj{PlaneMap::from_components({polys[0], polys[1], polys[2]})};
      return obj;
    }
  } catch (const parse_error& e) {
    throw input_error(std::string("bad polynomial in ") + path + ": " + e.what());
  } catch (const poly_error& e) {
    throw input_error(std::string("invalid input in ") + path + ": " + e.what());
  }
  throw input_error("unknown definition '" + kind + "' in " + path +
                    " (expected P = [...] or S = [...])");
}

Json sourced(long value, const std::string& source) {
  return Json{{"value", value}, {"source", source}};
}

Json point_json(const std::vector<mpq_class>& pt) {
  Json a = Json::array();
  for (const auto& c : pt) a.push_back(c.get_str());
  return a;
}

namespace {

Json certificate_json(const GenericityCertificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  return Json{{"all_pass", cert.all_pass()}, {"checks", checks}};
}

Json transform_json(const ProjTransform& L) {
  Json rows = Json::array();
  for (const auto& row : L.m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Json base_locus_json(const BaseLocusReport& rep, const ProjTransform* param_change) {
  Json j;
  j["mult_total"] = sourced(rep.mult_total, "parameter degree of the resultant content");
  j["path"] = std::string(1, rep.path);
  j["content"] = format_poly(rep.content);
  j["primpart_degree"] = sourced(rep.primpart_degree, "parameter degree of the primitive part");
  Json pts = Json::array();
  for (const auto& bp : rep.rational_points) {
    Json p;
    p["point"] = point_json(bp.point);
    if (!bp.point_original.empty()) p["point_original"] = point_json(bp.point_original);
    p["multiplicity"] = sourced(bp.multiplicity, "exponent of the point's line in the content");
    p["curve_multiplicity"] =
        sourced(bp.curve_multiplicity, "minimum vanishing order of the components");
    p["tangent_cone"] = format_poly(bp.tangent_cone);
    pts.push_back(p);
  }
  j["rational_points"] = pts;
  j["residual_degree"] = sourced(rep.residual_degree, "content degree not carried by rational points");
  j["residual"] = format_poly(rep.residual);
  j["genericity"] = certificate_json(rep.genericity);
  j["transform_used"] = transform_json(rep.transform_used);
  if (param_change) j["parameter_change"] = transform_json(*param_change);
  j["seed"] = rep.seed;
  j["trials_used"] = rep.trials_used;
  return j;
}

Json degree_formula_json(const DegreeFormulaReport& rep) {
  Json j;
  j["deg_p"] = sourced(rep.deg_p, "common degree of the components");
  j["mult_total"] = sourced(rep.mult_total, "parameter degree of the resultant content");
  j["primpart_degree"] = sourced(rep.primpart_degree, "deg^2 - mult via the primitive part");
  if (rep.degmap) j["degmap"] = sourced(*rep.degmap, rep.degmap_provenance);
  if (rep.surface_degree)
    j["surface_degree"] = sourced(*rep.surface_degree, rep.surface_degree_provenance);
  j["degree_split_holds"] = rep.degree_split_holds;
  j["sqrt_bound_holds"] = rep.sqrt_bound_holds;
  if (rep.birational_case_holds) j["birational_case_holds"] = *rep.birational_case_holds;
  j["nonsquare_obstruction"] = rep.nonsquare_obstruction;
  return j;
}

Json plane_map_json(const PlaneMapReport& rep, const ProjTransform* param_change) {
  Json j;
  j["deg"] = sourced(rep.deg_s, "common degree of the components");
  j["mult"] = sourced(rep.mult_total, "parameter degree of the resultant content");
  j["degmap"] = sourced(rep.degmap, "deg^2 - mult");
  j["birational"] = rep.birational;
  j["content"] = format_poly(rep.content);
  j["primpart_degree"] = sourced(rep.primpart_degree, "parameter degree of the primitive part");
  Json pts = Json::array();
  for (const auto& bp : rep.rational_points) {
    Json p;
    p["point"] = point_json(bp.point);
    if (!bp.point_original.empty()) p["point_original"] = point_json(bp.point_original);
    p["multiplicity"] = sourced(bp.multiplicity, "exponent of the point's line in the content");
    pts.push_back(p);
  }
  j["rational_points"] = pts;
  j["residual_degree"] = sourced(rep.residual_degree, "content degree not carried by rational points");
  j["genericity"] = certificate_json(rep.genericity);
  j["transform_used"] = transform_json(rep.transform_used);
  if (param_change) j["parameter_change"] = transform_json(*param_change);
  j["seed"] = rep.seed;
  j["trials_used"] = rep.trials_used;
  return j;
}

Json composition_json(const CompositionReport& rep, const CompositionInputs& meta) {
  Json j;
  Json raw = Json::array();
  for (const auto& r : rep.raw) raw.push_back(format_poly(r));
  j["raw_components"] = raw;
  j["common_factor"] = format_poly(rep.common_factor);
  Json comps = Json::array();
  for (const auto& c : rep.composed.p) comps.push_back(format_poly(c));
  j["composed_components"] = comps;
  j["deg_q"] = sourced(rep.deg_q, "common degree of the components");
  j["deg_s"] = sourced(rep.deg_s, "common degree of the components");
  j["deg_p"] = sourced(rep.deg_p, "degree after dividing out the common factor");
  j["surfdeg_q"] = sourced(meta.surfdeg_q, "supplied");
  j["degmap_q"] = sourced(meta.degmap_q, "supplied");
  j["mult_q"] = sourced(rep.mult_q, "base locus of Q");
  j["mult_s"] = sourced(rep.mult_s, "base locus of S");
  j["mult_p"] = sourced(rep.mult_p, "base locus of the composition");
  j["rhs"] = sourced(rep.rhs, "deg(S)^2 mult(B(Q)) + surfdeg(Q) degmap(Q) mult(B(S))");
  j["degmap_s"] = sourced(rep.degmap_s, "deg^2 - mult");
  j["degmap_p"] = sourced(rep.degmap_p, "degmap(Q) * degmap(S)");
  j["statements"] = Json{{"gcd_trivial", rep.statement_gcd_trivial},
                         {"degree_multiplies", rep.statement_degree_multiplies},
                         {"mult_formula", rep.statement_mult_formula},
                         {"agree", rep.statements_agree}};
  j["deg_inequality_holds"] = rep.deg_inequality_holds;
  j["mult_inequality_holds"] = rep.mult_inequality_holds;
  j["degree_mult_identity_holds"] = rep.degree_mult_identity_holds;
  if (rep.no_base_points_case_applies) {
    Json nbp;
    nbp["applies"] = *rep.no_base_points_case_applies;
    if (*rep.no_base_points_case_applies) {
      nbp["gcd_trivial"] = *rep.nbp_gcd_trivial;
      nbp["degree_multiplies"] = *rep.nbp_degree_multiplies;
      nbp["mult_formula"] = *rep.nbp_mult_formula;
    }
    j["no_base_points_case"] = nbp;
  }
  if (rep.content_power_holds) {
    j["content_power"] = Json{
        {"holds", *rep.content_power_holds},
        {"degree_holds", *rep.content_power_degree_holds},
        {"exponent", sourced(rep.content_power_exponent, "surfdeg(Q) * degmap(Q)")},
        {"content_p", format_poly(rep.content_p)},
        {"content_s", format_poly(rep.content_s)},
    };
  }
  j["reports"] = Json{{"q", base_locus_json(rep.q_report, nullptr)},
                      {"s", plane_map_json(rep.s_report, nullptr)},
                      {"p", base_locus_json(rep.p_report, nullptr)}};
  return j;
}

namespace {

void render_lines(const Json& v, const std::string& prefix, std::ostringstream& out) {
  if (v.is_object()) {
    if (v.contains("value") && v.contains("source") && v.size() == 2) {
      out << prefix << " = " << v["value"] << "   [" << v["source"].get<std::string>() << "]\n";
      return;
    }
    for (const auto& [k, val] : v.items()) {
      render_lines(val, prefix.empty() ? k : prefix + "." + k, out);
    }
    return;
  }
  if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v)
      if (!(e.is_string() || e.is_number() || e.is_boolean())) scalars = false;
    if (scalars) {
      out << prefix << " = " << v.dump() << "\n";
      return;
    }
    std::size_t i = 0;
    for (const auto& e : v) render_lines(e, prefix + "[" + std::to_string(i++) + "]", out);
    return;
  }
  out << prefix << " = " << v.dump() << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render_lines(report, "", out);
  return out.str();
}

}  // namespace blx
