#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blx/io.hpp"
#include "blx/oracle.hpp"
#include "blx/parse.hpp"

namespace {

using blx::Json;

struct CommonFlags {
  std::uint64_t seed = 0;
  unsigned trials = 25;
  long coeff_bound = 10;
  bool validate = false;
  std::string format = "json";
  std::string path;
};

void add_common(CLI::App* cmd, CommonFlags& f, const std::string& default_path) {
  f.path = default_path;
  cmd->add_option("--seed", f.seed, "random seed (default 0)");
  cmd->add_option("--trials", f.trials, "certification resampling budget");
  cmd->add_option("--coeff-bound", f.coeff_bound, "entry bound for sampled transformations");
  cmd->add_flag("--validate", f.validate, "cross-check against the other curve family");
  cmd->add_option("--format", f.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--path", f.path, "curve family to use");
}

void emit(const Json& report, const std::string& format) {
  if (format == "text")
    std::cout << blx::render_text(report);
  else
    std::cout << report.dump(2) << "\n";
}

blx::ParamSurface read_surface(const std::string& file) {
  blx::InputObject obj = blx::read_input_file(file);
  if (!obj.is_surface())
    throw blx::input_error(file + " holds a plane map; a surface parametrization is needed");
  return std::get<blx::ParamSurface>(obj.value);
}

blx::PlaneMap read_plane_map(const std::string& file) {
  blx::InputObject obj = blx::read_input_file(file);
  if (obj.is_surface())
    throw blx::input_error(file + " holds a surface parametrization; a plane map is needed");
  return std::get<blx::PlaneMap>(obj.value);
}

int run_mult(const std::string& file, const CommonFlags& f, std::optional<long> degmap,
             std::optional<long> surfdeg) {
  blx::ParamSurface P = read_surface(file);
  blx::NormalizedSurface n = blx::normalize_surface(P, f.seed, f.coeff_bound);
  blx::MultOptions opt;
  opt.path = f.path == "w" ? 'w' : 'k';
  opt.trials = f.trials;
  opt.seed = f.seed;
  opt.coeff_bound = f.coeff_bound;
  opt.validate = f.validate;

  Json report;
  report["schema"] = "blx/1";
  report["command"] = "mult";
  report["input"] = file;
  if (degmap || surfdeg) {
    blx::DegreeFormulaReport rep = blx::degree_formula_report(n.surface, opt, degmap, surfdeg);
    for (auto& bp : rep.base.rational_points)
      bp.point_original = n.param_change.apply_point(bp.point);
    report.update(blx::degree_formula_json(rep));
    report["base_locus"] = blx::base_locus_json(rep.base, &n.param_change);
    report["mult_total"] = report["base_locus"]["mult_total"];
  } else {
    blx::BaseLocusReport rep = blx::mult_base_locus(n.surface, opt);
    for (auto& bp : rep.rational_points)
      bp.point_original = n.param_change.apply_point(bp.point);
    Json body = blx::base_locus_json(rep, &n.param_change);
    report.update(body);
  }
  emit(report, f.format);
  return 0;
}

int run_planemap(const std::string& file, const CommonFlags& f) {
  blx::PlaneMap S = read_plane_map(file);
  blx::NormalizedPlaneMap n = blx::normalize_plane_map(S, f.seed, f.coeff_bound);
  blx::PlaneMultOptions opt;
  opt.path = f.path == "v" ? 'v' : 'j';
  opt.trials = f.trials;
  opt.seed = f.seed;
  opt.coeff_bound = f.coeff_bound;
  opt.validate = f.validate;
  blx::PlaneMapReport rep = blx::plane_map_report(n.map, opt);
  for (auto& bp : rep.rational_points)
    bp.point_original = n.param_change.apply_point(bp.point);

  Json report;
  report["schema"] = "blx/1";
  report["command"] = "planemap";
  report["input"] = file;
  report.update(blx::plane_map_json(rep, &n.param_change));
  emit(report, f.format);
  return 0;
}

int run_compose(const std::string& qfile, const std::string& sfile, const CommonFlags& f,
                long degmap_q, long surfdeg_q) {
  blx::ParamSurface Q = read_surface(qfile);
  blx::PlaneMap S = read_plane_map(sfile);
  blx::CompositionInputs meta{surfdeg_q, degmap_q};
  blx::CompositionOptions opt;
  opt.trials = f.trials;
  opt.seed = f.seed;
  opt.coeff_bound = f.coeff_bound;
  opt.surface_path = f.path == "w" ? 'w' : 'k';
  blx::CompositionReport rep = blx::check_property_P1(Q, S, meta, opt);
  if (rep.mult_q == 0) blx::content_power_check(Q, S, meta, opt, rep);

  Json report;
  report["schema"] = "blx/1";
  report["command"] = "compose";
  report["input_q"] = qfile;
  report["input_s"] = sfile;
  report.update(blx::composition_json(rep, meta));
  emit(report, f.format);
  return 0;
}

int run_oracle_hs(const std::string& file, const std::string& point, const CommonFlags& f) {
  blx::ParamSurface P = read_surface(file);
  std::vector<mpq_class> a;
  {
    std::string cur;
    for (char c : point + ",") {
      if (c == ',') {
        if (cur.empty()) throw blx::input_error("bad --point; expected a,b,c");
        a.emplace_back(cur);
        a.back().canonicalize();
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
  }
  if (a.size() != 3) throw blx::input_error("bad --point; expected three coordinates");
  if (!P.is_base_point(a)) throw blx::input_error("the point is not a base point");
  if (a[2] == 0)
    throw blx::input_error("the oracle works in the affine chart t3 = 1; "
                           "move the base point off the line at infinity first");

  auto [w1, w2] = blx::build_W(P);
  std::map<blx::Var, blx::MPoly> chart{{blx::Var::t3, blx::MPoly(mpq_class(1))}};
  blx::LocalMultResult res = blx::specialized_local_multiplicity(
      w1.substitute(chart), w2.substitute(chart), a[0] / a[2], a[1] / a[2], f.seed);

  Json report;
  report["schema"] = "blx/1";
  report["command"] = "oracle hs";
  report["input"] = file;
  report["point"] = blx::point_json(a);
  report["multiplicity"] =
      blx::sourced(res.value, "local intersection number of the specialized generic curves");
  report["agreement_count"] = res.agreement_count;
  emit(report, f.format);
  return 0;
}

int run_oracle_fiber(const std::string& file, const CommonFlags& f) {
  blx::PlaneMap S = read_plane_map(file);
  blx::NormalizedPlaneMap n = blx::normalize_plane_map(S, f.seed, f.coeff_bound);
  long count = blx::fiber_count_plane(n.map.component_vector(), f.seed);
  Json report;
  report["schema"] = "blx/1";
  report["command"] = "oracle fiber";
  report["input"] = file;
  report["fiber_count"] = blx::sourced(count, "distinct points over a random rational target");
  emit(report, f.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base locus multiplicities of rational surface parametrizations "
               "and plane maps, by resultant contents"};
  app.require_subcommand(1);

  std::string file, qfile, sfile, point = "0,0,1";
  std::optional<long> degmap, surfdeg;
  long degmap_q = 0, surfdeg_q = 0;

  CommonFlags fm;
  auto* mult = app.add_subcommand("mult", "base locus multiplicity of a parametrization");
  mult->add_option("file", file, "input file (P = [...])")->required();
  add_common(mult, fm, "k");
  mult->add_option("--degmap", degmap, "known degree of the induced map");
  mult->add_option("--surfdeg", surfdeg, "known degree of the image surface");

  CommonFlags fp;
  auto* pm = app.add_subcommand("planemap", "degree and base locus of a dominant plane map");
  pm->add_option("file", file, "input file (S = [...])")->required();
  add_common(pm, fp, "j");

  CommonFlags fc;
  auto* comp = app.add_subcommand("compose", "analysis of a reparametrization Q o S");
  comp->add_option("qfile", qfile, "surface input (P = [...])")->required();
  comp->add_option("sfile", sfile, "plane map input (S = [...])")->required();
  add_common(comp, fc, "k");
  comp->add_option("--degmap-q", degmap_q, "degree of the map induced by Q")->required();
  comp->add_option("--surfdeg-q", surfdeg_q, "degree of the image surface of Q")->required();

  CommonFlags fo;
  auto* oracle = app.add_subcommand("oracle", "independent brute-force verifiers");
  oracle->require_subcommand(1);
  auto* hs = oracle->add_subcommand("hs", "local multiplicity at a base point");
  hs->add_option("file", file, "input file (P = [...])")->required();
  hs->add_option("--point", point, "base point a,b,c")->required();
  add_common(hs, fo, "k");
  auto* fiber = oracle->add_subcommand("fiber", "cardinality of a generic fiber");
  fiber->add_option("file", file, "input file (S = [...])")->required();
  add_common(fiber, fo, "j");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mult->parsed()) return run_mult(file, fm, degmap, surfdeg);
    if (pm->parsed()) return run_planemap(file, fp);
    if (comp->parsed()) return run_compose(qfile, sfile, fc, degmap_q, surfdeg_q);
    if (oracle->parsed()) {
      if (hs->parsed()) return run_oracle_hs(file, point, fo);
      if (fiber->parsed()) return run_oracle_fiber(file, fo);
    }
  } catch (const blx::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const blx::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const blx::certification_error& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const blx::oracle_error& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
