#ifndef BLX_IO_HPP
#define BLX_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "blx/baselocus.hpp"
#include "blx/composition.hpp"
#include "blx/planemaps.hpp"

namespace blx {

using Json = nlohmann::ordered_json;

class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixture files hold one definition per file:
//   P = [poly, poly, poly, poly]   a surface parametrization
//   S = [poly, poly, poly]         a plane map
// with '#' comments and insignificant whitespace.
struct InputObject {
  std::variant<ParamSurface, PlaneMap> value;
  bool is_surface() const { return std::holds_alternative<ParamSurface>(value); }
};

InputObject read_input_file(const std::string& path);

// JSON report pieces. Every number is wrapped together with the name of
// the computation that produced it.
Json sourced(long value, const std::string& source);
Json point_json(const std::vector<mpq_class>& pt);
Json base_locus_json(const BaseLocusReport& rep, const ProjTransform* param_change);
Json degree_formula_json(const DegreeFormulaReport& rep);
Json plane_map_json(const PlaneMapReport& rep, const ProjTransform* param_change);
Json composition_json(const CompositionReport& rep, const CompositionInputs& meta);

std::string render_text(const Json& report);

}  // namespace blx

#endif
