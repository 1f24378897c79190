#ifndef BLX_PARSE_HPP
#define BLX_PARSE_HPP

#include <string>
#include <string_view>

#include "blx/mpoly.hpp"

namespace blx {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Polynomial expressions over the fixed variable universe with
// integer or rational (num/den) literals and + - * ^ ( ).
MPoly parse_poly(std::string_view text);

// Canonical text form; parse_poly(format_poly(f)) == f.
std::string format_poly(const MPoly& f);

}  // namespace blx

#endif
