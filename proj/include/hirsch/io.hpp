#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <json.hpp>

#include "hirsch/polyhedron.hpp"

namespace hirsch {

/// Contents of an H- or V-file. Besides the cdd-style block, a file may carry
/// structured comments: "# labels: a b c" (row labels for H, vertex labels
/// for V) and "# recipe {json}" describing how it was built. Other '#' lines
/// are ignored.
struct PolyFile {
  std::variant<HPolyhedron, VPolyhedron> poly;
  std::optional<nlohmann::json> recipe;

  bool is_h() const { return std::holds_alternative<HPolyhedron>(poly); }
  const HPolyhedron& h() const { return std::get<HPolyhedron>(poly); }
  const VPolyhedron& v() const { return std::get<VPolyhedron>(poly); }
};

PolyFile read_polyfile(std::istream& in);
PolyFile read_polyfile(const std::string& text);

void write_hfile(std::ostream& out, const HPolyhedron& h,
                 const std::optional<nlohmann::json>& recipe = std::nullopt);
void write_vfile(std::ostream& out, const VPolyhedron& v,
                 const std::optional<nlohmann::json>& recipe = std::nullopt);
void write_polyfile(std::ostream& out, const PolyFile& f);
std::string to_text(const PolyFile& f);

}  // namespace hirsch
