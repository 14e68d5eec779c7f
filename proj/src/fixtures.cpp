#include "glsca/fixtures.hpp"

#include "glsca/error.hpp"

namespace glsca {

CartanTriple fixture(const std::string& name) {
  if (name == "b3tilde")
    return validate({{2, -2, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -2, 2}}, {1, 2, 2, 1},
                    {{2, 3}, {1, 2}, {0, 1}});
  if (name == "kronecker") return validate({{2, -2}, {-2, 2}}, {1, 1}, {{0, 1}});
  if (name == "a2tilde")
    return validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "c2tilde")
    return validate({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}}, {2, 1, 2}, {{0, 1}, {1, 2}});
  if (name == "a12") return validate({{2, -1}, {-4, 2}}, {4, 1}, {{0, 1}});
  fail(Errc::BadInput, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"b3tilde", "kronecker", "a2tilde", "c2tilde", "a12"};
}

}  // namespace glsca
