#pragma once

#include "glsca/cartan.hpp"

#include <string>
#include <vector>

namespace glsca {

/// Built-in triples: b3tilde, kronecker, a2tilde, c2tilde, a12.
CartanTriple fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace glsca
