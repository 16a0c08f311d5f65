#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blockomega/permgroup.hpp"

namespace blockomega {

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Catalog names: S<n>, A<n>, C<n>, D<2n> (n >= 3) and Q8 (regular
// representation on 8 points). Throws ParseError for anything else.
GroupSpec catalog_group(std::string_view name);

// First non-comment line "degree n", then one generator per line in cycle
// notation. Blank lines and lines starting with '#' are ignored.
GroupSpec parse_generators(std::string_view text, std::string name = "custom");
GroupSpec read_generator_file(const std::string& path);

}  // namespace blockomega
