#include "blockomega/catalog.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "blockomega/errors.hpp"

namespace blockomega {

namespace {

std::size_t parse_size(std::string_view digits, std::string_view context) {
  std::size_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("bad number in '" + std::string(context) + "'");
  }
  return value;
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<std::uint32_t> cycle(last - first + 1);
  std::iota(cycle.begin(), cycle.end(), static_cast<std::uint32_t>(first));
  return Permutation::from_cycles(degree, {cycle});
}

GroupSpec quaternion8() {
  // Element (s, u) = (-1)^s * u with u in {1, i, j, k}; point index 2u + s.
  static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
  auto right_mult = [&](int by) {
    std::vector<std::uint32_t> img(8);
    for (int u = 0; u < 4; ++u) {
      for (int s = 0; s < 2; ++s) {
        const int nu = unit[u][by];
        const int ns = s ^ sign[u][by];
        img[2 * u + s] = static_cast<std::uint32_t>(2 * nu + ns);
      }
    }
    return Permutation(std::move(img));
  };
  return {"Q8", 8, {right_mult(1), right_mult(2)}};
}

}  // namespace

GroupSpec catalog_group(std::string_view name) {
  if (name == "Q8") return quaternion8();
  if (name.size() < 2) throw ParseError("unknown group name '" + std::string(name) + "'");
  const char kind = name[0];
  const std::size_t n = parse_size(name.substr(1), name);
  GroupSpec spec;
  spec.name = std::string(name);
  switch (kind) {
    case 'S':
      if (n < 1) break;
      spec.degree = n;
      if (n >= 2) {
        spec.generators.push_back(cycle_on(n, 0, 1));
        if (n >= 3) spec.generators.push_back(cycle_on(n, 0, n - 1));
      }
      return spec;
    case 'A':
      if (n < 1) break;
      spec.degree = n;
      if (n >= 3) {
        spec.generators.push_back(cycle_on(n, 0, 2));
        if (n >= 4) spec.generators.push_back(n % 2 == 1 ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1));
      }
      return spec;
    case 'C':
      if (n < 1) break;
      spec.degree = n;
      if (n >= 2) spec.generators.push_back(cycle_on(n, 0, n - 1));
      return spec;
    case 'D': {
      if (n % 2 != 0 || n < 6) break;
      const std::size_t k = n / 2;
      spec.degree = k;
      spec.generators.push_back(cycle_on(k, 0, k - 1));
      std::vector<std::vector<std::uint32_t>> refl;
      for (std::size_t i = 1; i < k - i; ++i) {
        refl.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k - i)});
      }
      spec.generators.push_back(Permutation::from_cycles(k, refl));
      return spec;
    }
    default:
      break;
  }
  throw ParseError("unknown group name '" + std::string(name) + "'");
}

GroupSpec parse_generators(std::string_view text, std::string name) {
  GroupSpec spec;
  spec.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view body = std::string_view(line).substr(first, last - first + 1);
    if (!have_degree) {
      constexpr std::string_view kKey = "degree";
      if (body.substr(0, kKey.size()) != kKey) throw ParseError("generator file must start with 'degree n'");
      auto rest = body.substr(kKey.size());
      const auto digits = rest.find_first_not_of(" \t");
      if (digits == std::string_view::npos) throw ParseError("missing degree value");
      spec.degree = parse_size(rest.substr(digits), body);
      if (spec.degree == 0) throw ParseError("degree must be positive");
      have_degree = true;
      continue;
    }
    spec.generators.push_back(Permutation::parse(spec.degree, body));
  }
  if (!have_degree) throw ParseError("generator file is empty");
  return spec;
}

GroupSpec read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str(), path);
}

}  // namespace blockomega
