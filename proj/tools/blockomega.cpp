#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "blockomega/blocks.hpp"
#include "blockomega/catalog.hpp"
#include "blockomega/errors.hpp"
#include "blockomega/symgroup.hpp"
#include "blockomega/theorem.hpp"

namespace bo = blockomega;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitNotEmbedded = 4;

struct Options {
  std::string group;
  std::string gens_file;
  std::string out_file;
  std::uint64_t seed = 0;
  std::size_t group_cap = bo::kDefaultGroupCap;
  std::size_t module_cap = bo::kDefaultModuleCap;
  std::optional<unsigned> field_degree;
  bool timing = false;
  bool verbose = false;
};

bo::GroupSpec resolve_group(const Options& o) {
  if (!o.gens_file.empty()) {
    auto spec = bo::read_generator_file(o.gens_file);
    spec.name = o.group.empty() ? std::filesystem::path(o.gens_file).stem().string() : o.group;
    return spec;
  }
  if (o.group.empty()) throw bo::ParseError("no group given; name a catalog group or pass --gens FILE");
  return bo::catalog_group(o.group);
}

bo::GroupData load_group(const bo::GroupSpec& spec, const Options& o) {
  return bo::enumerate_group(spec.degree, spec.generators, o.group_cap);
}

bo::VerificationConfig make_config(const Options& o) {
  bo::VerificationConfig c;
  c.seed = o.seed;
  c.module_cap = o.module_cap;
  c.field_degree = o.field_degree;
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_file.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(o.out_file);
  if (!out) throw bo::ParseError("cannot write " + o.out_file);
  out << text << '\n';
}

void log(const Options& o, const std::string& msg) {
  if (o.verbose) std::cerr << msg << '\n';
}

int run_blocks(const Options& o) {
  const auto spec = resolve_group(o);
  const auto group = load_group(spec, o);
  const auto field = bo::choose_field(group, o.field_degree);
  const auto center = bo::center_structure(group, field);
  const auto blocks = bo::block_idempotents(center, o.seed);
  const auto infos = bo::classify_blocks(center, blocks);
  std::ostringstream s;
  s << "group " << spec.name << "  order " << group.order() << "  classes " << center.class_count << "  GF(2^"
    << field->degree() << ")\n";
  s << std::left << std::setw(7) << "block" << std::setw(5) << "kB" << std::setw(6) << "real" << std::setw(10)
    << "opposite" << "defect_zero\n";
  for (const auto& b : infos) {
    s << std::setw(7) << b.index << std::setw(5) << b.kB << std::setw(6) << (b.is_real ? "yes" : "no")
      << std::setw(10) << b.opposite_index << (b.is_defect_zero ? "yes" : "no") << '\n';
  }
  std::string text = s.str();
  text.pop_back();
  emit(o, text);
  return kExitPass;
}

int run_verify(const Options& o, bool per_class) {
  const auto spec = resolve_group(o);
  const auto group = load_group(spec, o);
  log(o, "enumerated " + spec.name + " of order " + std::to_string(group.order()));
  auto config = make_config(o);
  config.per_class = per_class;
  const auto rep = bo::verify_group(group, spec.name, config);
  emit(o, bo::to_json(rep, o.timing));
  return rep.pass() ? kExitPass : kExitFail;
}

int run_sym(const Options& o, std::size_t n, bool cross_check) {
  using Json = nlohmann::ordered_json;
  if (n < 1 || n > 40) throw bo::ParseError("sym needs 1 <= n <= 40");
  if (cross_check && n > 8) throw bo::CapExceeded("cross-check limited to n <= 8");
  bool ok = true;
  Json j;
  j["n"] = n;
  j["blocks"] = Json::array();
  std::size_t predicted = 0;
  for (const auto& b : bo::blocks_of_Sn(n)) {
    j["blocks"].push_back({{"core", b.core.parts()}, {"defect_zero", b.defect_zero}});
    predicted += b.defect_zero;
  }
  j["triangular"] = bo::is_triangular(n);
  j["defect_zero_blocks"] = predicted;
  if (bo::is_triangular(n)) {
    std::uint32_t m = 0;
    while (std::size_t{m} * (m + 1) / 2 < n) ++m;
    const auto shape = bo::Partition::staircase(m);
    const auto hooks = bo::diagonal_hooks(m);
    const auto chi = bo::mn_character(shape, hooks);
    const auto inv = bo::involution_spec(m);
    Json s;
    s["m"] = m;
    s["shape"] = shape.parts();
    s["cycle_type"] = hooks.parts.parts();
    s["chi"] = chi;
    s["centralizer_order_odd"] = bo::odd_centralizer_check(m);
    s["transpositions"] = inv.transpositions;
    s["fixed_points"] = inv.fixed_points;
    s["parts_count"] = inv.parts_count;
    s["parts_count_floor_formula"] = inv.parts_count_floor_formula;
    s["parts_count_discrepancy"] = inv.parts_count_discrepancy;
    if (n <= 12) {
      const auto ip = bo::inner_product_with_trivial(m);
      s["inner_product"] = ip.value;
      s["centralizer_of_t_order"] = ip.group_order;
      ok = ok && ip.value == 1;
    } else {
      s["inner_product"] = nullptr;
    }
    s["chi_odd"] = chi % 2 != 0;
    ok = ok && chi % 2 != 0 && s["centralizer_order_odd"].get<bool>();
    j["staircase"] = std::move(s);
  }
  if (cross_check) {
    const auto group = bo::enumerate_group(n, bo::catalog_group("S" + std::to_string(n)).generators, o.group_cap);
    auto config = make_config(o);
    config.per_class = false;
    const auto rep = bo::verify_bijection(group, "S" + std::to_string(n), config);
    std::size_t engine_dz = 0;
    for (const auto& b : rep.blocks) engine_dz += b.info.is_defect_zero;
    Json c;
    c["engine_blocks"] = rep.blocks.size();
    c["engine_defect_zero_blocks"] = engine_dz;
    c["omega_dim"] = rep.omega.dimension;
    c["omega_projective_components"] = rep.omega.projective_components;
    c["bijection"] = rep.pass();
    c["agrees"] = engine_dz == predicted && rep.blocks.size() == j["blocks"].size();
    ok = ok && rep.pass() && c["agrees"].get<bool>();
    j["cross_check"] = std::move(c);
  }
  j["result"] = ok ? "PASS" : "FAIL";
  emit(o, j.dump(2));
  return ok ? kExitPass : kExitFail;
}

int run_embedded(const Options& o, const std::string& subgroup_file) {
  const auto spec = resolve_group(o);
  const auto group = load_group(spec, o);
  const auto sub = bo::read_generator_file(subgroup_file);
  if (sub.degree != spec.degree) {
    throw bo::ParseError("subgroup degree " + std::to_string(sub.degree) + " differs from group degree " +
                         std::to_string(spec.degree));
  }
  std::vector<std::size_t> gens;
  for (const auto& g : sub.generators) gens.push_back(group.index_of(g));
  const auto h = bo::subgroup_generated(group, gens);
  const auto rep = bo::verify_strongly_embedded(group, h, spec.name, make_config(o));
  emit(o, bo::to_json(rep));
  return rep.pass() ? kExitPass : kExitFail;
}

void add_common(CLI::App* cmd, Options& o, bool with_group = true) {
  if (with_group) {
    cmd->add_option("group", o.group, "catalog group (S<n>, A<n>, C<n>, D<2n>, Q8)");
    cmd->add_option("--gens", o.gens_file, "generator file instead of a catalog name");
  }
  cmd->add_option("--out", o.out_file, "write the report to FILE");
  cmd->add_option("--seed", o.seed, "random seed")->envname("BLOCKOMEGA_SEED");
  cmd->add_option("--field-degree", o.field_degree, "work over GF(2^m)");
  cmd->add_option("--group-cap", o.group_cap, "largest group order to enumerate")->check(CLI::PositiveNumber);
  cmd->add_option("--module-cap", o.module_cap, "largest module dimension to decompose")->check(CLI::PositiveNumber);
  cmd->add_flag("--timing", o.timing, "include timing_ms in the report");
  cmd->add_flag("-v,--verbose", o.verbose, "progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-blocks, permutation modules on involutions and their projective components"};
  app.require_subcommand(1);
  Options o;
  bool no_per_class = false;
  bool cross_check = false;
  std::size_t n = 0;
  std::string subgroup_file;

  auto* blocks = app.add_subcommand("blocks", "print the block table");
  add_common(blocks, o);
  auto* verify = app.add_subcommand("verify", "verify the real defect-zero block correspondence");
  add_common(verify, o);
  verify->add_flag("--no-per-class", no_per_class, "skip the involution-class modules");
  auto* sym = app.add_subcommand("sym", "symmetric group combinatorics");
  add_common(sym, o, false);
  sym->add_option("n", n, "degree")->required();
  sym->add_flag("--cross-check", cross_check, "also run the engine on S_n (n <= 8)");
  auto* embedded = app.add_subcommand("embedded", "strongly embedded subgroup check");
  add_common(embedded, o);
  embedded->add_option("--subgroup", subgroup_file, "generator file of the subgroup")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*blocks) return run_blocks(o);
    if (*verify) return run_verify(o, !no_per_class);
    if (*sym) return run_sym(o, n, cross_check);
    if (*embedded) return run_embedded(o, subgroup_file);
  } catch (const bo::NotStronglyEmbedded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotEmbedded;
  } catch (const bo::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const bo::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const bo::InvalidPermutation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const bo::DegreeOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const bo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitFail;
}
