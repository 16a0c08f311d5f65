#include "blockomega/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <string>
#include <utility>

#include <json.hpp>

#include "blockomega/algebra.hpp"
#include "blockomega/errors.hpp"

namespace blockomega {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Which block each summand of a permutation-module decomposition lies in.
std::vector<std::optional<std::size_t>> summand_blocks(const GroupData& group, const Decomposition& d,
                                                       const PermAction& action,
                                                       const std::vector<BlockIdempotent>& blocks) {
  const auto& alg = d.ring->algebra();
  std::vector<Vector> t;
  for (const auto& b : blocks) t.push_back(class_function_in_ring(group, *d.ring, action, b.coefficients));
  std::vector<std::optional<std::size_t>> out;
  for (const auto& s : d.summands) {
    std::optional<std::size_t> found;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Vector p = alg.multiply(t[b], s.idempotents.front());
      if (std::any_of(p.begin(), p.end(), [](Scalar x) { return x != 0; })) {
        if (found) throw Inconsistent("indecomposable summand meets two blocks");
        found = b;
      }
    }
    if (!found) throw Inconsistent("indecomposable summand lies in no block");
    out.push_back(found);
  }
  return out;
}

bool self_dual_checked(const Decomposition& d, const Summand& s, const VerificationConfig& config,
                       std::vector<std::string>& failures, const std::string& where) {
  const bool in_ring = summand_self_dual(d, s.idempotents.front());
  if (s.module.dimension() <= config.dual_cross_check_dim) {
    const bool generic = is_isomorphic(s.module, dual(s.module), config.seed);
    if (generic != in_ring) failures.push_back(where + ": self-duality checks disagree");
  }
  return in_ring;
}

struct BlockContext {
  CenterData center;
  std::vector<BlockIdempotent> idempotents;
  std::vector<BlockInfo> infos;
};

BlockContext block_context(const GroupData& group, const FieldPtr& field, std::uint64_t seed) {
  BlockContext c{center_structure(group, field), {}, {}};
  c.idempotents = block_idempotents(c.center, seed);
  c.infos = classify_blocks(c.center, c.idempotents);
  return c;
}

}  // namespace

FieldPtr choose_field(const GroupData& group, const std::optional<unsigned>& override_degree) {
  const unsigned s = splitting_degree(group);
  if (!override_degree) return field_ctx(s);
  if (*override_degree == 0 || *override_degree % s != 0) {
    throw DegreeOutOfRange("field degree " + std::to_string(*override_degree) +
                           " is not a multiple of the splitting degree " + std::to_string(s));
  }
  return field_ctx(*override_degree);
}

bool VerificationReport::pass() const {
  if (!failures.empty()) return false;
  for (const auto& v : {verdicts.theorem_i, verdicts.theorem_ii, verdicts.bijection, verdicts.counts}) {
    if (v && !*v) return false;
  }
  return true;
}

VerificationReport verify_bijection(const GroupData& group, const std::string& name,
                                    const VerificationConfig& config) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.group = name;
  rep.order = group.order();
  const FieldPtr field = choose_field(group, config.field_degree);
  rep.field_degree = field->degree();

  auto t0 = Clock::now();
  const auto ctx = block_context(group, field, config.seed);
  for (auto info : ctx.infos) {
    if (info.is_defect_zero) {
      if (group.order() <= kSimplicityGroupCap) {
        const auto d = regular_block_dimension(info.idempotent, group, field);
        std::size_t s = 0;
        while (s * s < d) ++s;
        if (s * s == d) {
          info.simple_dimension = s;
        } else {
          rep.failures.push_back("block " + std::to_string(info.index) + ": defect zero but dim e_B kG = " +
                                 std::to_string(d) + " is not a square");
        }
      } else {
        rep.skipped.push_back({"simple_dimension[" + std::to_string(info.index) + "]",
                               "regular module above " + std::to_string(kSimplicityGroupCap) + " elements"});
      }
    }
    rep.blocks.push_back({std::move(info), 0, {}, {}});
  }
  rep.timing_ms["blocks"] = elapsed_ms(t0);

  t0 = Clock::now();
  const auto omega_points = involutions(group);
  if (omega_points.size() > config.module_cap) {
    throw CapExceeded("|Omega| = " + std::to_string(omega_points.size()) + " exceeds module cap " +
                      std::to_string(config.module_cap));
  }
  const auto action = conjugation_action(group, omega_points);
  const auto k_omega = perm_module(group, action, field, "kOmega");
  rep.omega.dimension = k_omega.dimension();
  DecomposeOptions dopt;
  dopt.seed = config.seed;
  dopt.module_cap = config.module_cap;
  const auto d = decompose(k_omega, dopt);
  const auto sylow = sylow2(group, config.seed);
  const auto where = summand_blocks(group, d, action, ctx.idempotents);
  const auto& alg = d.ring->algebra();

  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    ComponentRecord c;
    c.dimension = s.module.dimension();
    c.multiplicity = s.multiplicity;
    c.block = where[i];
    c.projective = is_projective(group, sylow, s.module);
    if (c.projective) {
      c.self_dual = self_dual_checked(d, s, config, rep.failures, "omega component " + std::to_string(i));
      rep.omega.projective_components += s.multiplicity;
    }
    const auto& info = rep.blocks[*c.block].info;
    c.irreducible_certified = c.projective && info.is_defect_zero;
    auto& br = rep.blocks[*c.block];
    br.omega_dimension += c.dimension * c.multiplicity;
    br.omega_components.push_back(i);
    rep.omega.components.push_back(c);
  }

  bool bijection = true;
  auto fail = [&](std::string msg) {
    bijection = false;
    rep.failures.push_back(std::move(msg));
  };
  for (auto& br : rep.blocks) {
    const auto& info = br.info;
    const std::string label = "block " + std::to_string(info.index);
    if (info.is_defect_zero && info.is_real) {
      ++rep.omega.real_defect_zero_blocks;
      const Vector t = class_function_in_ring(group, *d.ring, action, info.idempotent.coefficients);
      br.end_dimension = alg.sandwich_basis(t, t).size();
      if (br.omega_components.size() != 1) {
        fail(label + ": real defect-zero block meets kOmega in " + std::to_string(br.omega_components.size()) +
             " component classes");
        continue;
      }
      const auto& c = rep.omega.components[br.omega_components.front()];
      if (c.multiplicity != 1) fail(label + ": multiplicity " + std::to_string(c.multiplicity));
      if (*br.end_dimension != 1) fail(label + ": dim End = " + std::to_string(*br.end_dimension));
      if (!c.projective) fail(label + ": component not projective");
      if (!c.self_dual.value_or(false)) fail(label + ": component not self-dual");
      if (info.simple_dimension && c.dimension != *info.simple_dimension) {
        fail(label + ": component dimension " + std::to_string(c.dimension) + " differs from simple dimension " +
             std::to_string(*info.simple_dimension));
      }
    } else if (info.is_defect_zero) {
      if (br.omega_dimension != 0) fail(label + ": nonreal defect-zero block meets kOmega");
    } else {
      for (auto ci : br.omega_components) {
        if (rep.omega.components[ci].projective) fail(label + ": projective component in a positive-defect block");
      }
    }
  }
  rep.verdicts.counts = rep.omega.real_defect_zero_blocks == rep.omega.projective_components;
  if (!*rep.verdicts.counts) {
    rep.failures.push_back("count mismatch: " + std::to_string(rep.omega.real_defect_zero_blocks) +
                           " real defect-zero blocks, " + std::to_string(rep.omega.projective_components) +
                           " projective components");
  }
  rep.verdicts.bijection = bijection && *rep.verdicts.counts;
  rep.timing_ms["omega"] = elapsed_ms(t0);
  rep.timing_ms["total"] = elapsed_ms(start);
  return rep;
}

void verify_per_class(const GroupData& group, VerificationReport& rep, const VerificationConfig& config) {
  const auto start = Clock::now();
  const FieldPtr field = field_ctx(rep.field_degree);
  std::vector<BlockIdempotent> blocks;
  for (const auto& br : rep.blocks) blocks.push_back(br.info.idempotent);
  const auto sylow = sylow2(group, config.seed);

  bool theorem_i = true;
  bool complete = true;
  std::size_t omega_total = 0;
  std::vector<std::size_t> hits(rep.blocks.size(), 0);
  const auto& classes = group.classes();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    if (group.element_order(cls.representative_index) > 2) continue;
    ClassRecord rec;
    rec.class_index = ci;
    rec.representative = cls.representative.to_string();
    rec.class_size = cls.members.size();
    rec.centralizer_order = cls.centralizer_order;
    rec.module_dimension = group.order() / cls.centralizer_order;
    omega_total += rec.class_size;
    const std::string label = "class " + std::to_string(ci);
    if (rec.module_dimension > config.module_cap) {
      rep.skipped.push_back({label, "k[G/C(t)] of dimension " + std::to_string(rec.module_dimension) +
                                        " exceeds module cap"});
      complete = false;
      rep.omega.classes.push_back(std::move(rec));
      continue;
    }
    const auto c = centralizer(group, cls.representative_index);
    const auto action = coset_action(group, c);
    const auto m = perm_module(group, action, field, "k[G/C(t)]");
    DecomposeOptions dopt;
    dopt.seed = derive_seed(config.seed, ci);
    dopt.module_cap = config.module_cap;
    const auto d = decompose(m, dopt);
    const auto where = summand_blocks(group, d, action, blocks);
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
      const auto& s = d.summands[i];
      if (!is_projective(group, sylow, s.module)) continue;
      ComponentRecord cr;
      cr.dimension = s.module.dimension();
      cr.multiplicity = s.multiplicity;
      cr.block = where[i];
      cr.projective = true;
      cr.self_dual = self_dual_checked(d, s, config, rep.failures, label);
      const auto& info = rep.blocks[*cr.block].info;
      cr.irreducible_certified = info.is_defect_zero;
      const std::string what = label + ", projective of dim " + std::to_string(cr.dimension);
      if (cr.multiplicity != 1) {
        theorem_i = false;
        rep.failures.push_back(what + ": multiplicity " + std::to_string(cr.multiplicity));
      }
      if (!*cr.self_dual) {
        theorem_i = false;
        rep.failures.push_back(what + ": not self-dual");
      }
      if (!cr.irreducible_certified) {
        theorem_i = false;
        rep.failures.push_back(what + ": lies in a positive-defect block");
      }
      if (!info.is_real) {
        theorem_i = false;
        rep.failures.push_back(what + ": lies in a nonreal block");
      }
      ++hits[*cr.block];
      rec.projective_components.push_back(cr);
    }
    rec.evaluated = true;
    rep.omega.classes.push_back(std::move(rec));
  }
  if (omega_total != rep.omega.dimension) {
    rep.failures.push_back("involution classes cover " + std::to_string(omega_total) + " points, |Omega| = " +
                           std::to_string(rep.omega.dimension));
  }

  bool theorem_ii = true;
  for (const auto& br : rep.blocks) {
    if (!(br.info.is_defect_zero && br.info.is_real)) continue;
    if (hits[br.info.index] != 1) {
      if (!complete && hits[br.info.index] == 0) continue;
      theorem_ii = false;
      rep.failures.push_back("block " + std::to_string(br.info.index) + ": simple found in " +
                             std::to_string(hits[br.info.index]) + " involution-class modules");
    }
  }
  rep.verdicts.theorem_i = theorem_i;
  if (complete || !theorem_ii) {
    rep.verdicts.theorem_ii = theorem_ii;
  } else {
    rep.skipped.push_back({"theorem_ii", "some involution-class modules exceed the module cap"});
  }
  rep.timing_ms["per_class"] = elapsed_ms(start);
  rep.timing_ms["total"] += rep.timing_ms["per_class"];
}

VerificationReport verify_group(const GroupData& group, const std::string& name, const VerificationConfig& config) {
  auto rep = verify_bijection(group, name, config);
  if (config.per_class) {
    verify_per_class(group, rep, config);
  } else {
    rep.skipped.push_back({"per_class", "disabled"});
  }
  return rep;
}

EmbeddedReport verify_strongly_embedded(const GroupData& group, const SubgroupData& subgroup, const std::string& name,
                                        const VerificationConfig& config) {
  if (!is_strongly_embedded(group, subgroup)) {
    throw NotStronglyEmbedded("subgroup of order " + std::to_string(subgroup.order) + " is not strongly embedded");
  }
  EmbeddedReport rep;
  rep.group = name;
  rep.order = group.order();
  rep.subgroup_order = subgroup.order;
  const FieldPtr field = choose_field(group, config.field_degree);
  rep.field_degree = field->degree();
  const auto ctx = block_context(group, field, config.seed);

  const auto action = coset_action(group, subgroup);
  const auto m = perm_module(group, action, field, "k[G/H]");
  rep.module_dimension = m.dimension();
  DecomposeOptions dopt;
  dopt.seed = config.seed;
  dopt.module_cap = config.module_cap;
  const auto d = decompose(m, dopt);
  const auto where = summand_blocks(group, d, action, ctx.idempotents);
  const auto sylow = sylow2(group, config.seed);

  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    ComponentRecord c;
    c.dimension = s.module.dimension();
    c.multiplicity = s.multiplicity;
    c.block = where[i];
    c.projective = is_projective(group, sylow, s.module);
    const bool trivial = c.dimension == 1 && std::all_of(s.module.actions().begin(), s.module.actions().end(),
                                                          [](const Matrix& a) { return a.is_identity(); });
    const std::string label = "summand of dim " + std::to_string(c.dimension);
    if (trivial) {
      rep.trivial_summands += c.multiplicity;
    } else {
      c.self_dual = self_dual_checked(d, s, config, rep.failures, label);
      c.irreducible_certified = c.projective && ctx.infos[*c.block].is_defect_zero;
      if (!c.projective) rep.failures.push_back(label + ": not projective");
      if (!c.irreducible_certified) rep.failures.push_back(label + ": not certified irreducible");
      if (!*c.self_dual) rep.failures.push_back(label + ": not self-dual");
      if (c.multiplicity != 1) rep.failures.push_back(label + ": multiplicity " + std::to_string(c.multiplicity));
    }
    rep.components.push_back(c);
  }
  if (rep.trivial_summands != 1) {
    rep.failures.push_back(std::to_string(rep.trivial_summands) + " trivial summands, expected 1");
  }
  return rep;
}

namespace {

using Json = nlohmann::ordered_json;

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json component_json(const ComponentRecord& c) {
  Json j;
  j["dim"] = c.dimension;
  j["multiplicity"] = c.multiplicity;
  j["block"] = optional_json(c.block);
  j["projective"] = c.projective;
  j["self_dual"] = optional_json(c.self_dual);
  j["irreducible_certified"] = c.irreducible_certified;
  return j;
}

Json coefficients_json(const Vector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

std::string to_json(const VerificationReport& rep, bool with_timing) {
  Json j;
  j["group"] = rep.group;
  j["order"] = rep.order;
  j["field_degree"] = rep.field_degree;
  j["blocks"] = Json::array();
  for (const auto& br : rep.blocks) {
    Json b;
    b["index"] = br.info.index;
    b["kB"] = br.info.kB;
    b["real"] = br.info.is_real;
    b["opposite"] = br.info.opposite_index;
    b["defect_zero"] = br.info.is_defect_zero;
    b["simple_dim"] = optional_json(br.info.simple_dimension);
    b["omega_dim"] = br.omega_dimension;
    b["omega_components"] = br.omega_components;
    b["end_dim"] = optional_json(br.end_dimension);
    b["idempotent"] = coefficients_json(br.info.idempotent.coefficients);
    j["blocks"].push_back(std::move(b));
  }
  Json omega;
  omega["dim"] = rep.omega.dimension;
  omega["components"] = Json::array();
  for (const auto& c : rep.omega.components) omega["components"].push_back(component_json(c));
  omega["classes"] = Json::array();
  for (const auto& c : rep.omega.classes) {
    Json k;
    k["class"] = c.class_index;
    k["representative"] = c.representative;
    k["size"] = c.class_size;
    k["centralizer_order"] = c.centralizer_order;
    k["module_dim"] = c.module_dimension;
    k["evaluated"] = c.evaluated;
    k["projective_components"] = Json::array();
    for (const auto& p : c.projective_components) k["projective_components"].push_back(component_json(p));
    omega["classes"].push_back(std::move(k));
  }
  omega["real_defect_zero_blocks"] = rep.omega.real_defect_zero_blocks;
  omega["projective_components"] = rep.omega.projective_components;
  j["omega"] = std::move(omega);
  Json v;
  v["theorem_i"] = optional_json(rep.verdicts.theorem_i);
  v["theorem_ii"] = optional_json(rep.verdicts.theorem_ii);
  v["bijection"] = optional_json(rep.verdicts.bijection);
  v["counts"] = optional_json(rep.verdicts.counts);
  v["result"] = rep.pass() ? "PASS" : "FAIL";
  j["verdicts"] = std::move(v);
  j["skipped"] = Json::array();
  for (const auto& s : rep.skipped) j["skipped"].push_back({{"check", s.check}, {"status", "skipped"}, {"reason", s.reason}});
  j["failures"] = rep.failures;
  if (with_timing) {
    Json t;
    for (const auto& [k, ms] : rep.timing_ms) t[k] = ms;
    j["timing_ms"] = std::move(t);
  } else {
    j["timing_ms"] = nullptr;
  }
  return j.dump(2);
}

std::string to_json(const EmbeddedReport& rep) {
  Json j;
  j["group"] = rep.group;
  j["order"] = rep.order;
  j["subgroup_order"] = rep.subgroup_order;
  j["field_degree"] = rep.field_degree;
  j["module_dim"] = rep.module_dimension;
  j["trivial_summands"] = rep.trivial_summands;
  j["components"] = Json::array();
  for (const auto& c : rep.components) j["components"].push_back(component_json(c));
  j["failures"] = rep.failures;
  j["result"] = rep.pass() ? "PASS" : "FAIL";
  return j.dump(2);
}

}  // namespace blockomega
