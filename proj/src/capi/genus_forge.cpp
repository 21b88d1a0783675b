#include "genus_forge/genus_forge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/expr.hpp"
#include "core/named_genera.hpp"
#include "core/structure_checks.hpp"
#include "json.hpp"

struct gf_manifold {
  genus_forge::ManifoldPtr m;
};

namespace {

using namespace genus_forge;
using nlohmann::json;

thread_local std::string last_error;
thread_local std::size_t last_position = 0;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gf_status set_error(gf_status st, const std::string& msg, std::size_t pos = 0) {
  last_error = msg;
  last_position = pos;
  return st;
}

template <class F>
gf_status guarded(F&& f) {
  last_error.clear();
  last_position = 0;
  try {
    f();
    return GF_OK;
  } catch (const ParseError& e) {
    return set_error(GF_ERR_PARSE, e.what(), e.position());
  } catch (const DomainError& e) {
    return set_error(GF_ERR_DOMAIN, e.what());
  } catch (const StructuralError& e) {
    return set_error(GF_ERR_STRUCTURAL, e.what());
  } catch (const InvariantError& e) {
    return set_error(GF_ERR_INVARIANT, e.what());
  } catch (const json::exception& e) {
    return set_error(GF_ERR_ARGUMENT, std::string("bad options: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(GF_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(GF_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(GF_ERR_INTERNAL, "unknown failure");
  }
}

std::string eval_value(const Manifold& m, const std::string& genus, int order) {
  if (order <= 0) order = 2 * m.dim + 2;
  if (order < m.dim) throw DomainError("order " + std::to_string(order) + " is below the dimension " + std::to_string(m.dim));
  if (genus == "psi") return to_string(evaluate(build_psi(order), m));
  if (genus == "chi_y") return to_string(evaluate(build_chi_y(order), m));
  if (genus == "kh") return to_string(evaluate(build_kh(order), m));
  if (genus == "ochanine") return to_string(evaluate(build_ochanine(order), m));
  if (genus == "ahat") return to_string(evaluate(build_ahat(order), m));
  if (genus == "psi_deg") return to_string(evaluate(build_psi_deg(order), m));
  throw std::invalid_argument("unknown genus '" + genus + "'");
}

std::vector<ManifoldPtr> manifolds_from(const json& opts) {
  std::vector<ManifoldPtr> out;
  if (opts.contains("manifold")) {
    const json& v = opts["manifold"];
    if (v.is_array())
      for (const auto& s : v) out.push_back(parse_manifold(s.get<std::string>()));
    else
      out.push_back(parse_manifold(v.get<std::string>()));
  } else {
    out = {projective_space(1), projective_space(2)};
  }
  return out;
}

int opt_int(const json& o, const char* key, int fallback) { return o.contains(key) ? o[key].get<int>() : fallback; }

Report run_suite(const std::string& suite, const json& o) {
  if (suite == "dual") return dualization_suite(opt_int(o, "max_dim", 6));
  if (suite == "cy3") return cy3_multiplicativity_suite(opt_int(o, "m_to", opt_int(o, "max_dim", 8)));
  if (suite == "gcd-odd" || suite == "gcd-even") {
    const bool odd = suite == "gcd-odd";
    int from = opt_int(o, "m_from", odd ? 5 : 3), to = opt_int(o, "m_to", 16);
    if (to > 30) throw DomainError("gcd scans are limited to m <= 30");
    return gcd_suite(odd ? "odd" : "even", from, to);
  }
  if (suite == "kh-psi") return kh_psi_relation_check();
  if (suite == "qexp" || suite == "hrr") {
    int q = opt_int(o, "qmax", 2);
    if (q < 0 || q > 4) throw DomainError("qmax must lie in 0..4");
    auto ms = manifolds_from(o);
    return suite == "qexp" ? q_expansion_suite(q, ms) : hrr_suite(q, ms);
  }
  if (suite == "milnor") return milnor_closed_form_suite(opt_int(o, "max_dim", 6));
  if (suite == "chi_y") return chi_y_multiplicativity_suite(opt_int(o, "max_dim", 6));
  if (suite == "degenerate") return degenerate_suite(opt_int(o, "max_dim", 4));
  if (suite == "all") {
    Report r;
    for (const char* s : {"dual", "cy3", "gcd-odd", "gcd-even", "kh-psi", "qexp", "hrr", "milnor", "chi_y", "degenerate"}) {
      json sub = o;
      // range flags belong to the scans only
      if (std::string(s) != "gcd-odd" && std::string(s) != "gcd-even") {
        sub.erase("m_from");
        sub.erase("m_to");
      }
      if (std::string(s) == "cy3") sub.erase("max_dim");
      r.append(run_suite(s, sub));
    }
    return r;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

extern "C" {

const char* gf_version(void) { return "0.3.0"; }

const char* gf_last_error(void) { return last_error.c_str(); }

size_t gf_last_error_position(void) { return last_position; }

void gf_string_free(char* s) { std::free(s); }

gf_status gf_manifold_parse(const char* expr, gf_manifold** out) {
  if (!expr || !out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new gf_manifold{parse_manifold(expr)}; });
}

void gf_manifold_free(gf_manifold* m) { delete m; }

int gf_manifold_dim(const gf_manifold* m) { return m ? m->m->dim : -1; }

gf_status gf_manifold_label(const gf_manifold* m, char** out) {
  if (!m || !out) return set_error(GF_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = dup(m->m->label); });
}

gf_status gf_eval(const gf_manifold* m, const char* genus, int order, char** out) {
  if (!m || !genus || !out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup(eval_value(*m->m, genus, order)); });
}

gf_status gf_chern_numbers(const gf_manifold* m, char** json_out) {
  if (!m || !json_out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    auto t = chern_numbers(*m->m);
    nlohmann::ordered_json numbers = nlohmann::ordered_json::object();
    for (const auto& [mu, v] : t.entries) numbers[chern_key(mu)] = v.to_string();
    nlohmann::ordered_json j;
    j["dim"] = t.dim;
    j["numbers"] = numbers;
    *json_out = dup(j.dump());
  });
}

gf_status gf_milnor(const gf_manifold* m, char** out) {
  if (!m || !out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup(milnor_number(*m->m).to_string()); });
}

gf_status gf_q_expansion(int q_max, int x_order, char** json_out) {
  if (!json_out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    if (q_max < 0 || q_max > 4) throw DomainError("qmax must lie in 0..4");
    if (x_order < 0 || x_order > 16) throw DomainError("x order must lie in 0..16");
    auto qe = build_q_expansion(q_max, x_order);
    json j = json::object();
    for (int l = 0; l <= q_max; ++l) {
      json cs = json::object();
      for (int k = 0; k <= x_order; ++k) cs["x^" + std::to_string(k)] = qe.coeff(l, k).to_string();
      j["q^" + std::to_string(l)] = json{{"coeff_of", cs}};
    }
    *json_out = dup(j.dump());
  });
}

gf_status gf_check(const char* suite, const char* options, char** json_out, int* all_pass) {
  if (!suite || !json_out) return set_error(GF_ERR_ARGUMENT, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    json o = options && *options ? json::parse(options) : json::object();
    if (!o.is_object()) throw std::invalid_argument("options must be a JSON object");
    Report r = run_suite(suite, o);
    if (all_pass) *all_pass = r.ok() ? 1 : 0;
    *json_out = dup(r.to_json().dump());
  });
}

}  // extern "C"
