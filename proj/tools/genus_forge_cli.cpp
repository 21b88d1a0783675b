#include <iostream>
#include <memory>
#include <algorithm>
#include <string>

#include "CLI11.hpp"
#include "genus_forge/genus_forge.h"
#include "json.hpp"

using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Owned {
  char* p = nullptr;
  ~Owned() { gf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using ManifoldHandle = std::unique_ptr<gf_manifold, decltype(&gf_manifold_free)>;

int report_error(gf_status st) {
  std::cerr << "error: " << gf_last_error() << "\n";
  if (st == GF_ERR_PARSE || st == GF_ERR_ARGUMENT || st == GF_ERR_DOMAIN || st == GF_ERR_STRUCTURAL) return kUsage;
  return kFail;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Accepts "A..B" or a single "A".
bool parse_range(const std::string& s, int& a, int& b) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      a = b = std::stoi(s);
    } else {
      a = std::stoi(s.substr(0, dots));
      b = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return a <= b;
}

int open_manifold(const std::string& expr, ManifoldHandle& out) {
  gf_manifold* m = nullptr;
  gf_status st = gf_manifold_parse(expr.c_str(), &m);
  if (st != GF_OK) {
    std::cerr << "error: " << gf_last_error() << "\n";
    if (st == GF_ERR_PARSE) {
      std::cerr << "  " << expr << "\n  " << std::string(gf_last_error_position(), ' ') << "^\n";
    }
    return kUsage;
  }
  out.reset(m);
  return kPass;
}

int cmd_eval(const std::string& genus, const std::string& expr, int order, const std::string& format) {
  ManifoldHandle m(nullptr, gf_manifold_free);
  if (int rc = open_manifold(expr, m)) return rc;
  const int dim = gf_manifold_dim(m.get());
  if (order > 0 && order < 2 * dim) {
    std::cerr << "error: --order " << order << " is below 2*dim = " << 2 * dim << "\n";
    return kUsage;
  }
  Owned value, label;
  if (gf_status st = gf_eval(m.get(), genus.c_str(), order, &value.p)) return report_error(st);
  gf_manifold_label(m.get(), &label.p);
  if (format == "json") {
    std::cout << json{{"genus", genus}, {"manifold", label.str()}, {"dim", dim}, {"value", value.str()}}.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "genus,manifold,value\n" << genus << "," << csv_field(label.str()) << "," << csv_field(value.str()) << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kPass;
}

int cmd_chern(const std::string& expr, const std::string& format) {
  ManifoldHandle m(nullptr, gf_manifold_free);
  if (int rc = open_manifold(expr, m)) return rc;
  Owned out;
  if (gf_status st = gf_chern_numbers(m.get(), &out.p)) return report_error(st);
  auto j = nlohmann::ordered_json::parse(out.str());
  const auto& numbers = j["numbers"];
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "pretty") {
    std::size_t w = 9;
    for (const auto& [k, v] : numbers.items()) w = std::max(w, k.size());
    for (const auto& [k, v] : numbers.items()) std::cout << k << std::string(w - k.size() + 2, ' ') << v.get<std::string>() << "\n";
  } else {
    std::cout << "partition,value\n";
    for (const auto& [k, v] : numbers.items()) std::cout << k << "," << v.get<std::string>() << "\n";
  }
  return kPass;
}

int cmd_milnor(const std::string& expr) {
  ManifoldHandle m(nullptr, gf_manifold_free);
  if (int rc = open_manifold(expr, m)) return rc;
  Owned out;
  if (gf_status st = gf_milnor(m.get(), &out.p)) return report_error(st);
  std::cout << out.str() << "\n";
  return kPass;
}

int cmd_check(const std::string& suite, const json& opts, const std::string& format) {
  Owned out;
  int all_pass = 0;
  std::string o = opts.dump();
  if (gf_status st = gf_check(suite.c_str(), o.c_str(), &out.p, &all_pass)) return report_error(st);
  json items = json::parse(out.str());
  if (format == "csv") {
    std::cout << "check,params,expected,got,verdict\n";
    for (const auto& it : items)
      std::cout << csv_field(it["check"]) << "," << csv_field(it["params"].dump()) << "," << csv_field(it["expected"])
                << "," << csv_field(it["got"]) << "," << it["verdict"].get<std::string>() << "\n";
  } else if (format == "pretty") {
    std::size_t pass = 0, fail = 0;
    for (const auto& it : items) {
      std::string v = it["verdict"];
      if (v == "pass") ++pass;
      if (v == "fail") ++fail;
      std::string tag = v == "pass" ? "ok  " : v == "fail" ? "FAIL" : v == "info" ? "info" : "??  ";
      std::cout << tag << "  " << it["check"].get<std::string>() << " " << it["params"].dump() << "  "
                << it["got"].get<std::string>() << "\n";
    }
    std::cout << pass << " passed, " << fail << " failed\n";
  } else {
    std::cout << items.dump(2) << "\n";
  }
  return all_pass ? kPass : kFail;
}

int cmd_qexp(int qmax, int x_order) {
  Owned out;
  if (gf_status st = gf_q_expansion(qmax, x_order, &out.p)) return report_error(st);
  std::cout << json::parse(out.str()).dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluation of complex genera on projective bundles"};
  app.set_version_flag("--version", std::string(gf_version()));
  app.require_subcommand(1);

  std::string eval_fmt = "pretty", chern_fmt = "csv", check_fmt = "json";
  auto add_format = [](CLI::App* sub, std::string& var) {
    sub->add_option("--format", var, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
  };

  std::string genus, expr;
  int order = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate a genus on a manifold expression");
  eval->add_option("genus", genus, "psi | chi_y | kh | ochanine | ahat | psi_deg")->required();
  eval->add_option("manifold", expr, "Manifold expression, e.g. \"proj(tangent(cp(3)))\"")->required();
  eval->add_option("--order", order, "Truncation order (default 2*dim + 2)");
  add_format(eval, eval_fmt);

  auto* chern = app.add_subcommand("chern", "Table of Chern numbers");
  chern->add_option("manifold", expr, "Manifold expression")->required();
  add_format(chern, chern_fmt);

  auto* milnor = app.add_subcommand("milnor", "Thom-Milnor number s_n");
  milnor->add_option("manifold", expr, "Manifold expression")->required();

  std::string suite, range, manifold;
  int max_dim = -1, qmax = -1;
  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", suite, "dual | cy3 | gcd-odd | gcd-even | kh-psi | qexp | hrr | milnor | chi_y | degenerate | all")
      ->required();
  check->add_option("--max-dim", max_dim, "Largest dim P(E) in catalog suites");
  check->add_option("--m", range, "Range A..B for scans");
  check->add_option("--qmax", qmax, "Highest q power");
  check->add_option("--manifold", manifold, "Manifold for qexp/hrr");
  add_format(check, check_fmt);

  int x_order = 6;
  auto* qexp = app.add_subcommand("qexp", "Print the q-layers of the product expansion");
  qexp->add_option("--qmax", qmax, "Highest q power")->default_val(2);
  qexp->add_option("--order", x_order, "Highest x power")->default_val(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  if (eval->parsed()) return cmd_eval(genus, expr, order, eval_fmt);
  if (chern->parsed()) return cmd_chern(expr, chern_fmt);
  if (milnor->parsed()) return cmd_milnor(expr);
  if (qexp->parsed()) return cmd_qexp(qmax, x_order);
  if (check->parsed()) {
    json opts = json::object();
    if (max_dim >= 0) opts["max_dim"] = max_dim;
    if (qmax >= 0) opts["qmax"] = qmax;
    if (!manifold.empty()) opts["manifold"] = manifold;
    if (!range.empty()) {
      int a = 0, b = 0;
      if (!parse_range(range, a, b)) {
        std::cerr << "error: --m expects A..B\n";
        return kUsage;
      }
      opts["m_from"] = a;
      opts["m_to"] = b;
    }
    return cmd_check(suite, opts, check_fmt);
  }
  return kUsage;
}
