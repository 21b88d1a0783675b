#include "core/expr.hpp"

#include <cctype>
#include <optional>
#include <variant>

#include "core/error.hpp"
#include "core/structure_checks.hpp"

namespace genus_forge {

namespace {

struct Term;
using Arg = std::variant<long, Term>;

struct Term {
  std::string head;
  std::vector<Arg> args;
  bool called = false;  // written with parentheses
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return t;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  Term term() {
    skip();
    Term t;
    t.pos = i_;
    if (i_ >= s_.size()) throw ParseError("expected an expression", i_);
    if (!std::isalpha(static_cast<unsigned char>(s_[i_]))) throw ParseError("expected a name", i_);
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-')) {
      t.head += s_[i_];
      ++i_;
    }
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      t.called = true;
      ++i_;
      skip();
      if (i_ < s_.size() && s_[i_] == ')') {
        ++i_;
        return t;
      }
      for (;;) {
        t.args.push_back(arg());
        skip();
        if (i_ >= s_.size()) throw ParseError("missing ')'", i_);
        if (s_[i_] == ',') {
          ++i_;
          continue;
        }
        if (s_[i_] == ')') {
          ++i_;
          break;
        }
        throw ParseError("expected ',' or ')'", i_);
      }
    }
    return t;
  }

  Arg arg() {
    skip();
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) {
      std::size_t start = i_;
      if (s_[i_] == '-') ++i_;
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) throw ParseError("expected a number", start);
      long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = v * 10 + (s_[i_] - '0');
        if (v > 1000000) throw ParseError("number too large", start);
        ++i_;
      }
      return s_[start] == '-' ? -v : v;
    }
    return term();
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

[[noreturn]] void fail(const Term& t, const std::string& what) { throw ParseError(what, t.pos); }

long int_arg(const Term& t, std::size_t k) {
  if (k >= t.args.size()) fail(t, t.head + ": missing argument " + std::to_string(k + 1));
  if (auto v = std::get_if<long>(&t.args[k])) return *v;
  fail(std::get<Term>(t.args[k]), t.head + ": argument " + std::to_string(k + 1) + " must be a number");
}

const Term& term_arg(const Term& t, std::size_t k) {
  if (k >= t.args.size()) fail(t, t.head + ": missing argument " + std::to_string(k + 1));
  if (auto v = std::get_if<Term>(&t.args[k])) return *v;
  fail(t, t.head + ": argument " + std::to_string(k + 1) + " must be an expression");
}

void arity(const Term& t, std::size_t lo, std::size_t hi) {
  if (t.args.size() < lo || t.args.size() > hi) fail(t, t.head + ": wrong number of arguments");
}

// Errors from the model layer are reported at the term that caused them.
template <class F>
auto at(const Term& t, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), t.pos);
  }
}

ManifoldPtr eval_manifold(const Term& t);
Bundle eval_bundle(const Term& t, const ManifoldPtr& context);

bool is_bare_triv(const Term& t) { return t.head == "triv" && t.args.size() == 1; }

ManifoldPtr eval_manifold(const Term& t) {
  const std::string& h = t.head;
  if (h == "cp") {
    arity(t, 1, 1);
    long n = int_arg(t, 0);
    if (n < 0 || n > 64) fail(t, "cp: dimension out of range");
    return projective_space(static_cast<int>(n));
  }
  if (h == "point") {
    arity(t, 0, 0);
    return point();
  }
  if (h == "ecube" || h == "ecube-base" || h == "ecube_base") {
    arity(t, 0, 0);
    return elliptic_cube_base();
  }
  if (h == "prod") {
    if (t.args.size() < 2) fail(t, "prod: needs at least two factors");
    std::vector<ManifoldPtr> f;
    for (std::size_t k = 0; k < t.args.size(); ++k) f.push_back(eval_manifold(term_arg(t, k)));
    return at(t, [&] { return product(f); });
  }
  if (h == "proj") {
    arity(t, 1, 1);
    Bundle e = eval_bundle(term_arg(t, 0), nullptr);
    return at(t, [&] { return projectivize(e); });
  }
  fail(t, "unknown manifold '" + h + "'");
}

Bundle eval_bundle(const Term& t, const ManifoldPtr& context) {
  const std::string& h = t.head;
  if (h == "triv") {
    arity(t, 1, 2);
    long k = int_arg(t, 0);
    if (k < 0 || k > 64) fail(t, "triv: rank out of range");
    ManifoldPtr base = t.args.size() == 2 ? eval_manifold(term_arg(t, 1)) : context ? context : point();
    return trivial_bundle(static_cast<int>(k), base);
  }
  if (h == "o1") {
    arity(t, 1, 2);
    if (t.args.size() == 1) {
      ManifoldPtr b = eval_manifold(term_arg(t, 0));
      return at(t, [&] { return hyperplane_bundle(b, 1); });
    }
    long i = int_arg(t, 0);
    ManifoldPtr b = eval_manifold(term_arg(t, 1));
    return at(t, [&] { return hyperplane_bundle(b, static_cast<int>(i)); });
  }
  if (h == "tangent") {
    arity(t, 1, 1);
    return tangent_bundle(eval_manifold(term_arg(t, 0)));
  }
  if (h == "dual") {
    arity(t, 1, 1);
    return dual(eval_bundle(term_arg(t, 0), context));
  }
  if (h == "sum") {
    if (t.args.empty()) fail(t, "sum: needs at least one summand");
    std::vector<std::optional<Bundle>> parts(t.args.size());
    ManifoldPtr base = context;
    for (std::size_t k = 0; k < t.args.size(); ++k) {
      const Term& a = term_arg(t, k);
      if (is_bare_triv(a)) continue;
      parts[k] = eval_bundle(a, base);
      if (!base) base = parts[k]->base;
    }
    std::vector<Bundle> all;
    for (std::size_t k = 0; k < t.args.size(); ++k)
      all.push_back(parts[k] ? *parts[k] : eval_bundle(term_arg(t, k), base));
    return at(t, [&] { return whitney_sum(all); });
  }
  if (h == "ecube_line" || h == "ecube-line") {
    arity(t, 0, 0);
    return elliptic_cube_line();
  }
  if (h == "ex24" || h == "ex25" || h == "cy3") {
    return at(t, [&] {
      ExampleFamily f;
      if (h == "ex24") {
        arity(t, 3, 3);
        f = ex24(int_arg(t, 0), int_arg(t, 1), int_arg(t, 2));
      } else if (h == "ex25") {
        arity(t, 4, 4);
        f = ex25(int_arg(t, 0), int_arg(t, 1), int_arg(t, 2), int_arg(t, 3));
      } else {
        arity(t, 1, 1);
        long m = int_arg(t, 0);
        if (m > 64) fail(t, "cy3: m out of range");
        f = cy3(static_cast<int>(m));
      }
      if (f.m > 64) fail(t, h + ": m out of range");
      return materialize(f).bundle;
    });
  }
  fail(t, "unknown bundle '" + h + "'");
}

}  // namespace

ManifoldPtr parse_manifold(const std::string& text) { return eval_manifold(Parser(text).parse()); }

Bundle parse_bundle(const std::string& text) { return eval_bundle(Parser(text).parse(), nullptr); }

}  // namespace genus_forge
