// congru: command-line front end over the libcongru C API.
//
// Exit status: 0 the property holds or the construction succeeded, 1 the
// property fails (a witness is printed), 2 usage or precondition error.

#include <congru/congru.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

struct Failure {
  std::string message;
};

void check(congru_status s) {
  if (s != CONGRU_OK) throw Failure{congru_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Fn = std::unique_ptr<congru_fn, Deleter<congru_fn, congru_fn_free>>;
using Seq = std::unique_ptr<congru_seq, Deleter<congru_seq, congru_seq_free>>;
using Lift = std::unique_ptr<congru_lift_report, Deleter<congru_lift_report, congru_lift_free>>;
using Limit = std::unique_ptr<congru_limit, Deleter<congru_limit, congru_limit_free>>;
using Series = std::unique_ptr<congru_series, Deleter<congru_series, congru_series_free>>;
using Set = std::unique_ptr<congru_set, Deleter<congru_set, congru_set_free>>;
using Poly = std::unique_ptr<congru_poly, Deleter<congru_poly, congru_poly_free>>;

// Takes ownership of a returned C string.
std::string take(char* s) {
  std::string out = s ? s : "";
  congru_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "a,b,c" -> "a b c" so the integer-list parser can take it.
std::string csv_to_words(std::string s) {
  for (auto& c : s) {
    if (c == ',') c = ' ';
  }
  return s;
}

Fn load_fn(const std::string& path) {
  congru_fn* f = nullptr;
  check(congru_fn_parse(read_input(path).c_str(), &f));
  return Fn(f);
}

Seq load_seq_text(const std::string& text) {
  congru_seq* s = nullptr;
  check(congru_seq_parse(text.c_str(), &s));
  return Seq(s);
}

Seq load_seq(const std::string& path) { return load_seq_text(read_input(path)); }

std::string format_seq(const congru_seq* s) {
  char* out = nullptr;
  check(congru_seq_format(s, &out));
  return take(out);
}

std::string format_fn(const congru_fn* f) {
  char* out = nullptr;
  check(congru_fn_format(f, &out));
  return take(out);
}

Set load_set(const std::string& spec) {
  congru_set* s = nullptr;
  if (!spec.empty() && spec[0] == '@') {
    check(congru_set_parse(read_input(spec.substr(1)).c_str(), &s));
  } else {
    check(congru_set_from_spec(spec.c_str(), &s));
  }
  return Set(s);
}

std::string format_set(const congru_set* s) {
  char* out = nullptr;
  check(congru_set_format(s, &out));
  return take(out);
}

struct PolyArgs {
  std::string newton;
  std::string power;

  void add_to(CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--newton", newton, "Newton coefficients a_0,a_1,...");
    auto* b = cmd->add_option("--power", power, "power-basis coefficients c_0,c_1,...");
    a->excludes(b);
    if (required) cmd->require_option(1, 0);
  }
  bool given() const { return !newton.empty() || !power.empty(); }

  Poly load() const {
    if (!given()) throw Failure{"give --newton or --power"};
    auto seq = load_seq_text(csv_to_words(newton.empty() ? power : newton));
    congru_poly* f = nullptr;
    if (newton.empty()) {
      check(congru_poly_from_power(seq.get(), &f));
    } else {
      check(congru_poly_new(seq.get(), &f));
    }
    return Poly(f);
  }
};

struct ShapeArgs {
  std::uint64_t p = 2;
  unsigned N = 8;
  bool factorial = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--p", p, "prime for base-p digits")->capture_default_str();
    cmd->add_option("--N", N, "precision")->capture_default_str();
    cmd->add_flag("--factorial", factorial, "factorial digits (Z/(N+1)!)");
  }
  congru_limit_kind kind() const { return factorial ? CONGRU_FACTORIAL : CONGRU_BASE_P; }
};

// An operand is an integer, or @path for a digit file.
Limit load_limit(const ShapeArgs& shape, const std::string& operand) {
  congru_limit* x = nullptr;
  if (!operand.empty() && operand[0] == '@') {
    check(congru_limit_parse(read_input(operand.substr(1)).c_str(), &x));
  } else {
    check(congru_limit_from_int(shape.kind(), shape.p, shape.N, operand.c_str(), &x));
  }
  return Limit(x);
}

void print_limit(const congru_limit* x) {
  char* text = nullptr;
  check(congru_limit_format(x, &text));
  char* value = nullptr;
  check(congru_limit_to_int(x, &value));
  std::cout << take(text) << "INT " << take(value) << '\n';
}

Series load_series(const ShapeArgs& shape, const std::string& coeffs_path, std::size_t lcm_free_K) {
  congru_series* s = nullptr;
  if (lcm_free_K > 0) {
    if (shape.factorial) throw Failure{"the lcm-free series is defined for base p only"};
    check(congru_series_lcm_free(shape.p, lcm_free_K, shape.N, &s));
  } else {
    if (coeffs_path.empty()) throw Failure{"give --coeffs FILE or --lcm-free K"};
    auto coeffs = load_seq(coeffs_path);
    check(congru_series_new(shape.kind(), shape.p, shape.N, coeffs.get(), &s));
  }
  return Series(s);
}

std::vector<Fn> series_levels(const congru_series* s, unsigned count) {
  std::vector<Fn> out;
  for (unsigned n = 1; n <= count; ++n) {
    congru_fn* f = nullptr;
    check(congru_series_level(s, n, &f));
    out.emplace_back(f);
  }
  return out;
}

void print_witness(std::uint64_t x, std::uint64_t y) {
  std::cout << "WITNESS x=" << x << " y=" << y << '\n';
}

int cmd_check_finite(const std::string& path) {
  auto f = load_fn(path);
  int holds = 0;
  std::uint64_t x = 0, y = 0;
  check(congru_fn_check_cp(f.get(), &holds, &x, &y));
  std::cout << "CP: " << (holds ? "yes" : "no") << '\n';
  if (!holds) print_witness(x, y);
  return holds ? 0 : 1;
}

int cmd_represent(const std::string& path) {
  auto f = load_fn(path);
  int holds = 0;
  std::uint64_t x = 0, y = 0;
  check(congru_fn_check_cp(f.get(), &holds, &x, &y));
  if (!holds) {
    std::cout << "CP: no\n";
    print_witness(x, y);
    return 1;
  }
  congru_seq* c = nullptr;
  check(congru_fn_represent(f.get(), &c));
  Seq coeffs(c);
  std::cout << format_seq(coeffs.get());
  return 0;
}

Fn lift_input(const std::string& path, const std::string& values, std::uint64_t n,
              std::uint64_t m) {
  if (!values.empty()) {
    if (n == 0 || m == 0) throw Failure{"--values needs --n and --m"};
    std::string text = std::to_string(n) + " " + std::to_string(m) + " " + csv_to_words(values);
    congru_fn* f = nullptr;
    check(congru_fn_parse(text.c_str(), &f));
    return Fn(f);
  }
  if (path.empty()) throw Failure{"give a table file or --values"};
  auto f = load_fn(path);
  if ((n != 0 && congru_fn_n(f.get()) != n) || (m != 0 && congru_fn_m(f.get()) != m)) {
    throw Failure{"--n/--m disagree with the table header"};
  }
  return f;
}

int cmd_lift(const congru_fn* f, std::uint64_t T) {
  congru_lift_report* r = nullptr;
  check(congru_lift(f, T, &r));
  Lift report(r);
  congru_seq* v = nullptr;
  check(congru_lift_values(report.get(), &v));
  Seq values(v);
  if (congru_lift_succeeded(report.get())) {
    std::cout << "LIFTED T=" << T << '\n' << format_seq(values.get());
    return 0;
  }
  std::uint64_t step = 0;
  check(congru_lift_failure_step(report.get(), &step));
  std::cout << "INFEASIBLE step=" << step << '\n';
  std::vector<std::pair<std::string, std::string>> eqs;
  for (std::size_t i = 0; i < congru_lift_failure_system_size(report.get()); ++i) {
    char* a = nullptr;
    char* mod = nullptr;
    check(congru_lift_failure_equation(report.get(), i, &a, &mod));
    eqs.emplace_back(take(a), take(mod));
    std::cout << "SYSTEM x = " << eqs.back().first << " mod " << eqs.back().second << '\n';
  }
  std::size_t i = 0, j = 0;
  check(congru_lift_failure_conflict(report.get(), &i, &j));
  std::cout << "CONFLICT x = " << eqs[i].first << " mod " << eqs[i].second << " ; x = "
            << eqs[j].first << " mod " << eqs[j].second << '\n';
  int found = 0;
  std::uint64_t earlier = 0, g = 0, re = 0, rs = 0;
  check(congru_forced_obstruction(f, step, &found, &earlier, &g, &re, &rs));
  if (found) {
    std::cout << "FORCED i=" << earlier << " x = " << re << " mod " << g << " ; x = " << rs
              << " mod " << g << '\n';
  }
  std::cout << "PARTIAL\n" << format_seq(values.get());
  return 1;
}

int cmd_check_lcm(const std::string& path, bool from_prefix) {
  auto coeffs = load_seq(path);
  if (from_prefix) {
    congru_seq* c = nullptr;
    check(congru_seq_newton(coeffs.get(), &c));
    coeffs.reset(c);
  }
  int holds = 0;
  std::size_t k = 0;
  char* a = nullptr;
  char* l = nullptr;
  check(congru_seq_check_lcm(coeffs.get(), &holds, &k, &a, &l));
  std::cout << "LCM: " << (holds ? "yes" : "no") << '\n';
  if (!holds) {
    std::cout << "VIOLATION k=" << k << " a_k=" << take(a) << " lcm=" << take(l) << '\n';
  }
  return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence-preserving functions: checks, lifts, series and set lattices"};
  app.require_subcommand(1);
  int status = 0;

  std::string path, values;
  std::uint64_t n = 0, m = 0, T = 0, r = 0, s = 0;

  auto* check_finite = app.add_subcommand("check-finite", "is a table Z/n -> Z/m CP?");
  check_finite->add_option("table", path, "table file ('-' for stdin)")->required();
  check_finite->callback([&] { status = cmd_check_finite(path); });

  auto* represent = app.add_subcommand("represent", "canonical binomial coefficients of a CP table");
  represent->add_option("table", path, "table file")->required();
  represent->callback([&] { status = cmd_represent(path); });

  auto* lift = app.add_subcommand("lift", "lift a CP table to a CP prefix F(0..T)");
  lift->add_option("table", path, "table file");
  lift->add_option("--values", values, "table values v_0,...,v_{n-1} instead of a file");
  lift->add_option("--n", n, "source modulus");
  lift->add_option("--m", m, "target modulus");
  lift->add_option("--T", T, "last argument to compute")->required();
  lift->callback([&] {
    auto f = lift_input(path, values, n, m);
    status = cmd_lift(f.get(), T);
  });

  auto* lift_finite = app.add_subcommand("lift-finite", "lift Z/n -> Z/m to Z/r -> Z/s");
  lift_finite->add_option("table", path, "table file")->required();
  lift_finite->add_option("--r", r, "new source modulus")->required();
  lift_finite->add_option("--s", s, "new target modulus")->required();
  lift_finite->callback([&] {
    auto f = load_fn(path);
    congru_fn* g = nullptr;
    check(congru_fn_lift_finite(f.get(), r, s, &g));
    std::cout << format_fn(Fn(g).get());
  });

  auto* coeffs = app.add_subcommand("coeffs", "Newton coefficients of a prefix file");
  coeffs->add_option("prefix", path, "integer list F(0) F(1) ...")->required();
  coeffs->callback([&] {
    auto prefix = load_seq(path);
    congru_seq* c = nullptr;
    check(congru_seq_newton(prefix.get(), &c));
    std::cout << format_seq(Seq(c).get());
  });

  bool lcm_from_prefix = false;
  auto* check_lcm = app.add_subcommand("check-lcm", "lcm(k) | a_k for a coefficient file");
  check_lcm->add_option("coeffs", path, "integer list a_0 a_1 ...")->required();
  check_lcm->add_flag("--prefix", lcm_from_prefix, "the file holds values F(0..T) instead");
  check_lcm->callback([&] { status = cmd_check_lcm(path, lcm_from_prefix); });

  auto* check_prefix = app.add_subcommand("check-prefix", "pairwise CP check of a prefix file");
  check_prefix->add_option("prefix", path, "integer list F(0) F(1) ...")->required();
  check_prefix->callback([&] {
    auto prefix = load_seq(path);
    int holds = 0;
    std::uint64_t x = 0, y = 0;
    check(congru_seq_check_cp(prefix.get(), &holds, &x, &y));
    std::cout << "CP: " << (holds ? "yes" : "no") << '\n';
    if (!holds) print_witness(x, y);
    status = holds ? 0 : 1;
  });

  std::uint64_t ex_x = 0;
  long ex_a = 2;
  auto* exemplar = app.add_subcommand("exemplar", "floor-of-exponential exemplars");
  exemplar->require_subcommand(1);
  auto* e_fact = exemplar->add_subcommand("e-fact", "floor(e x!), 1 at x = 0");
  e_fact->add_option("--x", ex_x, "argument")->required();
  e_fact->callback([&] {
    char* out = nullptr;
    check(congru_exemplar_e_fact(ex_x, &out));
    std::cout << take(out) << '\n';
  });
  auto* ea_fact = exemplar->add_subcommand("ea-fact", "floor(e^{1/a} a^x x!), a >= 2");
  ea_fact->add_option("--a", ex_a, "a >= 2")->required();
  ea_fact->add_option("--x", ex_x, "argument")->required();
  ea_fact->callback([&] {
    char* out = nullptr;
    check(congru_exemplar_ea_fact(ex_a, ex_x, &out));
    std::cout << take(out) << '\n';
  });

  // padic
  ShapeArgs shape;
  std::vector<std::string> operands;
  std::string coeffs_path;
  std::size_t lcm_free_K = 0;
  std::size_t cutoff = SIZE_MAX;
  unsigned count = 4;
  std::string x_operand;
  std::vector<std::string> level_files;
  std::vector<unsigned> mu;

  auto* padic = app.add_subcommand("padic", "truncated p-adic and profinite integers");
  padic->require_subcommand(1);

  auto* from_int = padic->add_subcommand("from-int", "digits of an integer");
  shape.add_to(from_int);
  from_int->add_option("z", operands, "integer")->required()->expected(1);
  from_int->callback([&] { print_limit(load_limit(shape, operands.at(0)).get()); });

  auto binary = [&](const char* name, const char* help,
                    congru_status (*op)(const congru_limit*, const congru_limit*,
                                        congru_limit**)) {
    auto* cmd = padic->add_subcommand(name, help);
    shape.add_to(cmd);
    cmd->add_option("operands", operands, "two integers or @files")->required()->expected(2);
    cmd->callback([&, op] {
      auto a = load_limit(shape, operands.at(0));
      auto b = load_limit(shape, operands.at(1));
      congru_limit* out = nullptr;
      check(op(a.get(), b.get(), &out));
      print_limit(Limit(out).get());
    });
  };
  binary("add", "x + y digit-wise", congru_limit_add);
  binary("sub", "x - y digit-wise", congru_limit_sub);
  binary("mul", "x * y digit-wise", congru_limit_mul);

  auto* val = padic->add_subcommand("val", "valuation at finite precision");
  shape.add_to(val);
  val->add_option("x", operands, "integer or @file")->required()->expected(1);
  val->callback([&] {
    auto x = load_limit(shape, operands.at(0));
    unsigned v = 0;
    int saturated = 0;
    check(congru_limit_val(x.get(), &v, &saturated));
    std::cout << "VAL " << (saturated ? ">=" : "") << v << '\n';
  });

  auto* dist = padic->add_subcommand("dist", "distance 2^-val(x - y)");
  shape.add_to(dist);
  dist->add_option("operands", operands, "two integers or @files")->required()->expected(2);
  dist->callback([&] {
    auto a = load_limit(shape, operands.at(0));
    auto b = load_limit(shape, operands.at(1));
    unsigned e = 0;
    int upper = 0;
    check(congru_limit_dist(a.get(), b.get(), &e, &upper));
    std::cout << "DIST " << (upper ? "<=" : "") << "2^-" << e << '\n';
  });

  auto* mahler = padic->add_subcommand("mahler-eval", "evaluate a truncated Mahler series");
  shape.add_to(mahler);
  mahler->add_option("--coeffs", coeffs_path, "integer coefficient file");
  mahler->add_option("--lcm-free", lcm_free_K, "use the lcm-free series with K terms");
  mahler->add_option("--x", x_operand, "argument (integer or @file)")->required();
  mahler->add_option("--cutoff", cutoff, "keep only terms k < cutoff");
  mahler->callback([&] {
    auto series = load_series(shape, coeffs_path, lcm_free_K);
    auto x = load_limit(shape, x_operand);
    congru_limit* out = nullptr;
    check(congru_series_eval(series.get(), x.get(), cutoff, &out));
    print_limit(Limit(out).get());
  });

  auto* levels = padic->add_subcommand("levels", "level tables of a series");
  shape.add_to(levels);
  levels->add_option("--coeffs", coeffs_path, "integer coefficient file");
  levels->add_option("--lcm-free", lcm_free_K, "use the lcm-free series with K terms");
  levels->add_option("--count", count, "levels 1..count")->capture_default_str();
  levels->callback([&] {
    auto series = load_series(shape, coeffs_path, lcm_free_K);
    auto tower = series_levels(series.get(), count);
    for (unsigned i = 0; i < tower.size(); ++i) {
      std::cout << "LEVEL " << i + 1 << '\n' << format_fn(tower[i].get());
    }
  });

  auto* check_system = padic->add_subcommand("check-system", "inverse-system coherence");
  shape.add_to(check_system);
  check_system->add_option("tables", level_files, "level table files, level 1 first");
  check_system->add_option("--coeffs", coeffs_path, "series coefficient file instead");
  check_system->add_option("--lcm-free", lcm_free_K, "use the lcm-free series with K terms");
  check_system->add_option("--count", count, "levels for a series")->capture_default_str();
  check_system->add_option("--mu", mu, "source level of each table (default 1, 2, ...)");
  check_system->callback([&] {
    std::vector<Fn> tower;
    if (!level_files.empty()) {
      for (const auto& file : level_files) tower.push_back(load_fn(file));
    } else {
      auto series = load_series(shape, coeffs_path, lcm_free_K);
      tower = series_levels(series.get(), count);
    }
    std::vector<const congru_fn*> raw;
    for (const auto& f : tower) raw.push_back(f.get());
    if (!mu.empty() && mu.size() != raw.size()) throw Failure{"--mu needs one value per level"};
    int holds = 0;
    unsigned wn = 0, wm = 0;
    std::uint64_t wx = 0;
    check(congru_check_system(raw.data(), raw.size(), shape.kind(), shape.p,
                              mu.empty() ? nullptr : mu.data(), &holds, &wn, &wm, &wx));
    std::cout << "SYSTEM: " << (holds ? "coherent" : "incoherent") << '\n';
    if (!holds) std::cout << "WITNESS n=" << wn << " m=" << wm << " x=" << wx << '\n';
    status = holds ? 0 : 1;
  });

  std::uint64_t lf_p = 2;
  unsigned lf_N = 3;
  std::size_t lf_K = 0;
  auto* lcm_free = padic->add_subcommand("lcm-free", "level tables of the lcm-free series");
  lcm_free->add_option("--p", lf_p, "prime")->capture_default_str();
  lcm_free->add_option("--N", lf_N, "precision, >= 2")->capture_default_str();
  lcm_free->add_option("--K", lf_K, "number of terms (default p^N)");
  lcm_free->callback([&] {
    std::size_t K = lf_K;
    if (K == 0) {
      K = 1;
      for (unsigned i = 0; i < lf_N; ++i) K *= lf_p;
    }
    congru_series* raw = nullptr;
    check(congru_series_lcm_free(lf_p, K, lf_N, &raw));
    Series series(raw);
    auto tower = series_levels(series.get(), lf_N);
    status = 0;
    for (unsigned i = 0; i < tower.size(); ++i) {
      int holds = 0;
      std::uint64_t x = 0, y = 0;
      check(congru_fn_check_cp(tower[i].get(), &holds, &x, &y));
      std::cout << "LEVEL " << i + 1 << " CP: " << (holds ? "yes" : "no") << '\n'
                << format_fn(tower[i].get());
      if (!holds && status == 0) {
        print_witness(x, y);
        status = 1;
      }
    }
  });

  // lattice
  PolyArgs poly;
  std::string set_spec, x_spec;
  std::int64_t window = 0;
  auto* lattice = app.add_subcommand("lattice", "eventually periodic sets and their lattices");
  lattice->require_subcommand(1);
  const char* spec_help = "rec:d:r,.. | ray:start:d | rat:d:S:F:R | fin:x,.. | @file";

  auto* preimage = lattice->add_subcommand("preimage", "f^{-1}(L) for a CP polynomial f");
  poly.add_to(preimage, false);
  preimage->add_option("--set", set_spec, spec_help)->required();
  preimage->callback([&] {
    auto f = poly.load();
    auto L = load_set(set_spec);
    congru_set* out = nullptr;
    check(congru_preimage(f.get(), L.get(), &out));
    std::cout << format_set(Set(out).get());
  });

  // X is --X, or f^{-1}(L) when a polynomial is given.
  auto load_x = [&](const congru_set* L) {
    if (poly.given()) {
      if (!x_spec.empty()) throw Failure{"give either --X or a polynomial, not both"};
      auto f = poly.load();
      congru_set* out = nullptr;
      check(congru_preimage(f.get(), L, &out));
      return Set(out);
    }
    if (x_spec.empty()) throw Failure{"give --X or a polynomial"};
    return load_set(x_spec);
  };

  auto* member = lattice->add_subcommand("member", "is X in the lattice generated by L?");
  poly.add_to(member, false);
  member->add_option("--L", set_spec, spec_help)->required();
  member->add_option("--X", x_spec, spec_help);
  member->callback([&] {
    auto L = load_set(set_spec);
    auto X = load_x(L.get());
    int is_member = 0;
    char* detail = nullptr;
    check(congru_membership(L.get(), X.get(), &is_member, &detail));
    std::cout << "MEMBER: " << (is_member ? "yes" : "no") << '\n'
              << (is_member ? "CERTIFICATE " : "REASON ") << take(detail) << '\n';
    status = is_member ? 0 : 1;
  });

  auto* certify = lattice->add_subcommand("certify-neg", "non-membership from unbounded negatives");
  poly.add_to(certify, false);
  certify->add_option("--L", set_spec, spec_help)->required();
  certify->add_option("--X", x_spec, spec_help);
  certify->callback([&] {
    auto L = load_set(set_spec);
    auto X = load_x(L.get());
    int found = 0;
    char* text = nullptr;
    check(congru_certify_negatives(L.get(), X.get(), &found, &text));
    if (found) {
      std::cout << "NONMEMBER: certified\nCERTIFICATE " << take(text) << '\n';
    } else {
      std::cout << "NONMEMBER: inconclusive\n";
    }
    status = found ? 0 : 1;
  });

  auto* uinter = lattice->add_subcommand("union-intersection", "preimage as a union of intersections");
  poly.add_to(uinter, false);
  uinter->add_option("--set", set_spec, spec_help)->required();
  uinter->add_option("--window", window, "monotonicity window [-w, w] (default 4d)");
  uinter->callback([&] {
    auto f = poly.load();
    auto L = load_set(set_spec);
    congru_set* rhs = nullptr;
    char* expr = nullptr;
    check(congru_union_intersection(f.get(), L.get(), window, &rhs, &expr));
    Set expression_set(rhs);
    congru_set* lhs = nullptr;
    check(congru_preimage(f.get(), L.get(), &lhs));
    Set preimage_set(lhs);
    const bool agree = congru_set_equal(expression_set.get(), preimage_set.get()) != 0;
    std::cout << "EXPRESSION " << take(expr) << '\n'
              << format_set(expression_set.get()) << "AGREES: " << (agree ? "yes" : "no")
              << '\n';
    status = agree ? 0 : 1;
  });

  // ring helpers
  std::string ring_x, ring_m;
  std::uint64_t ring_k = 0;
  std::vector<std::string> equations;
  auto* ring = app.add_subcommand("ring", "residue-ring helpers");
  ring->require_subcommand(1);
  auto* proj = ring->add_subcommand("proj", "x mod m");
  proj->add_option("--x", ring_x, "integer")->required();
  proj->add_option("--m", ring_m, "modulus")->required();
  proj->callback([&] {
    char* out = nullptr;
    check(congru_proj(ring_x.c_str(), ring_m.c_str(), &out));
    std::cout << take(out) << '\n';
  });
  auto* gcrt = ring->add_subcommand("gcrt", "solve x = a_i mod m_i");
  gcrt->add_option("equations", equations, "a:m pairs")->required();
  gcrt->callback([&] {
    std::vector<std::string> as, ms;
    for (const auto& e : equations) {
      auto colon = e.find(':');
      if (colon == std::string::npos) throw Failure{"equation '" + e + "' is not a:m"};
      as.push_back(e.substr(0, colon));
      ms.push_back(e.substr(colon + 1));
    }
    std::vector<const char*> ap, mp;
    for (std::size_t i = 0; i < as.size(); ++i) {
      ap.push_back(as[i].c_str());
      mp.push_back(ms[i].c_str());
    }
    int feasible = 0;
    char* least = nullptr;
    char* period = nullptr;
    std::size_t i = 0, j = 0;
    check(congru_gcrt(as.size(), ap.data(), mp.data(), &feasible, &least, &period, &i, &j));
    if (feasible) {
      std::cout << "SOLUTION x = " << take(least) << " mod " << take(period) << '\n';
    } else {
      std::cout << "INFEASIBLE\nCONFLICT x = " << as[i] << " mod " << ms[i] << " ; x = " << as[j]
                << " mod " << ms[j] << '\n';
    }
    status = feasible ? 0 : 1;
  });
  auto* lcm = ring->add_subcommand("lcm", "lcm(1..k)");
  lcm->add_option("--k", ring_k, "k")->required();
  lcm->callback([&] {
    char* out = nullptr;
    check(congru_lcm_upto(ring_k, &out));
    std::cout << take(out) << '\n';
  });
  auto* nu = ring->add_subcommand("nu", "largest prime-power component of m");
  nu->add_option("--m", ring_k, "m")->required();
  nu->callback([&] {
    std::uint64_t out = 0;
    check(congru_nu(ring_k, &out));
    std::cout << out << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return 2;
  }
  return status;
}
