#include "congru/congru.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "congru/error.hpp"
#include "congru/finite_cp.hpp"
#include "congru/lattices.hpp"
#include "congru/lifting.hpp"
#include "congru/limits.hpp"
#include "congru/newton.hpp"
#include "congru/ringcore.hpp"
#include "congru/text_io.hpp"

struct congru_fn {
  congru::FiniteFn value;
};
struct congru_seq {
  std::vector<congru::Int> values;
};
struct congru_lift_report {
  congru::LiftReport value;
};
struct congru_limit {
  congru::LimitApprox value;
};
struct congru_series {
  congru::MahlerSeries value;
};
struct congru_set {
  congru::EPSet value;
};
struct congru_poly {
  congru::CpPolynomial value;
};

namespace {

using congru::Int;

thread_local std::string last_error;

struct InvalidArgument : std::exception {
  explicit InvalidArgument(std::string m) : message(std::move(m)) {}
  const char* what() const noexcept override { return message.c_str(); }
  std::string message;
};

template <class F>
congru_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return CONGRU_OK;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return CONGRU_INVALID_ARGUMENT;
  } catch (const congru::ParseError& e) {
    last_error = e.what();
    return CONGRU_PARSE;
  } catch (const congru::LimitError& e) {
    last_error = e.what();
    return CONGRU_LIMIT;
  } catch (const congru::PreconditionError& e) {
    last_error = e.what();
    return CONGRU_PRECONDITION;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return CONGRU_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CONGRU_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CONGRU_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is null");
  return *p;
}

template <class T>
T& need_out(T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("output ") + what + " is null");
  return *p;
}

std::string_view need_str(const char* s, const char* what) {
  if (s == nullptr) throw InvalidArgument(std::string(what) + " is null");
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Int parse_dec(const char* s, const char* what) {
  if (s == nullptr) throw InvalidArgument(std::string(what) + " is null");
  Int v;
  const char* digits = *s == '+' ? s + 1 : s;
  if (*digits == '\0' || v.set_str(digits, 10) != 0) {
    throw congru::ParseError(std::string(what) + " is not a decimal integer: '" + s + "'");
  }
  return v;
}

congru::LimitShape make_shape(congru_limit_kind kind, uint64_t p, unsigned N) {
  if (kind == CONGRU_FACTORIAL) return congru::LimitShape::factorial(N);
  if (kind != CONGRU_BASE_P) throw InvalidArgument("unknown limit kind");
  return congru::LimitShape::base_p(p, N);
}

congru::LimitKind to_kind(congru_limit_kind kind) {
  if (kind == CONGRU_FACTORIAL) return congru::LimitKind::factorial;
  if (kind != CONGRU_BASE_P) throw InvalidArgument("unknown limit kind");
  return congru::LimitKind::base_p;
}

void put_check(const congru::CpCheck& c, int* holds, uint64_t* wx, uint64_t* wy) {
  need_out(holds, "holds") = c.holds ? 1 : 0;
  if (!c.holds) {
    if (wx) *wx = c.witness->x;
    if (wy) *wy = c.witness->y;
  }
}

const congru::LiftFailure& failure_of(const congru_lift_report* r) {
  const auto& report = need(r, "report").value;
  if (report.succeeded()) throw congru::PreconditionError("the lift succeeded; no failure data");
  return report.failure();
}

}  // namespace

extern "C" {

const char* congru_version(void) { return "0.1.0"; }
const char* congru_last_error(void) { return last_error.c_str(); }
void congru_string_free(char* s) { std::free(s); }

congru_status congru_proj(const char* x, const char* m, char** out) {
  return guard([&] {
    Int mod = parse_dec(m, "m");
    congru::require(mod >= 1, "modulus must be >= 1");
    need_out(out, "out") = dup(congru::to_string(congru::proj(parse_dec(x, "x"), mod).value()));
  });
}

congru_status congru_gcrt(size_t count, const char* const* targets, const char* const* moduli,
                          int* feasible, char** least, char** period, size_t* conflict_first,
                          size_t* conflict_second) {
  return guard([&] {
    if (count > 0 && (targets == nullptr || moduli == nullptr)) {
      throw InvalidArgument("equation arrays are null");
    }
    congru::CongruenceSystem system;
    for (size_t i = 0; i < count; ++i) {
      system.add(parse_dec(targets[i], "target"), parse_dec(moduli[i], "modulus"));
    }
    auto result = congru::gcrt_solve(system);
    need_out(feasible, "feasible") = result.feasible() ? 1 : 0;
    if (result.feasible()) {
      if (least) *least = dup(congru::to_string(result.solution->least));
      if (period) *period = dup(congru::to_string(result.solution->period));
    } else {
      if (conflict_first) *conflict_first = result.conflict->first;
      if (conflict_second) *conflict_second = result.conflict->second;
    }
  });
}

congru_status congru_lcm_upto(uint64_t k, char** out) {
  return guard([&] { need_out(out, "out") = dup(congru::to_string(congru::lcm_upto(k))); });
}

congru_status congru_nu(uint64_t m, uint64_t* out) {
  return guard([&] { need_out(out, "out") = congru::nu_of_modulus(m); });
}

congru_status congru_binom(uint64_t k, const char* x, char** out) {
  return guard([&] {
    need_out(out, "out") = dup(congru::to_string(congru::binomial_poly(k, parse_dec(x, "x"))));
  });
}

congru_status congru_fn_new(uint64_t n, uint64_t m, const uint64_t* table, congru_fn** out) {
  return guard([&] {
    if (n > 0 && table == nullptr) throw InvalidArgument("table is null");
    std::vector<uint64_t> values(table, table + n);
    need_out(out, "out") = new congru_fn{congru::FiniteFn(n, m, std::move(values))};
  });
}

congru_status congru_fn_parse(const char* text, congru_fn** out) {
  return guard([&] {
    need_out(out, "out") = new congru_fn{congru::parse_finite_fn(need_str(text, "text"))};
  });
}

void congru_fn_free(congru_fn* f) { delete f; }
uint64_t congru_fn_n(const congru_fn* f) { return f ? f->value.n() : 0; }
uint64_t congru_fn_m(const congru_fn* f) { return f ? f->value.m() : 0; }

congru_status congru_fn_get(const congru_fn* f, uint64_t x, uint64_t* out) {
  return guard([&] { need_out(out, "out") = need(f, "f").value(x); });
}

congru_status congru_fn_format(const congru_fn* f, char** out) {
  return guard([&] { need_out(out, "out") = dup(congru::format_finite_fn(need(f, "f").value)); });
}

congru_status congru_fn_check_cp(const congru_fn* f, int* holds, uint64_t* wx, uint64_t* wy) {
  return guard([&] { put_check(congru::is_cp_finite(need(f, "f").value), holds, wx, wy); });
}

congru_status congru_fn_represent(const congru_fn* f, congru_seq** coeffs) {
  return guard([&] {
    auto repr = congru::represent_cp(need(f, "f").value);
    need_out(coeffs, "coeffs") = new congru_seq{repr.coeffs()};
  });
}

congru_status congru_repr_eval(uint64_t n, uint64_t m, const congru_seq* coeffs, uint64_t x,
                               uint64_t* out) {
  return guard([&] {
    congru::CpCoeffs c(n, m, need(coeffs, "coeffs").values);
    congru::require(x < n, "argument outside Z/nZ");
    auto r = congru::eval_repr(c, congru::Residue(Int(static_cast<unsigned long>(x)),
                                                  Int(static_cast<unsigned long>(n))));
    need_out(out, "out") = r.value().get_ui();
  });
}

congru_status congru_fn_lift_finite(const congru_fn* f, uint64_t r, uint64_t s,
                                    congru_fn** out) {
  return guard([&] {
    need_out(out, "out") = new congru_fn{congru::lift_between_finite(need(f, "f").value, r, s)};
  });
}

congru_status congru_count_cp(uint64_t n, uint64_t m, uint64_t* out) {
  return guard([&] { need_out(out, "out") = congru::count_cp(n, m); });
}

congru_status congru_for_each_cp(uint64_t n, uint64_t m, congru_fn_visitor visit, void* user) {
  return guard([&] {
    if (visit == nullptr) throw InvalidArgument("visitor is null");
    congru::for_each_cp(n, m, [&](const congru::FiniteFn& f) {
      congru_fn handle{f};
      return visit(&handle, user) != 0;
    });
  });
}

congru_status congru_seq_new(congru_seq** out) {
  return guard([&] { need_out(out, "out") = new congru_seq{}; });
}

congru_status congru_seq_parse(const char* text, congru_seq** out) {
  return guard([&] {
    need_out(out, "out") = new congru_seq{congru::parse_int_list(need_str(text, "text"))};
  });
}

void congru_seq_free(congru_seq* s) { delete s; }

congru_status congru_seq_push(congru_seq* s, const char* value) {
  return guard([&] {
    if (s == nullptr) throw InvalidArgument("sequence is null");
    s->values.push_back(parse_dec(value, "value"));
  });
}

size_t congru_seq_size(const congru_seq* s) { return s ? s->values.size() : 0; }

congru_status congru_seq_get(const congru_seq* s, size_t i, char** out) {
  return guard(
      [&] { need_out(out, "out") = dup(congru::to_string(need(s, "sequence").values.at(i))); });
}

congru_status congru_seq_format(const congru_seq* s, char** out) {
  return guard(
      [&] { need_out(out, "out") = dup(congru::format_int_list(need(s, "sequence").values)); });
}

congru_status congru_seq_newton(const congru_seq* values, congru_seq** coeffs) {
  return guard([&] {
    need_out(coeffs, "coeffs") =
        new congru_seq{congru::newton_coeffs(need(values, "values").values).coeffs};
  });
}

congru_status congru_seq_synthesize(const congru_seq* coeffs, uint64_t T, congru_seq** values) {
  return guard([&] {
    auto prefix = congru::newton_synthesize(congru::NewtonCoeffs{need(coeffs, "coeffs").values}, T);
    need_out(values, "values") = new congru_seq{prefix.values()};
  });
}

congru_status congru_seq_check_cp(const congru_seq* values, int* holds, uint64_t* wx,
                                  uint64_t* wy) {
  return guard([&] {
    congru::NatPrefix prefix(need(values, "values").values);
    put_check(congru::is_cp_prefix(prefix), holds, wx, wy);
  });
}

congru_status congru_seq_check_lcm(const congru_seq* coeffs, int* holds, size_t* k, char** coeff,
                                   char** lcm) {
  return guard([&] {
    auto bad = congru::check_lcm_divisibility(congru::NewtonCoeffs{need(coeffs, "coeffs").values});
    need_out(holds, "holds") = bad ? 0 : 1;
    if (bad) {
      if (k) *k = bad->k;
      if (coeff) *coeff = dup(congru::to_string(bad->coeff));
      if (lcm) *lcm = dup(congru::to_string(bad->lcm));
    }
  });
}

congru_status congru_verify_lift(const congru_seq* values, const congru_fn* f, int* ok) {
  return guard([&] {
    congru::NatPrefix prefix(need(values, "values").values);
    need_out(ok, "ok") = congru::verify_lift(prefix, need(f, "f").value) ? 1 : 0;
  });
}

congru_status congru_lift(const congru_fn* f, uint64_t T, congru_lift_report** out) {
  return guard([&] {
    need_out(out, "out") = new congru_lift_report{congru::lift_prefix(need(f, "f").value, T)};
  });
}

void congru_lift_free(congru_lift_report* r) { delete r; }

int congru_lift_succeeded(const congru_lift_report* r) {
  return r && r->value.succeeded() ? 1 : 0;
}

const char* congru_lift_tie_break(const congru_lift_report* r) {
  return r ? r->value.tie_break.c_str() : "";
}

congru_status congru_lift_values(const congru_lift_report* r, congru_seq** out) {
  return guard([&] {
    const auto& report = need(r, "report").value;
    const auto& prefix = report.succeeded() ? report.prefix() : report.failure().partial;
    need_out(out, "out") = new congru_seq{prefix.values()};
  });
}

congru_status congru_lift_failure_step(const congru_lift_report* r, uint64_t* step) {
  return guard([&] { need_out(step, "step") = failure_of(r).step; });
}

size_t congru_lift_failure_system_size(const congru_lift_report* r) {
  if (r == nullptr || r->value.succeeded()) return 0;
  return r->value.failure().system.size();
}

congru_status congru_lift_failure_equation(const congru_lift_report* r, size_t i, char** target,
                                           char** modulus) {
  return guard([&] {
    const auto& eq = failure_of(r).system[i];
    need_out(target, "target") = dup(congru::to_string(eq.target));
    need_out(modulus, "modulus") = dup(congru::to_string(eq.modulus));
  });
}

congru_status congru_lift_failure_conflict(const congru_lift_report* r, size_t* first,
                                           size_t* second) {
  return guard([&] {
    const auto& c = failure_of(r).conflict;
    need_out(first, "first") = c.first;
    need_out(second, "second") = c.second;
  });
}

congru_status congru_forced_obstruction(const congru_fn* f, uint64_t step, int* found,
                                        uint64_t* earlier, uint64_t* g,
                                        uint64_t* residue_earlier, uint64_t* residue_step) {
  return guard([&] {
    auto ob = congru::forced_obstruction(need(f, "f").value, step);
    need_out(found, "found") = ob ? 1 : 0;
    if (ob) {
      if (earlier) *earlier = ob->earlier;
      if (g) *g = ob->from_earlier.modulus.get_ui();
      if (residue_earlier) *residue_earlier = ob->from_earlier.target.get_ui();
      if (residue_step) *residue_step = ob->from_target.target.get_ui();
    }
  });
}

congru_status congru_exemplar_e_fact(uint64_t x, char** out) {
  return guard([&] { need_out(out, "out") = dup(congru::to_string(congru::exemplar_floor_e_fact(x))); });
}

congru_status congru_exemplar_ea_fact(long a, uint64_t x, char** out) {
  return guard(
      [&] { need_out(out, "out") = dup(congru::to_string(congru::exemplar_floor_ea_fact(a, x))); });
}

congru_status congru_limit_from_int(congru_limit_kind kind, uint64_t p, unsigned N, const char* z,
                                    congru_limit** out) {
  return guard([&] {
    need_out(out, "out") =
        new congru_limit{congru::from_int(make_shape(kind, p, N), parse_dec(z, "z"))};
  });
}

congru_status congru_limit_parse(const char* text, congru_limit** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_limit{congru::parse_limit(need_str(text, "text"))}; });
}

void congru_limit_free(congru_limit* x) { delete x; }

congru_status congru_limit_format(const congru_limit* x, char** out) {
  return guard([&] { need_out(out, "out") = dup(congru::format_limit(need(x, "x").value)); });
}

congru_status congru_limit_to_int(const congru_limit* x, char** out) {
  return guard(
      [&] { need_out(out, "out") = dup(congru::to_string(congru::to_int(need(x, "x").value))); });
}

congru_status congru_limit_add(const congru_limit* a, const congru_limit* b, congru_limit** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_limit{need(a, "a").value + need(b, "b").value}; });
}

congru_status congru_limit_sub(const congru_limit* a, const congru_limit* b, congru_limit** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_limit{need(a, "a").value - need(b, "b").value}; });
}

congru_status congru_limit_mul(const congru_limit* a, const congru_limit* b, congru_limit** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_limit{need(a, "a").value * need(b, "b").value}; });
}

congru_status congru_limit_neg(const congru_limit* a, congru_limit** out) {
  return guard([&] { need_out(out, "out") = new congru_limit{-need(a, "a").value}; });
}

congru_status congru_limit_val(const congru_limit* x, unsigned* value, int* saturated) {
  return guard([&] {
    auto v = congru::val(need(x, "x").value);
    need_out(value, "value") = v.value;
    need_out(saturated, "saturated") = v.saturated ? 1 : 0;
  });
}

congru_status congru_limit_dist(const congru_limit* x, const congru_limit* y, unsigned* exponent,
                                int* upper_bound) {
  return guard([&] {
    auto d = congru::dist(need(x, "x").value, need(y, "y").value);
    need_out(exponent, "exponent") = d.exponent;
    need_out(upper_bound, "upper_bound") = d.upper_bound ? 1 : 0;
  });
}

congru_status congru_series_new(congru_limit_kind kind, uint64_t p, unsigned N,
                                const congru_seq* coeffs, congru_series** out) {
  return guard([&] {
    need_out(out, "out") = new congru_series{
        congru::MahlerSeries::from_integers(make_shape(kind, p, N), need(coeffs, "coeffs").values)};
  });
}

congru_status congru_series_lcm_free(uint64_t p, size_t K, unsigned N, congru_series** out) {
  return guard([&] { need_out(out, "out") = new congru_series{congru::lcm_free_series(p, K, N)}; });
}

void congru_series_free(congru_series* s) { delete s; }
size_t congru_series_size(const congru_series* s) { return s ? s->value.size() : 0; }

congru_status congru_series_eval(const congru_series* s, const congru_limit* x, size_t cutoff,
                                 congru_limit** out) {
  return guard([&] {
    std::optional<std::size_t> c;
    if (cutoff != SIZE_MAX) c = cutoff;
    need_out(out, "out") =
        new congru_limit{congru::mahler_eval(need(s, "series").value, need(x, "x").value, c)};
  });
}

congru_status congru_series_level(const congru_series* s, unsigned level, congru_fn** out) {
  return guard([&] {
    const auto& series = need(s, "series").value;
    auto phi = [&series](const congru::LimitApprox& x) { return congru::mahler_eval(series, x); };
    need_out(out, "out") = new congru_fn{congru::level_restrict(phi, series.shape(), level).table};
  });
}

congru_status congru_check_system(const congru_fn* const* levels, size_t count,
                                  congru_limit_kind kind, uint64_t p, const unsigned* mu,
                                  int* holds, unsigned* wn, unsigned* wm, uint64_t* wx) {
  return guard([&] {
    if (count > 0 && levels == nullptr) throw InvalidArgument("levels is null");
    std::vector<congru::LevelFn> tower;
    for (size_t i = 0; i < count; ++i) {
      tower.push_back(congru::LevelFn{static_cast<unsigned>(i + 1), need(levels[i], "level").value});
    }
    std::vector<unsigned> mu_values;
    if (mu != nullptr) mu_values.assign(mu, mu + count);
    auto check = congru::check_inverse_system(tower, to_kind(kind), p, mu_values);
    need_out(holds, "holds") = check.holds ? 1 : 0;
    if (!check.holds) {
      if (wn) *wn = check.witness->n;
      if (wm) *wm = check.witness->m;
      if (wx) *wx = check.witness->x;
    }
  });
}

congru_status congru_check_lipschitz(const congru_fn* level_table, unsigned level, uint64_t p,
                                     int* holds, uint64_t* wx, uint64_t* wy) {
  return guard([&] {
    congru::LevelFn phi{level, need(level_table, "level table").value};
    put_check(congru::check_one_lipschitz(phi, p), holds, wx, wy);
  });
}

congru_status congru_set_parse(const char* text, congru_set** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_set{congru::parse_epset(need_str(text, "text"))}; });
}

congru_status congru_set_from_spec(const char* spec, congru_set** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_set{congru::parse_set_spec(need_str(spec, "spec"))}; });
}

void congru_set_free(congru_set* s) { delete s; }

congru_status congru_set_format(const congru_set* s, char** out) {
  return guard([&] { need_out(out, "out") = dup(congru::format_epset(need(s, "set").value)); });
}

int congru_set_contains(const congru_set* s, int64_t x) {
  return s && s->value.contains(static_cast<std::int64_t>(x)) ? 1 : 0;
}

int congru_set_equal(const congru_set* a, const congru_set* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

int congru_set_is_recognizable(const congru_set* s) {
  return s && s->value.is_recognizable() ? 1 : 0;
}

int congru_set_finitely_many_negatives(const congru_set* s) {
  return s && s->value.has_finitely_many_negatives() ? 1 : 0;
}

congru_status congru_set_union(const congru_set* a, const congru_set* b, congru_set** out) {
  return guard([&] {
    need_out(out, "out") = new congru_set{congru::set_union(need(a, "a").value, need(b, "b").value)};
  });
}

congru_status congru_set_intersection(const congru_set* a, const congru_set* b,
                                      congru_set** out) {
  return guard([&] {
    need_out(out, "out") =
        new congru_set{congru::set_intersection(need(a, "a").value, need(b, "b").value)};
  });
}

congru_status congru_set_complement(const congru_set* a, congru_set** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_set{congru::set_complement(need(a, "a").value)}; });
}

congru_status congru_set_translate(const congru_set* a, int64_t t, congru_set** out) {
  return guard(
      [&] { need_out(out, "out") = new congru_set{congru::translate(need(a, "a").value, t)}; });
}

congru_status congru_poly_new(const congru_seq* newton, congru_poly** out) {
  return guard([&] {
    need_out(out, "out") = new congru_poly{congru::CpPolynomial(need(newton, "newton").values)};
  });
}

congru_status congru_poly_from_power(const congru_seq* power, congru_poly** out) {
  return guard([&] {
    need_out(out, "out") =
        new congru_poly{congru::CpPolynomial::from_power_coeffs(need(power, "power").values)};
  });
}

void congru_poly_free(congru_poly* f) { delete f; }

congru_status congru_poly_eval(const congru_poly* f, const char* x, char** out) {
  return guard(
      [&] { need_out(out, "out") = dup(congru::to_string(need(f, "f").value(parse_dec(x, "x")))); });
}

size_t congru_poly_degree(const congru_poly* f) { return f ? f->value.degree() : 0; }

congru_status congru_preimage(const congru_poly* f, const congru_set* L, congru_set** out) {
  return guard([&] {
    const auto& poly = need(f, "f").value;
    const auto& set = need(L, "L").value;
    if (set.is_recognizable()) {
      need_out(out, "out") = new congru_set{congru::preimage_recognizable(poly, set)};
    } else {
      need_out(out, "out") = new congru_set{congru::preimage_eventual(poly, set)};
    }
  });
}

congru_status congru_union_intersection(const congru_poly* f, const congru_set* L,
                                        int64_t window, congru_set** out, char** expression) {
  return guard([&] {
    std::optional<std::int64_t> w;
    if (window > 0) w = window;
    auto result = congru::union_intersection_preimage(need(f, "f").value, need(L, "L").value, w);
    need_out(out, "out") = new congru_set{result.set};
    if (expression) *expression = dup(result.expression.to_string());
  });
}

congru_status congru_membership(const congru_set* L, const congru_set* X, int* member,
                                char** detail) {
  return guard([&] {
    auto result = congru::lattice_membership(need(L, "L").value, need(X, "X").value);
    need_out(member, "member") = result.member ? 1 : 0;
    if (detail) {
      *detail = dup(result.member ? result.certificate->to_string() : result.reason);
    }
  });
}

congru_status congru_certify_negatives(const congru_set* L, const congru_set* X, int* found,
                                       char** certificate) {
  return guard([&] {
    auto cert = congru::certify_nonmembership_negatives(need(L, "L").value, need(X, "X").value);
    need_out(found, "found") = cert ? 1 : 0;
    if (cert && certificate) *certificate = dup(*cert);
  });
}

}  // extern "C"
