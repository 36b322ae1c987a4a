#include "congru/text_io.hpp"

#include <sstream>

#include "congru/error.hpp"

namespace congru {

namespace {

// Tokens of `text` with '#' comments removed.
std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

Int parse_int(const std::string& s) {
  Int v;
  const char* digits = s.c_str();
  if (*digits == '+') ++digits;
  if (*digits == '\0' || v.set_str(digits, 10) != 0) throw ParseError("not an integer: '" + s + "'");
  return v;
}

std::int64_t parse_i64(const std::string& s) {
  Int v = parse_int(s);
  if (!v.fits_slong_p()) throw ParseError("integer out of range: '" + s + "'");
  return v.get_si();
}

std::uint64_t parse_u64(const std::string& s) {
  Int v = parse_int(s);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError("expected a natural number: '" + s + "'");
  return v.get_ui();
}

std::vector<std::int64_t> parse_i64_csv(std::string_view s) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ParseError("empty list item in '" + std::string(s) + "'");
    out.push_back(parse_i64(item));
  }
  return out;
}

std::vector<std::string> split_colon(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = s.find(':', start);
    parts.emplace_back(s.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return parts;
}

template <class F>
auto rethrow_as_parse(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

FiniteFn parse_finite_fn(std::string_view text) {
  auto t = tokens(text);
  if (t.size() < 2) throw ParseError("function table needs a 'n m' header");
  const auto n = parse_u64(t[0]);
  const auto m = parse_u64(t[1]);
  if (t.size() - 2 != n) {
    throw ParseError("function table header says n=" + std::to_string(n) + " but " +
                     std::to_string(t.size() - 2) + " values follow");
  }
  std::vector<std::uint64_t> table;
  for (std::size_t i = 2; i < t.size(); ++i) table.push_back(parse_u64(t[i]));
  return rethrow_as_parse([&] { return FiniteFn(n, m, std::move(table)); });
}

std::string format_finite_fn(const FiniteFn& f) {
  std::ostringstream out;
  out << f.n() << ' ' << f.m() << '\n';
  for (std::size_t i = 0; i < f.table().size(); ++i) out << (i ? " " : "") << f.table()[i];
  out << '\n';
  return out.str();
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  for (const auto& w : tokens(text)) out.push_back(parse_int(w));
  return out;
}

std::string format_int_list(const std::vector<Int>& values) {
  std::string out;
  for (const auto& v : values) out += to_string(v) + '\n';
  return out;
}

LimitApprox parse_limit(std::string_view text) {
  auto t = tokens(text);
  if (t.size() < 2) throw ParseError("approximation needs a 'p N' or '! N' header");
  const auto N = parse_u64(t[1]);
  if (t.size() - 2 != N) throw ParseError("digit count does not match the precision");
  std::vector<std::uint64_t> digits;
  for (std::size_t i = 2; i < t.size(); ++i) digits.push_back(parse_u64(t[i]));
  return rethrow_as_parse([&] {
    auto shape = t[0] == "!" ? LimitShape::factorial(static_cast<unsigned>(N))
                             : LimitShape::base_p(parse_u64(t[0]), static_cast<unsigned>(N));
    return LimitApprox(shape, std::move(digits));
  });
}

std::string format_limit(const LimitApprox& x) {
  std::ostringstream out;
  if (x.shape().kind() == LimitKind::factorial) {
    out << "! ";
  } else {
    out << x.shape().prime() << ' ';
  }
  out << x.shape().precision() << '\n';
  for (std::size_t i = 0; i < x.digits().size(); ++i) out << (i ? " " : "") << x.digit(i);
  out << '\n';
  return out.str();
}

EPSet parse_epset(std::string_view text) {
  auto t = tokens(text);
  if (t.size() < 2) throw ParseError("set needs a 'd B' header");
  const auto d = parse_i64(t[0]);
  const auto B = parse_i64(t[1]);
  if (d < 1 || B < 0) throw ParseError("set header needs d >= 1 and B >= 0");
  std::vector<bool> pos(d, false), neg(d, false), window;
  bool saw_window = false;
  std::vector<bool>* target = nullptr;
  for (std::size_t i = 2; i < t.size(); ++i) {
    const auto& w = t[i];
    if (w == "pos") {
      target = &pos;
    } else if (w == "neg") {
      target = &neg;
    } else if (w == "window") {
      if (++i >= t.size()) {
        throw ParseError("window bits missing");
      }
      for (char c : t[i]) {
        if (c != '0' && c != '1') throw ParseError("window bits must be 0 or 1");
        window.push_back(c == '1');
      }
      saw_window = true;
      target = nullptr;
    } else {
      if (target == nullptr) throw ParseError("unexpected token '" + w + "' in set");
      auto r = parse_i64(w);
      if (r < 0 || r >= d) throw ParseError("residue " + w + " out of [0, d)");
      (*target)[r] = true;
    }
  }
  if (!saw_window) throw ParseError("set needs a window line");
  return rethrow_as_parse(
      [&] { return EPSet(d, B, std::move(pos), std::move(neg), std::move(window)); });
}

std::string format_epset(const EPSet& s) {
  std::ostringstream out;
  out << s.period() << ' ' << s.bound() << "\npos";
  for (auto r : s.pos_residues()) out << ' ' << r;
  out << "\nneg";
  for (auto r : s.neg_residues()) out << ' ' << r;
  out << "\nwindow ";
  for (bool b : s.window()) out << (b ? '1' : '0');
  out << '\n';
  return out.str();
}

EPSet parse_set_spec(std::string_view spec) {
  auto parts = split_colon(spec);
  const auto& kind = parts[0];
  return rethrow_as_parse([&] {
    if (kind == "rec" && parts.size() == 3) {
      return recognizable(parse_i64(parts[1]), parse_i64_csv(parts[2]));
    }
    if (kind == "ray" && parts.size() == 3) {
      return arithmetic_ray(parse_i64(parts[1]), parse_i64(parts[2]));
    }
    if (kind == "rat" && parts.size() == 5) {
      return rational_from_parts(parse_i64(parts[1]), parse_i64_csv(parts[2]),
                                 parse_i64_csv(parts[3]), parse_i64_csv(parts[4]));
    }
    if (kind == "fin" && parts.size() == 2) return finite_set(parse_i64_csv(parts[1]));
    throw ParseError("unrecognized set spec '" + std::string(spec) + "'");
  });
}

}  // namespace congru
