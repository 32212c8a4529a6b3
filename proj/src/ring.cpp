#include "bpol/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bpol {

RingSpec RingSpec::single(int n) {
  if (n <= 0) throw std::invalid_argument("ring needs a positive variable count");
  return RingSpec{Kind::single, n, 0};
}

RingSpec RingSpec::grid(int n, int d) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("grid ring needs positive n and d");
  return RingSpec{Kind::grid, n, d};
}

Var single_var(int i) {
  if (i <= 0) throw std::invalid_argument("variable index must be positive");
  return Var{i, 0};
}

Var grid_var(int i, int j) {
  if (i <= 0 || j <= 0) throw std::invalid_argument("grid variable indices must be positive");
  return Var{i, j};
}

Monomial Monomial::variable(Var v, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp > 0) m.terms_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Monomial m;
  for (const Term& t : terms) {
    if (t.second < 0) throw std::invalid_argument("negative exponent");
    if (t.second == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().first == t.first)
      m.terms_.back().second += t.second;
    else
      m.terms_.push_back(t);
  }
  return m;
}

int Monomial::exponent(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, const Var& w) { return t.first < w; });
  return (it != terms_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const Term& t : terms_) d += t.second;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second == 1; });
}

bool Monomial::single_indexed() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.j == 0; });
}

bool Monomial::grid_indexed() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.j >= 1; });
}

Monomial mul(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Monomial::from_terms(std::move(terms));
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [v, e] : a.terms())
    if (b.exponent(v) < e) return false;
  return true;
}

Monomial div_exact(const Monomial& a, const Monomial& b) {
  if (!divides(b, a))
    throw std::invalid_argument(to_string(b) + " does not divide " + to_string(a));
  std::vector<Monomial::Term> terms;
  for (const auto& [v, e] : a.terms()) {
    int r = e - b.exponent(v);
    if (r > 0) terms.push_back({v, r});
  }
  return Monomial::from_terms(std::move(terms));
}

Monomial lcm_of(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms;
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      terms.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      terms.push_back(*ib++);
    } else {
      terms.push_back({ia->first, std::max(ia->second, ib->second)});
      ++ia, ++ib;
    }
  }
  return Monomial::from_terms(std::move(terms));
}

Monomial lcm_of(std::span<const Monomial> ms) {
  Monomial out;
  for (const Monomial& m : ms) out = lcm_of(out, m);
  return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) return std::strong_ordering::greater;
    if (ib->first < ia->first) return std::strong_ordering::less;
    if (ia->second != ib->second)
      return ia->second > ib->second ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    ++ia, ++ib;
  }
  if (ia != ea) return std::strong_ordering::greater;
  if (ib != eb) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::vector<int> alpha_expression(const Monomial& m) {
  if (!m.single_indexed())
    throw std::invalid_argument("alpha expression needs a singly indexed monomial");
  std::vector<int> alpha;
  alpha.reserve(m.degree());
  for (const auto& [v, e] : m.terms())
    for (int k = 0; k < e; ++k) alpha.push_back(v.i);
  return alpha;
}

int nu(const Monomial& m) {
  if (m.is_unit()) throw std::invalid_argument("nu of the unit monomial");
  if (!m.single_indexed())
    throw std::invalid_argument("nu needs a singly indexed monomial");
  return m.terms().back().first.i;
}

int mu(const Monomial& m) {
  if (m.is_unit()) throw std::invalid_argument("mu of the unit monomial");
  if (!m.single_indexed())
    throw std::invalid_argument("mu needs a singly indexed monomial");
  return m.terms().front().first.i;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "monomial parse error at column " << pos + 1 << ": " << what << " in '" << text << "'";
  throw std::invalid_argument(os.str());
}

std::size_t skip_ws(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

long parse_int(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  long value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > 1'000'000) parse_fail(s, start, "index out of range");
    ++pos;
  }
  if (pos == start) parse_fail(s, pos, "expected a number");
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  std::size_t pos = skip_ws(text, 0);
  if (pos >= text.size()) parse_fail(text, pos, "empty input");
  if (text[pos] == '1') {
    pos = skip_ws(text, pos + 1);
    if (pos != text.size()) parse_fail(text, pos, "trailing input after '1'");
    return Monomial::unit();
  }
  std::vector<Monomial::Term> terms;
  while (true) {
    pos = skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != 'x') parse_fail(text, pos, "expected 'x'");
    ++pos;
    Var v;
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      pos = skip_ws(text, pos);
      int i = static_cast<int>(parse_int(text, pos));
      pos = skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != ',') parse_fail(text, pos, "expected ','");
      pos = skip_ws(text, pos + 1);
      int j = static_cast<int>(parse_int(text, pos));
      pos = skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != ']') parse_fail(text, pos, "expected ']'");
      ++pos;
      v = grid_var(i, j);
    } else {
      v = single_var(static_cast<int>(parse_int(text, pos)));
    }
    int exp = 1;
    pos = skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      pos = skip_ws(text, pos + 1);
      exp = static_cast<int>(parse_int(text, pos));
      if (exp <= 0) parse_fail(text, pos, "exponent must be positive");
    }
    terms.push_back({v, exp});
    pos = skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '*') parse_fail(text, pos, "expected '*'");
    ++pos;
  }
  return Monomial::from_terms(std::move(terms));
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.terms()) {
    if (!first) os << '*';
    first = false;
    if (v.j == 0)
      os << 'x' << v.i;
    else
      os << "x[" << v.i << ',' << v.j << ']';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

void require_in_ring(const Monomial& m, const RingSpec& ring) {
  for (const auto& [v, e] : m.terms()) {
    (void)e;
    if (ring.kind == RingSpec::Kind::single) {
      if (v.j != 0 || v.i < 1 || v.i > ring.n)
        throw std::invalid_argument(to_string(m) + " is not a monomial of k[x_1..x_" +
                                    std::to_string(ring.n) + "]");
    } else {
      if (v.j < 1 || v.i < 1 || v.i > ring.n || v.j > ring.d)
        throw std::invalid_argument(to_string(m) + " does not fit the " +
                                    std::to_string(ring.n) + "x" + std::to_string(ring.d) +
                                    " grid ring");
    }
  }
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& [v, e] : m.terms()) {
    mix(static_cast<std::size_t>(v.i));
    mix(static_cast<std::size_t>(v.j));
    mix(static_cast<std::size_t>(e));
  }
  return h;
}

}  // namespace bpol
