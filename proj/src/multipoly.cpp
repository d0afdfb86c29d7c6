#include <chebwaring/error.hpp>
#include <chebwaring/multipoly.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace chebwaring {

namespace {

class SymbolRegistry {
 public:
  static SymbolRegistry& instance() {
    static SymbolRegistry registry;
    return registry;
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::string name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_.at(id);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return names_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::deque<std::string> names_;
};

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  require(valid_identifier(name), "invalid variable name '" + std::string(name) + "'");
  id_ = SymbolRegistry::instance().intern(name);
}

std::string Symbol::name() const { return SymbolRegistry::instance().name(id_); }

Symbol Symbol::from_id(std::uint32_t id) {
  require(id < SymbolRegistry::instance().size(), "unknown symbol id");
  return Symbol(FromId{}, id);
}

bool operator<(Symbol a, Symbol b) { return a.id_ != b.id_ && a.name() < b.name(); }

// ---------------------------------------------------------------------------

Monomial::Monomial(Symbol s, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(s.id(), exponent);
}

Monomial::Monomial(std::initializer_list<std::pair<Symbol, std::uint32_t>> factors) {
  for (const auto& [s, e] : factors) *this = *this * Monomial(s, e);
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Symbol s) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{s.id(), 0});
  return (it != factors_.end() && it->first == s.id()) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [id, e] : factors_) {
    h ^= (static_cast<std::uint64_t>(id) << 32) | e;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, BigInt(constant));
}

MultiPoly::MultiPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MultiPoly::MultiPoly(const Monomial& m, const BigInt& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

MultiPoly MultiPoly::variable(std::string_view name) { return MultiPoly(Monomial(Symbol(name))); }

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPoly::degree_in(Symbol s) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::vector<Symbol> MultiPoly::variables() const {
  std::vector<std::uint32_t> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) ids.push_back(f.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Symbol> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(Symbol::from_id(id));
  std::sort(out.begin(), out.end());
  return out;
}

void MultiPoly::accumulate(const Monomial& m, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::prune() {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& g) {
  if (this == &g) return *this *= BigInt(2);
  for (const auto& [m, c] : g.terms_) accumulate(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& g) {
  if (this == &g) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : g.terms_) accumulate(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& g) { return *this = *this * g; }

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void MultiPoly::add_scaled(const MultiPoly& g, const BigInt& c, const Monomial& m) {
  if (c == 0) return;
  if (this == &g) {
    MultiPoly copy = g;
    add_scaled(copy, c, m);
    return;
  }
  for (const auto& [gm, gc] : g.terms_) {
    auto [it, inserted] = terms_.try_emplace(m.is_constant() ? gm : gm * m);
    mpz_addmul(it->second.get_mpz_t(), gc.get_mpz_t(), c.get_mpz_t());
  }
  prune();
}

void MultiPoly::divide_exact(const BigInt& d) {
  if (d == 0) fail(ErrorCode::pole, "division of a polynomial by zero");
  for (auto& [m, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      fail(ErrorCode::integrality, "coefficient " + c.get_str() + " is not divisible by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly out;
  if (f.is_zero() || g.is_zero()) return out;
  const auto& small = f.term_count() <= g.term_count() ? f : g;
  const auto& large = &small == &f ? g : f;
  if (small.term_count() == 1) {
    const auto& [m, c] = *small.terms_.begin();
    out.add_scaled(large, c, m);
    return out;
  }
  out.terms_.reserve(std::min<std::size_t>(f.term_count() * g.term_count(), 1u << 20));
  for (const auto& [sm, sc] : small.terms_) {
    for (const auto& [lm, lc] : large.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(sm * lm);
      mpz_addmul(it->second.get_mpz_t(), sc.get_mpz_t(), lc.get_mpz_t());
    }
  }
  out.prune();
  return out;
}

MultiPoly operator-(MultiPoly f) {
  for (auto& [m, c] : f.terms_) c = -c;
  return f;
}

MultiPoly pow(const MultiPoly& f, std::uint32_t e) {
  MultiPoly result(1);
  MultiPoly base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& f, const Bindings& bindings) {
  std::unordered_map<std::uint32_t, const MultiPoly*> bound;
  for (const auto& [s, value] : bindings) bound[s.id()] = &value;

  // powers[id][e] = binding^e, filled on demand
  std::unordered_map<std::uint32_t, std::vector<MultiPoly>> powers;
  auto power_of = [&](std::uint32_t id, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[id];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * *bound.at(id));
    return cache[e];
  };

  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    MultiPoly product(1);
    for (const auto& [id, e] : m.factors()) {
      if (bound.contains(id)) {
        product = product * power_of(id, e);
      } else {
        kept = kept * Monomial(Symbol::from_id(id), e);
      }
    }
    out.add_scaled(product, c, kept);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using NamedFactors = std::vector<std::pair<std::string, std::uint32_t>>;

NamedFactors named(const Monomial& m, const std::unordered_map<std::uint32_t, std::string>& names) {
  NamedFactors out;
  out.reserve(m.factors().size());
  for (const auto& [id, e] : m.factors()) out.emplace_back(names.at(id), e);
  std::sort(out.begin(), out.end());
  return out;
}

// True when a precedes b in descending graded-lex order.
bool graded_lex_before(const NamedFactors& a, std::uint32_t deg_a, const NamedFactors& b,
                       std::uint32_t deg_b) {
  if (deg_a != deg_b) return deg_a > deg_b;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first != j->first) return i->first < j->first;  // a has the earlier variable
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return i != a.end() && j == b.end();
}

}  // namespace

std::string serialize(const MultiPoly& f) {
  if (f.is_zero()) return "0";

  std::unordered_map<std::uint32_t, std::string> names;
  for (const auto& [m, c] : f.terms())
    for (const auto& fac : m.factors())
      if (!names.contains(fac.first)) names.emplace(fac.first, Symbol::from_id(fac.first).name());

  struct Row {
    NamedFactors factors;
    std::uint32_t degree;
    const BigInt* coefficient;
  };
  std::vector<Row> rows;
  rows.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) rows.push_back({named(m, names), m.total_degree(), &c});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return graded_lex_before(a.factors, a.degree, b.factors, b.degree);
  });

  std::string out;
  for (const auto& row : rows) {
    if (!out.empty()) out += ' ';
    if (sgn(*row.coefficient) > 0) out += '+';
    out += row.coefficient->get_str();
    for (const auto& [name, e] : row.factors) {
      out += '*';
      out += name;
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) error("empty polynomial");
    MultiPoly out;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        error("expected '+' or '-' between terms");
      }
      out += term(sign);
      first = false;
      skip_space();
    }
    return out;
  }

 private:
  MultiPoly term(int sign) {
    BigInt coefficient = sign;
    Monomial m;
    bool expect_factor = true;
    while (expect_factor) {
      skip_space();
      if (at_end()) error("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= BigInt(digits());
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::uint32_t e = 1;
        std::string name(text_.substr(start, pos_ - start));
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          auto ds = digits();
          auto [ptr, ec] = std::from_chars(ds.data(), ds.data() + ds.size(), e);
          if (ec != std::errc{}) error("exponent out of range");
        }
        m = m * Monomial(Symbol(name), e);
      } else {
        error("unexpected character");
      }
      skip_space();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    return MultiPoly(m, coefficient);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace chebwaring
