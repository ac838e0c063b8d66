#include "heisenweyl/freealg.hpp"

#include <stdexcept>

#include "heisenweyl/expression_grammar.hpp"
#include "heisenweyl/format.hpp"
#include "heisenweyl/scalar_parser.hpp"

namespace heisenweyl {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name) throw std::invalid_argument("duplicate generator '" + gens_[i].name + "'");
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

Alphabet hpq_alphabet() { return Alphabet({{"x"}, {"y"}, {"z"}}); }
Alphabet local_alphabet() { return Alphabet({{"x", true}, {"y"}, {"z", true}}); }

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int run = static_cast<int>(j - i);
    if (!out.empty()) out += "*";
    out += format_power(alphabet.name(w[i].index), w[i].inverse ? -run : run);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------

FreeElement::FreeElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

FreeElement FreeElement::word(Word w, const Scalar& c) {
  FreeElement e;
  if (!c.is_zero()) e.terms_.emplace(std::move(w), c);
  return e;
}

std::optional<Scalar> FreeElement::as_scalar() const {
  if (terms_.empty()) return Scalar{};
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreeElement FreeElement::operator-() const {
  FreeElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  FreeElement out = *this;
  for (auto& [w, x] : out.terms_) x *= c;
  return out;
}

FreeElement FreeElement::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a free-algebra element");
  FreeElement acc(Scalar(1));
  for (int k = 0; k < n; ++k) acc = acc * *this;
  return acc;
}

std::string FreeElement::to_string(const Alphabet& alphabet, const VariableNames& names) const {
  std::vector<std::pair<std::string, Scalar>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    parts.emplace_back(word_to_string(it->first, alphabet), it->second);
  return format_sum(parts, names);
}

// ---------------------------------------------------------------------------

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto& r = rules_[k];
    if (r.lhs.size() != 2) throw std::invalid_argument("rewrite rules need a left-hand side of length 2");
    for (const auto& l : r.lhs)
      if (l.index < 0 || static_cast<std::size_t>(l.index) >= alphabet_.size())
        throw std::invalid_argument("rule letter outside the alphabet");
    for (const auto& [w, c] : r.rhs.terms())
      if (!WordOrder{}(w, r.lhs))
        throw std::invalid_argument("rule " + word_to_string(r.lhs, alphabet_) + " does not decrease in degree-lex order");
    if (!index_.emplace(std::make_pair(r.lhs[0], r.lhs[1]), k).second)
      throw std::invalid_argument("duplicate left-hand side " + word_to_string(r.lhs, alphabet_));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto it = index_.find({w[i], w[i + 1]});
    if (it != index_.end()) return std::make_pair(i, it->second);
  }
  return std::nullopt;
}

FreeElement RewriteSystem::normalize(const FreeElement& e) const {
  // Every rewrite produces strictly smaller words, so processing the largest
  // pending word first sees each word once with its final coefficient.
  FreeElement pending = e, result;
  while (!pending.is_zero()) {
    auto top = std::prev(pending.terms().end());
    Word w = top->first;
    Scalar c = top->second;
    pending.add_term(w, -c);
    auto redex = find_redex(w);
    if (!redex) {
      result.add_term(w, c);
      continue;
    }
    auto [pos, rule] = *redex;
    for (const auto& [rw, rc] : rules_[rule].rhs.terms()) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), rw.begin(), rw.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      pending.add_term(next, c * rc);
    }
  }
  return result;
}

RewriteSystem hpq_rules(const Scalar& p_prime, const Parameters& params) {
  if (p_prime.is_zero()) throw std::invalid_argument("p' must be nonzero");
  const Letter x{0}, y{1}, z{2};
  std::vector<RewriteRule> rules;
  rules.push_back({{y, x}, FreeElement::word({x, y}, params.q) + FreeElement::word({z})});
  rules.push_back({{z, x}, FreeElement::word({x, z}, p_prime)});
  rules.push_back({{z, y}, FreeElement::word({y, z}, params.p)});
  return RewriteSystem(hpq_alphabet(), std::move(rules));
}

std::vector<Overlap> check_overlaps(const RewriteSystem& sys) {
  std::vector<Overlap> out;
  for (const auto& r1 : sys.rules())
    for (const auto& r2 : sys.rules()) {
      if (r1.lhs[1] != r2.lhs[0]) continue;
      const Letter a = r1.lhs[0], c = r2.lhs[1];
      Overlap o;
      o.word = {a, r1.lhs[1], c};
      o.left = sys.normalize(r1.rhs * FreeElement::word({c}));
      o.right = sys.normalize(FreeElement::word({a}) * r2.rhs);
      o.difference = o.left - o.right;
      if (!o.difference.is_zero()) out.push_back(std::move(o));
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct FreeHooks {
  const Alphabet& alphabet;
  ScalarHooks scalars;

  // Splits a run of juxtaposed single tokens such as "yx" or "qxy".
  std::optional<std::vector<std::string>> split(const std::string& name) const {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < name.size()) {
      std::size_t best = 0;
      for (std::size_t len = name.size() - pos; len >= 1; --len) {
        std::string piece = name.substr(pos, len);
        if (alphabet.index_of(piece) || scalars.is_symbol(piece)) {
          best = len;
          break;
        }
      }
      if (best == 0) return std::nullopt;
      tokens.push_back(name.substr(pos, best));
      pos += best;
    }
    return tokens;
  }

  FreeElement token(const std::string& name, std::size_t at) const {
    if (auto g = alphabet.index_of(name)) return FreeElement::letter(*g);
    return FreeElement(scalars.identifier(name, at));
  }

  FreeElement identifier(const std::string& name, std::size_t at) const {
    if (alphabet.index_of(name) || scalars.is_symbol(name)) return token(name, at);
    auto tokens = split(name);
    if (!tokens) throw ParseError("unknown generator '" + name + "'", at);
    FreeElement acc(Scalar(1));
    for (const auto& t : *tokens) acc = acc * token(t, at);
    return acc;
  }
  FreeElement integer(long v) const { return FreeElement(Scalar(v)); }
  FreeElement bracket(int n, std::size_t at) const { return FreeElement(scalars.bracket(n, at)); }
  FreeElement bracket_factorial(int n, std::size_t at) const { return FreeElement(scalars.bracket_factorial(n, at)); }

  FreeElement power_of_token(const std::string& name, WrittenExponent e, std::size_t at) const {
    if (auto g = alphabet.index_of(name)) {
      if (e.den != 1) throw ParseError("generator exponents must be integers", at);
      bool inverse = e.num < 0;
      if (inverse && !alphabet.generators()[static_cast<std::size_t>(*g)].invertible)
        throw ParseError("generator '" + name + "' is not invertible here", at);
      Word w(static_cast<std::size_t>(inverse ? -e.num : e.num), Letter{*g, inverse});
      return FreeElement::word(std::move(w));
    }
    return FreeElement(scalars.power(scalars.identifier(name, at), e, name, at));
  }

  FreeElement power(const FreeElement& base, WrittenExponent e, const std::optional<std::string>& atom,
                    std::size_t at) const {
    if (atom) {
      if (alphabet.index_of(*atom) || scalars.is_symbol(*atom)) return power_of_token(*atom, e, at);
      // In "yx^2" the exponent binds to the last letter only.
      auto tokens = *split(*atom);
      FreeElement acc(Scalar(1));
      for (std::size_t k = 0; k + 1 < tokens.size(); ++k) acc = acc * token(tokens[k], at);
      return acc * power_of_token(tokens.back(), e, at);
    }
    if (auto s = base.as_scalar()) return FreeElement(scalars.power(*s, e, std::nullopt, at));
    if (e.den != 1 || e.num < 0) throw ParseError("only nonnegative integer powers of algebra elements", at);
    return base.pow(e.num);
  }

  FreeElement divide(const FreeElement& a, const FreeElement& b, std::size_t at) const {
    auto s = b.as_scalar();
    if (!s) throw ParseError("division is only by coefficients", at);
    return a.scaled(scalars.divide(Scalar(1), *s, at));
  }
};

}  // namespace

FreeElement parse_expression(std::string_view text, const Alphabet& alphabet, const Parameters& params) {
  FreeHooks hooks{alphabet, ScalarHooks{params}};
  return ExpressionParser<FreeElement, FreeHooks>(text, hooks).parse();
}

}  // namespace heisenweyl
