#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heisenweyl/expression_grammar.hpp"
#include "heisenweyl/parameters.hpp"

namespace heisenweyl {

struct Generator {
  std::string name;
  /// Whether the inverse letter name^-1 may appear in words.
  bool invertible = false;
};

/// Ordered generator list. Position in the list is the letter rank, so
/// {x, y, z} gives x < y < z.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<int> index_of(std::string_view name) const;
  const std::string& name(int index) const { return gens_.at(static_cast<std::size_t>(index)).name; }

 private:
  std::vector<Generator> gens_;
};

/// {x, y, z}, none invertible.
Alphabet hpq_alphabet();
/// {x, y, z} with x and z invertible.
Alphabet local_alphabet();

struct Letter {
  int index = 0;
  bool inverse = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Degree-lex: shorter words first, equal lengths compared letter by letter.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// "x^2*y*z^-1"; consecutive equal letters are grouped. Empty word gives "".
std::string word_to_string(const Word& w, const Alphabet& alphabet);

/// Element of the free algebra over the coefficient field.
class FreeElement {
 public:
  using TermMap = std::map<Word, Scalar, WordOrder>;

  FreeElement() = default;
  FreeElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static FreeElement word(Word w, const Scalar& c = 1);
  static FreeElement letter(int index, bool inverse = false) { return word({{index, inverse}}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Scalar value if the element has no words of positive length.
  std::optional<Scalar> as_scalar() const;

  void add_term(const Word& w, const Scalar& c);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  FreeElement scaled(const Scalar& c) const;
  FreeElement pow(int n) const;

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  /// Terms from the largest word to the smallest.
  std::string to_string(const Alphabet& alphabet, const VariableNames& names = {}) const;

 private:
  TermMap terms_;
};

/// lhs -> rhs with lhs of length two.
struct RewriteRule {
  Word lhs;
  FreeElement rhs;
};

/// Quadratic rewriting system. Construction checks that left-hand sides
/// are distinct, of length two, and strictly larger than every word of
/// their right-hand sides, which guarantees termination.
class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Rewrites the leftmost reducible pair until no rule applies.
  FreeElement normalize(const FreeElement& e) const;
  /// Position of the leftmost rule occurrence and the rule index.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  std::map<std::pair<Letter, Letter>, std::size_t> index_;
};

/// yx -> qxy + z, zx -> p' xz, zy -> p yz over the given parameter values.
RewriteSystem hpq_rules(const Scalar& p_prime, const Parameters& params = Parameters::generic());

struct Overlap {
  Word word;
  FreeElement left;
  FreeElement right;
  /// left - right
  FreeElement difference;
};

/// Reduces every overlap word abc (ab and bc both left-hand sides) by the
/// two possible first steps and returns the ones that do not resolve.
std::vector<Overlap> check_overlaps(const RewriteSystem& sys);

/// Parses a free-algebra expression. Generators come from the alphabet;
/// p, q, i (and t for one-parameter instances) are coefficients. Adjacent
/// single-letter generators may be juxtaposed ("yx"). Negative powers are
/// allowed on invertible generators. Throws ParseError.
FreeElement parse_expression(std::string_view text, const Alphabet& alphabet,
                             const Parameters& params = Parameters::generic());

}  // namespace heisenweyl
