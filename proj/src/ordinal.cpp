#include "coarsedim/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "coarsedim/error.hpp"

namespace coarsedim {

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal result;
  if (n > 0) result.terms_.push_back(CnfTerm{Ordinal{}, n});
  return result;
}

Ordinal Ordinal::omega() { return omegaPow(natural(1)); }

Ordinal Ordinal::omegaPow(const Ordinal& exponent, std::uint64_t coef) {
  Ordinal result;
  if (coef > 0) result.terms_.push_back(CnfTerm{exponent, coef});
  return result;
}

Ordinal Ordinal::fromTerms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coef == 0) throw InvalidArgument("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw InvalidArgument("CNF exponents must be strictly decreasing");
  }
  Ordinal result;
  result.terms_ = std::move(terms);
  return result;
}

bool Ordinal::isFinite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.isZero()); }

bool Ordinal::isLimit() const { return !terms_.empty() && !terms_.back().exponent.isZero(); }

bool Ordinal::isSuccessor() const { return !terms_.empty() && terms_.back().exponent.isZero(); }

std::uint64_t Ordinal::finitePart() const { return isSuccessor() ? terms_.back().coef : 0; }

std::uint64_t Ordinal::toNatural() const {
  if (!isFinite()) throw InvalidArgument("ordinal " + toString() + " is not a natural number");
  return finitePart();
}

std::uint64_t Ordinal::maxCoefficient() const {
  std::uint64_t best = 0;
  for (const auto& t : terms_) best = std::max({best, t.coef, t.exponent.maxCoefficient()});
  return best;
}

std::string Ordinal::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) out += '+';
    if (t.exponent.isZero()) {
      out += std::to_string(t.coef);
      continue;
    }
    out += 'w';
    if (!(t.exponent == natural(1))) {
      const bool simple = t.exponent.isFinite() || t.exponent == omega();
      out += '^';
      out += simple ? t.exponent.toString() : "(" + t.exponent.toString() + ")";
    }
    if (t.coef != 1) out += "*" + std::to_string(t.coef);
  }
  return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (auto c = x.coef <=> y.coef; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.isZero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<CnfTerm> terms;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      terms.push_back(t);
    } else {
      if (t.exponent == lead) terms.push_back(CnfTerm{lead, t.coef});
      break;
    }
  }
  auto rest = b.terms().begin();
  if (!terms.empty() && terms.back().exponent == lead) {
    terms.back().coef += rest->coef;
    ++rest;
  }
  terms.insert(terms.end(), rest, b.terms().end());
  return Ordinal::fromTerms(std::move(terms));
}

Decomposition decompose(const Ordinal& xi) {
  if (!xi.isSuccessor()) return {xi, 0};
  std::vector<CnfTerm> terms(xi.terms().begin(), xi.terms().end() - 1);
  return {Ordinal::fromTerms(std::move(terms)), xi.terms().back().coef};
}

bool isLimit(const Ordinal& xi) { return xi.isLimit(); }

namespace {

// Predecessor of a successor ordinal.
Ordinal predecessor(const Ordinal& e) {
  std::vector<CnfTerm> terms = e.terms();
  if (--terms.back().coef == 0) terms.pop_back();
  return Ordinal::fromTerms(std::move(terms));
}

}  // namespace

Ordinal zeta(const Ordinal& alpha, std::uint64_t i) {
  if (!alpha.isLimit()) throw InvalidArgument("zeta requires a limit ordinal, got " + alpha.toString());
  if (i == 0) throw InvalidArgument("zeta index starts at 1");

  std::vector<CnfTerm> terms = alpha.terms();
  const CnfTerm last = terms.back();
  if (last.coef > 1) {
    terms.back().coef -= 1;
  } else {
    terms.pop_back();
  }
  const Ordinal& e = last.exponent;
  if (e == Ordinal::natural(1)) return Ordinal::fromTerms(std::move(terms));
  if (e.isSuccessor()) {
    terms.push_back(CnfTerm{predecessor(e), i});
  } else {
    terms.push_back(CnfTerm{add(zeta(e, i), Ordinal::natural(i)), 1});
  }
  return Ordinal::fromTerms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Text parser:   sum  := term ('+' term)*
//                term := NUM | 'w' ['^' atom] ['*' NUM]
//                atom := NUM | 'w' | '(' sum ')'

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parseAll() {
    Ordinal result = parseSum();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse ordinal '" + std::string(text_) + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t parseNumber() {
    skipSpace();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  bool atOmega() {
    skipSpace();
    return pos_ < text_.size() && (text_[pos_] == 'w' || text_[pos_] == 'W');
  }

  Ordinal parseAtom() {
    if (accept('(')) {
      Ordinal inner = parseSum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (atOmega()) {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal::natural(parseNumber());
  }

  Ordinal parseTerm() {
    if (!atOmega()) return Ordinal::natural(parseNumber());
    ++pos_;
    Ordinal exponent = Ordinal::natural(1);
    if (accept('^')) exponent = parseAtom();
    std::uint64_t coef = 1;
    if (accept('*')) coef = parseNumber();
    return Ordinal::omegaPow(exponent, coef);
  }

  Ordinal parseSum() {
    Ordinal result = parseTerm();
    while (accept('+')) result = add(result, parseTerm());
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parseAll(); }

}  // namespace coarsedim
