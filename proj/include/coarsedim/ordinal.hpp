#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coarsedim {

struct CnfTerm;

// Ordinals below epsilon_0 in Cantor normal form:
//   omega^e_1 * c_1 + ... + omega^e_k * c_k,   e_1 > ... > e_k,  c_i >= 1.
// The empty term list is 0; naturals are a single exponent-0 term.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  /// omega^exponent * coef; coef == 0 yields zero.
  static Ordinal omegaPow(const Ordinal& exponent, std::uint64_t coef = 1);
  /// Builds from explicit terms, rejecting non-canonical input.
  static Ordinal fromTerms(std::vector<CnfTerm> terms);
  /// Parses the textual form, e.g. "w^2*3+w+1", "w^(w+1)", "7".
  static Ordinal parse(std::string_view text);

  const std::vector<CnfTerm>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isFinite() const;
  bool isLimit() const;
  bool isSuccessor() const;
  /// Coefficient of the exponent-0 term (n(xi) in xi = gamma(xi) + n(xi)).
  std::uint64_t finitePart() const;
  /// Value as a natural number; throws InvalidArgument for infinite ordinals.
  std::uint64_t toNatural() const;
  /// Number of CNF terms.
  std::size_t size() const { return terms_.size(); }
  /// Largest coefficient appearing anywhere in the normal form (nested exponents included).
  std::uint64_t maxCoefficient() const;

  std::string toString() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coef = 1;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum a + b; terms of a below the leading exponent of b are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

struct Decomposition {
  Ordinal limitPart;       // a limit ordinal or 0
  std::uint64_t finite = 0;
};

/// xi = limitPart + finite.
Decomposition decompose(const Ordinal& xi);

bool isLimit(const Ordinal& xi);

/// Fundamental sequence used by the S_xi families.
///
/// Write alpha = delta + omega^e * c with omega^e its least term. Then
///   e == 1          : zeta_i = delta + omega * (c-1)
///   e == e' + 1     : zeta_i = delta + omega^e * (c-1) + omega^e' * i
///   e limit         : zeta_i = delta + omega^e * (c-1) + omega^(zeta(e,i) + i)
/// Each zeta_i is a limit or 0, zeta_i + i is strictly increasing in i and
/// its supremum is alpha. For alpha = beta + omega the value is beta for all i.
/// Requires alpha to be a limit and i >= 1.
Ordinal zeta(const Ordinal& alpha, std::uint64_t i);

}  // namespace coarsedim
