#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schmidt::qseries {

struct Variable {
  std::string name;
  int max_exponent = 0;  // inclusive

  friend bool operator==(const Variable&, const Variable&) = default;
};

// An ordered set of variables with an inclusive per-variable exponent bound.
// The order fixes the term order used for printing and mismatch reports.
class Box {
 public:
  Box() = default;
  Box(std::initializer_list<std::pair<std::string, int>> bounds);
  explicit Box(std::vector<Variable> variables);

  std::span<const Variable> variables() const noexcept { return vars_; }
  std::size_t dimension() const noexcept { return vars_.size(); }
  long long volume() const noexcept;

  std::optional<std::size_t> index_of(std::string_view name) const noexcept;
  int bound(std::string_view name) const;  // throws kBoxMismatch if absent

  bool contains(std::span<const int> exponents) const noexcept;
  bool same_variables(const Box& other) const noexcept;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Variable> vars_;
};

using Exponents = std::vector<int>;

// A power product of named variables with nonnegative exponents. Variables
// that are not mentioned have exponent 0; the empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<std::string, int>> powers);

  static Monomial variable(std::string name, int exponent = 1);

  int exponent(std::string_view name) const noexcept;
  bool is_constant() const noexcept { return powers_.empty(); }
  const std::map<std::string, int, std::less<>>& powers() const noexcept {
    return powers_;
  }

  Monomial pow(int k) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Exponent vector in `box` order; nullopt if any exponent exceeds its
  // bound. Throws kBoxMismatch for a variable the box does not declare.
  std::optional<Exponents> in_box(const Box& box) const;

 private:
  void set(std::string name, int exponent);
  std::map<std::string, int, std::less<>> powers_;
};

Monomial monomial_at(const Box& box, std::span<const int> exponents);
std::string to_string(const Monomial& m);

struct Term {
  Exponents exponents;
  long long coefficient = 0;
};

// Exact integer power series truncated to a box. Every coefficient inside
// the box is stored exactly; anything outside is discarded. `box_exact()`
// records whether every in-box coefficient equals the coefficient of the
// untruncated series (sums and products of box-exact series stay exact;
// substitute() may lose exactness).
//
// Storage is a dense array over the box. Coefficient arithmetic is checked
// and throws kOverflow instead of wrapping.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Box box);

  static TruncatedSeries one(const Box& box);
  static TruncatedSeries from_monomial(const Box& box, const Monomial& m,
                                       long long coefficient = 1);

  const Box& box() const noexcept { return box_; }
  bool box_exact() const noexcept { return exact_; }
  void set_box_exact(bool exact) noexcept { exact_ = exact; }

  // Throws kOutOfBox for exponents outside the box.
  long long coefficient(std::span<const int> exponents) const;
  long long coefficient(const Monomial& m) const;

  // Adds to the coefficient at `exponents`; silently ignores out-of-box
  // positions so truncation stays implicit for callers building sums.
  void add_term(std::span<const int> exponents, long long coefficient);
  void add_term(const Monomial& m, long long coefficient);

  // Nonzero terms in graded-lexicographic order.
  std::vector<Term> terms() const;
  std::size_t term_count() const noexcept;

  friend TruncatedSeries operator+(const TruncatedSeries& f,
                                   const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f,
                                   const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f);
  friend TruncatedSeries operator*(const TruncatedSeries& f,
                                   const TruncatedSeries& g);
  friend TruncatedSeries operator*(long long c, const TruncatedSeries& f);
  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

  // Dense view for the arithmetic kernels.
  std::span<const long long> raw() const noexcept { return coeffs_; }
  std::span<const long long> strides() const noexcept { return strides_; }
  std::size_t linear_index(std::span<const int> exponents) const noexcept;
  Exponents exponents_at(std::size_t index) const;

 private:
  Box box_;
  std::vector<long long> strides_;
  std::vector<long long> coeffs_;
  bool exact_ = true;
};

// Throw kBoxMismatch unless both operands share the same box.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

// Multiplicative inverse within the box. The constant term must be +1 or -1
// (kNonUnitConstantTerm otherwise).
TruncatedSeries invert(const TruncatedSeries& f);

TruncatedSeries power(const TruncatedSeries& f, int k);

// prod_{k=0}^{n-1} (1 - base * ratio^k), stopping early once a factor has no
// in-box contribution.
TruncatedSeries pochhammer(const Monomial& base, const Monomial& ratio, int n,
                           const Box& box);
// Infinite product; kDivergentInfiniteProduct if ratio is constant.
TruncatedSeries pochhammer_infinite(const Monomial& base, const Monomial& ratio,
                                    const Box& box);

// Gaussian binomial [n choose k] in `variable`, embedded in `box`. The box
// must allow degree k(n-k) in that variable (kBoxTooSmall otherwise).
TruncatedSeries q_binomial(int n, int k, const std::string& variable,
                           const Box& box);

// Replaces `variable` by the monomial m and truncates to `out_box`, which
// must declare the same variables as f's box. The result is box-exact only
// when f's box covers every preimage of an out_box exponent.
TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::string& variable, const Monomial& m,
                           const Box& out_box);

struct SeriesMismatch {
  Exponents exponents;
  long long lhs = 0;
  long long rhs = 0;
};

// First differing coefficient in graded-lexicographic order; nullopt when
// the series agree on the whole box. Throws kBoxMismatch on differing boxes.
std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& f,
                                             const TruncatedSeries& g);
inline bool equal_in_box(const TruncatedSeries& f, const TruncatedSeries& g) {
  return !first_mismatch(f, g).has_value();
}

// Every exponent vector in the box, graded-lexicographic: ascending total
// degree, ties broken by the larger exponent of the earlier variable.
std::vector<Exponents> graded_lex_order(const Box& box);

// `1 + q*z + 2*q^2*z^2`
std::string to_string(const TruncatedSeries& f);

}  // namespace schmidt::qseries
