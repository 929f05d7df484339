#include "schmidt/qseries.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "schmidt/error.hpp"

namespace schmidt::qseries {

namespace {

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "coefficient addition overflows");
  }
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "coefficient product overflows");
  }
  return out;
}

void require_same_box(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!(f.box() == g.box())) {
    throw Error(ErrorCode::kBoxMismatch, "operands live in different boxes");
  }
}

// Advances `e` to the next exponent vector in linear-index order.
bool increment(Exponents& e, const Box& box) {
  const auto vars = box.variables();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < vars[i].max_exponent) {
      ++e[i];
      return true;
    }
    e[i] = 0;
  }
  return false;
}

struct SparseEntry {
  std::size_t index;
  Exponents exponents;
  long long coefficient;
};

std::vector<SparseEntry> nonzero_entries(const TruncatedSeries& f) {
  std::vector<SparseEntry> out;
  Exponents e(f.box().dimension(), 0);
  const auto raw = f.raw();
  std::size_t index = 0;
  do {
    if (raw[index] != 0) out.push_back({index, e, raw[index]});
    ++index;
  } while (increment(e, f.box()));
  return out;
}

// f * (1 - x^shift), where shift is an in-box exponent vector.
TruncatedSeries times_one_minus(const TruncatedSeries& f,
                                std::span<const int> shift) {
  TruncatedSeries out = f;
  for (const SparseEntry& entry : nonzero_entries(f)) {
    Exponents target = entry.exponents;
    bool inside = true;
    for (std::size_t i = 0; i < target.size(); ++i) {
      target[i] += shift[i];
      if (target[i] > f.box().variables()[i].max_exponent) {
        inside = false;
        break;
      }
    }
    if (inside) out.add_term(target, checked_mul(-1, entry.coefficient));
  }
  return out;
}

}  // namespace

// --- Box -------------------------------------------------------------------

Box::Box(std::initializer_list<std::pair<std::string, int>> bounds) {
  for (const auto& [name, bound] : bounds) vars_.push_back({name, bound});
}

Box::Box(std::vector<Variable> variables) : vars_(std::move(variables)) {
  for (const Variable& v : vars_) {
    if (v.max_exponent < 0) {
      throw Error(ErrorCode::kOutOfBox, "negative bound for " + v.name);
    }
  }
}

long long Box::volume() const noexcept {
  long long v = 1;
  for (const Variable& var : vars_) v *= var.max_exponent + 1;
  return v;
}

std::optional<std::size_t> Box::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

int Box::bound(std::string_view name) const {
  const auto i = index_of(name);
  if (!i) {
    throw Error(ErrorCode::kBoxMismatch,
                "box has no variable " + std::string(name));
  }
  return vars_[*i].max_exponent;
}

bool Box::contains(std::span<const int> exponents) const noexcept {
  if (exponents.size() != vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > vars_[i].max_exponent) return false;
  }
  return true;
}

bool Box::same_variables(const Box& other) const noexcept {
  return std::equal(vars_.begin(), vars_.end(), other.vars_.begin(),
                    other.vars_.end(),
                    [](const Variable& a, const Variable& b) {
                      return a.name == b.name;
                    });
}

// --- Monomial --------------------------------------------------------------

Monomial::Monomial(std::initializer_list<std::pair<std::string, int>> powers) {
  for (const auto& [name, e] : powers) set(name, exponent(name) + e);
}

Monomial Monomial::variable(std::string name, int exponent) {
  Monomial m;
  m.set(std::move(name), exponent);
  return m;
}

void Monomial::set(std::string name, int exponent) {
  if (exponent < 0) {
    throw Error(ErrorCode::kOutOfBox, "negative exponent for " + name);
  }
  if (exponent == 0) {
    powers_.erase(name);
  } else {
    powers_[std::move(name)] = exponent;
  }
}

int Monomial::exponent(std::string_view name) const noexcept {
  const auto it = powers_.find(name);
  return it == powers_.end() ? 0 : it->second;
}

Monomial Monomial::pow(int k) const {
  Monomial out;
  for (const auto& [name, e] : powers_) {
    out.set(name, static_cast<int>(checked_mul(e, k)));
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [name, e] : b.powers_) {
    out.set(name, static_cast<int>(checked_add(out.exponent(name), e)));
  }
  return out;
}

std::optional<Exponents> Monomial::in_box(const Box& box) const {
  Exponents e(box.dimension(), 0);
  bool inside = true;
  for (const auto& [name, power] : powers_) {
    const auto i = box.index_of(name);
    if (!i) {
      throw Error(ErrorCode::kBoxMismatch,
                  "monomial variable " + name + " is not in the box");
    }
    e[*i] = power;
    if (power > box.variables()[*i].max_exponent) inside = false;
  }
  if (!inside) return std::nullopt;
  return e;
}

Monomial monomial_at(const Box& box, std::span<const int> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < box.dimension(); ++i) {
    if (exponents[i] != 0) {
      m = m * Monomial::variable(box.variables()[i].name, exponents[i]);
    }
  }
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.is_constant()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, e] : m.powers()) {
    if (!first) out << '*';
    first = false;
    out << name;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(Box box) : box_(std::move(box)) {
  long long stride = 1;
  for (const Variable& v : box_.variables()) {
    strides_.push_back(stride);
    stride *= v.max_exponent + 1;
  }
  coeffs_.assign(static_cast<std::size_t>(stride), 0);
}

TruncatedSeries TruncatedSeries::one(const Box& box) {
  TruncatedSeries f(box);
  f.coeffs_[0] = 1;
  return f;
}

TruncatedSeries TruncatedSeries::from_monomial(const Box& box,
                                               const Monomial& m,
                                               long long coefficient) {
  TruncatedSeries f(box);
  f.add_term(m, coefficient);
  return f;
}

std::size_t TruncatedSeries::linear_index(
    std::span<const int> exponents) const noexcept {
  long long index = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i) {
    index += strides_[i] * exponents[i];
  }
  return static_cast<std::size_t>(index);
}

Exponents TruncatedSeries::exponents_at(std::size_t index) const {
  Exponents e(box_.dimension(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const long long radix = box_.variables()[i].max_exponent + 1;
    e[i] = static_cast<int>(static_cast<long long>(index) % radix);
    index = static_cast<std::size_t>(static_cast<long long>(index) / radix);
  }
  return e;
}

long long TruncatedSeries::coefficient(std::span<const int> exponents) const {
  if (!box_.contains(exponents)) {
    throw Error(ErrorCode::kOutOfBox, "coefficient requested outside the box");
  }
  return coeffs_[linear_index(exponents)];
}

long long TruncatedSeries::coefficient(const Monomial& m) const {
  const auto e = m.in_box(box_);
  if (!e) {
    throw Error(ErrorCode::kOutOfBox, to_string(m) + " is outside the box");
  }
  return coefficient(*e);
}

void TruncatedSeries::add_term(std::span<const int> exponents,
                               long long coefficient) {
  if (!box_.contains(exponents)) return;
  long long& slot = coeffs_[linear_index(exponents)];
  slot = checked_add(slot, coefficient);
}

void TruncatedSeries::add_term(const Monomial& m, long long coefficient) {
  if (const auto e = m.in_box(box_)) add_term(*e, coefficient);
}

std::vector<Term> TruncatedSeries::terms() const {
  std::vector<Term> out;
  for (Exponents& e : graded_lex_order(box_)) {
    if (const long long c = coeffs_[linear_index(e)]; c != 0) {
      out.push_back({std::move(e), c});
    }
  }
  return out;
}

std::size_t TruncatedSeries::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(),
                    [](long long c) { return c != 0; }));
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_box(f, g);
  TruncatedSeries out = f;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    out.coeffs_[i] = checked_add(out.coeffs_[i], g.coeffs_[i]);
  }
  out.exact_ = f.exact_ && g.exact_;
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& f) { return -1 * f; }

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + (-g);
}

TruncatedSeries operator*(long long c, const TruncatedSeries& f) {
  TruncatedSeries out = f;
  for (long long& v : out.coeffs_) v = checked_mul(v, c);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_box(f, g);
  TruncatedSeries out(f.box_);
  out.exact_ = f.exact_ && g.exact_;
  const auto lhs = nonzero_entries(f);
  const auto rhs = nonzero_entries(g);
  const auto vars = f.box_.variables();
  for (const SparseEntry& a : lhs) {
    for (const SparseEntry& b : rhs) {
      bool inside = true;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (a.exponents[i] + b.exponents[i] > vars[i].max_exponent) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      long long& slot = out.coeffs_[a.index + b.index];
      slot = checked_add(slot, checked_mul(a.coefficient, b.coefficient));
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f.box_ == g.box_ && f.coeffs_ == g.coeffs_;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f + g;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  return f * g;
}

TruncatedSeries invert(const TruncatedSeries& f) {
  const long long c = f.raw()[0];
  if (c != 1 && c != -1) {
    throw Error(ErrorCode::kNonUnitConstantTerm,
                "constant term is " + std::to_string(c));
  }
  // Writing f = c (1 - h), the inverse c * sum_k h^k satisfies
  // g_e = -c * sum_{0 < e' <= e} f_{e'} g_{e - e'}; visiting exponents in
  // linear-index order guarantees every g_{e - e'} is already known.
  std::vector<SparseEntry> tail = nonzero_entries(f);
  std::erase_if(tail, [](const SparseEntry& s) { return s.index == 0; });

  TruncatedSeries g(f.box());
  g.set_box_exact(f.box_exact());
  std::vector<long long> out(static_cast<std::size_t>(f.box().volume()), 0);
  out[0] = c;
  Exponents e(f.box().dimension(), 0);
  std::size_t index = 0;
  while (increment(e, f.box())) {
    ++index;
    long long acc = 0;
    for (const SparseEntry& s : tail) {
      bool below = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (s.exponents[i] > e[i]) {
          below = false;
          break;
        }
      }
      if (below) {
        acc = checked_add(acc, checked_mul(s.coefficient, out[index - s.index]));
      }
    }
    out[index] = checked_mul(-c, acc);
  }
  Exponents pos(f.box().dimension(), 0);
  std::size_t i = 0;
  do {
    if (out[i] != 0) g.add_term(pos, out[i]);
    ++i;
  } while (increment(pos, f.box()));
  return g;
}

TruncatedSeries power(const TruncatedSeries& f, int k) {
  if (k < 0) return power(invert(f), -k);
  TruncatedSeries out = TruncatedSeries::one(f.box());
  out.set_box_exact(f.box_exact());
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

TruncatedSeries pochhammer(const Monomial& base, const Monomial& ratio, int n,
                           const Box& box) {
  TruncatedSeries out = TruncatedSeries::one(box);
  Monomial factor = base;
  for (int k = 0; k < n; ++k) {
    // Exponents never shrink as k grows, so the first out-of-box factor ends
    // the product.
    const auto e = factor.in_box(box);
    if (!e) break;
    out = times_one_minus(out, *e);
    factor = factor * ratio;
  }
  return out;
}

TruncatedSeries pochhammer_infinite(const Monomial& base, const Monomial& ratio,
                                    const Box& box) {
  if (ratio.is_constant()) {
    throw Error(ErrorCode::kDivergentInfiniteProduct,
                "ratio of an infinite product must not be constant");
  }
  // Each factor raises some exponent, so the loop leaves the box eventually.
  return pochhammer(base, ratio, std::numeric_limits<int>::max(), box);
}

TruncatedSeries q_binomial(int n, int k, const std::string& variable,
                           const Box& box) {
  if (k < 0 || n < 0 || k > n) {
    throw Error(ErrorCode::kDegenerateParams, "q-binomial needs 0 <= k <= n");
  }
  const int degree = k * (n - k);
  if (box.bound(variable) < degree) {
    throw Error(ErrorCode::kBoxTooSmall,
                "q-binomial [" + std::to_string(n) + " choose " +
                    std::to_string(k) + "] needs degree " +
                    std::to_string(degree));
  }
  // Work in a one-variable box large enough for the whole numerator; then the
  // quotient is exact there and must vanish above degree k(n-k).
  const Box local{{variable, n * (n + 1) / 2}};
  const Monomial x = Monomial::variable(variable);
  const TruncatedSeries numerator = pochhammer(x, x, n, local);
  const TruncatedSeries denominator =
      pochhammer(x, x, k, local) * pochhammer(x, x, n - k, local);
  const TruncatedSeries quotient = numerator * invert(denominator);

  TruncatedSeries out(box);
  const std::size_t slot = *box.index_of(variable);
  Exponents e(box.dimension(), 0);
  for (int d = 0; d <= local.variables()[0].max_exponent; ++d) {
    const long long c = quotient.coefficient(std::vector<int>{d});
    if (d > degree && c != 0) {
      throw Error(ErrorCode::kBoxTooSmall,
                  "q-binomial division left a residue");
    }
    e[slot] = d;
    out.add_term(e, c);
  }
  return out;
}

TruncatedSeries substitute(const TruncatedSeries& f,
                           const std::string& variable, const Monomial& m,
                           const Box& out_box) {
  const Box& in_box = f.box();
  if (!in_box.same_variables(out_box)) {
    throw Error(ErrorCode::kBoxMismatch,
                "substitution must keep the variable set");
  }
  const auto slot = in_box.index_of(variable);
  if (!slot) {
    throw Error(ErrorCode::kBoxMismatch, "no variable " + variable);
  }
  Exponents image(out_box.dimension(), 0);
  for (const auto& [name, e] : m.powers()) {
    const auto i = out_box.index_of(name);
    if (!i) throw Error(ErrorCode::kBoxMismatch, "no variable " + name);
    image[*i] = e;
  }

  TruncatedSeries out(out_box);
  for (const SparseEntry& entry : nonzero_entries(f)) {
    Exponents target = entry.exponents;
    const int power = target[*slot];
    target[*slot] = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      target[i] += power * image[i];
    }
    out.add_term(target, entry.coefficient);
  }

  // A term x^e of the full series lands inside out_box only if every other
  // exponent already fits out_box and the substituted exponent e_v satisfies
  // e_v * m_i <= bound_i for all i. f must cover all such preimages.
  bool exact = f.box_exact();
  long long needed = std::numeric_limits<long long>::max();
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] > 0) {
      needed = std::min<long long>(needed,
                                   out_box.variables()[i].max_exponent / image[i]);
    }
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    const long long want =
        i == *slot ? needed : out_box.variables()[i].max_exponent;
    if (want > in_box.variables()[i].max_exponent) exact = false;
  }
  out.set_box_exact(exact);
  return out;
}

std::vector<Exponents> graded_lex_order(const Box& box) {
  std::vector<Exponents> all;
  all.reserve(static_cast<std::size_t>(box.volume()));
  Exponents e(box.dimension(), 0);
  do {
    all.push_back(e);
  } while (increment(e, box));
  const auto degree = [](const Exponents& x) {
    return std::accumulate(x.begin(), x.end(), 0);
  };
  std::stable_sort(all.begin(), all.end(),
                   [&](const Exponents& a, const Exponents& b) {
                     const int da = degree(a);
                     const int db = degree(b);
                     if (da != db) return da < db;
                     return a > b;
                   });
  return all;
}

std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& f,
                                             const TruncatedSeries& g) {
  require_same_box(f, g);
  for (Exponents& e : graded_lex_order(f.box())) {
    const long long a = f.coefficient(e);
    const long long b = g.coefficient(e);
    if (a != b) return SeriesMismatch{std::move(e), a, b};
  }
  return std::nullopt;
}

std::string to_string(const TruncatedSeries& f) {
  std::ostringstream out;
  bool first = true;
  for (const Term& term : f.terms()) {
    long long c = term.coefficient;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = c < 0 ? -c : c;
    std::string body;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      const int e = term.exponents[i];
      if (e == 0) continue;
      if (!body.empty()) body += '*';
      body += f.box().variables()[i].name;
      if (e != 1) body += '^' + std::to_string(e);
    }
    if (body.empty()) {
      out << c;
    } else {
      if (c != 1) out << c << '*';
      out << body;
    }
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace schmidt::qseries
