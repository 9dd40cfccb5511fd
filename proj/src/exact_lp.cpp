#include "vgit/exact_lp.hpp"

#include <limits>
#include <numeric>
#include <optional>

namespace vgit::lp {

namespace {

// Integer-preserving (fraction-free) simplex. Every tableau entry is stored as
// an integer numerator over the common denominator `det`, the determinant of
// the current basis, which is kept positive. A pivot on p = T[r][c] maps
// T[i][j] -> (p * T[i][j] - T[i][c] * T[r][j]) / det, an exact division.
//
// Int is either a checked 64-bit integer or mpz_class; the 64-bit run throws
// Overflow and is redone with GMP integers.

struct Overflow {};

struct Checked64 {
  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a.v, b.v, &out)) throw Overflow{};
    return out;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a.v, b.v, &out)) throw Overflow{};
    return out;
  }
  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t out;
    if (__builtin_add_overflow(a.v, b.v, &out)) throw Overflow{};
    return out;
  }
  friend Checked64 operator-(Checked64 a) { return Checked64(0) - a; }
  friend Checked64 operator/(Checked64 a, Checked64 b) { return a.v / b.v; }
  friend int sgn(Checked64 a) { return (a.v > 0) - (a.v < 0); }
  friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }

  Rational to_rational() const { return Rational(static_cast<long>(v)); }
  static Checked64 from(std::int64_t z) { return z; }
};

struct BigInt {
  mpz_class v;

  BigInt() = default;
  BigInt(mpz_class x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  BigInt(long x) : v(x) {}                  // NOLINT(google-explicit-constructor)

  friend BigInt operator*(const BigInt& a, const BigInt& b) { return mpz_class(a.v * b.v); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return mpz_class(a.v - b.v); }
  friend BigInt operator+(const BigInt& a, const BigInt& b) { return mpz_class(a.v + b.v); }
  friend BigInt operator-(const BigInt& a) { return mpz_class(-a.v); }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), a.v.get_mpz_t(), b.v.get_mpz_t());
    return out;
  }
  friend int sgn(const BigInt& a) { return sgn(a.v); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v < b.v; }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v == b.v; }

  Rational to_rational() const { return Rational(v); }
  static BigInt from(const mpz_class& z) { return z; }
  static BigInt from(std::int64_t z) { return BigInt(static_cast<long>(z)); }
};

template <class Int>
class Tableau {
 public:
  // Columns: structural variables, then one artificial per row, then rhs.
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1)), basis_(rows) {}

  Int& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Int& rhs(std::size_t r) { return at(r, cols_); }
  Int& cost(std::size_t c) { return at(rows_, c); }
  std::size_t rows() const { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }
  Int& det() { return det_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Int p = at(pr, pc);
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Int factor = at(r, pc);
      for (std::size_t c = 0; c <= cols_; ++c) {
        at(r, c) = (p * at(r, c) - factor * at(pr, c)) / det_;
      }
    }
    det_ = p;
    if (sgn(det_) < 0) {
      for (auto& cell : cells_) cell = -cell;
      det_ = -det_;
    }
    basis_[pr] = pc;
  }

  // Bland's rule over columns [0, active_cols). Returns false when unbounded.
  bool optimize(std::size_t active_cols) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (sgn(cost(c)) < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t ec = *entering;
      std::optional<std::size_t> leaving;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn(at(r, ec)) <= 0) continue;
        if (!leaving) {
          leaving = r;
          continue;
        }
        // Compare rhs(r)/at(r,ec) with rhs(l)/at(l,ec); both denominators positive.
        const std::size_t l = *leaving;
        const Int lhs = rhs(r) * at(l, ec);
        const Int rhs_best = rhs(l) * at(r, ec);
        if (lhs < rhs_best || (lhs == rhs_best && basis_[r] < basis_[l])) leaving = r;
      }
      if (!leaving) return false;
      pivot(*leaving, ec);
    }
  }

  void drop_row(std::size_t r) {
    std::vector<Int> next(rows_ * (cols_ + 1));
    std::size_t out = 0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      for (std::size_t c = 0; c <= cols_; ++c) next[out++] = std::move(at(i, c));
    }
    cells_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> cells_;
  std::vector<std::size_t> basis_;
  Int det_ = Int(1);
};

// Integer data of the program: each row (with its rhs) and the objective are
// scaled by the lcm of their denominators. V is std::int64_t when everything
// fits, mpz_class otherwise.
template <class V>
struct IntegerForm {
  std::vector<std::vector<V>> rows;
  std::vector<V> rhs;
  std::vector<V> objective;
  V objective_scale;
};

Rational to_q(std::int64_t v) { return Rational(static_cast<long>(v)); }
Rational to_q(const mpz_class& v) { return Rational(v); }

IntegerForm<mpz_class> integerize_big(const LinearProgram& program, bool negate_objective) {
  IntegerForm<mpz_class> out;
  auto scale_of = [](const std::vector<Rational>& values, const Rational* extra) {
    mpz_class l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    if (extra) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra->get_den_mpz_t());
    return l;
  };
  auto scaled = [](const Rational& v, const mpz_class& s) { return mpz_class(v.get_num() * (s / v.get_den())); };
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    const mpz_class s = scale_of(program.rows[r], &program.rhs[r]);
    std::vector<mpz_class> row;
    row.reserve(program.rows[r].size());
    for (const auto& v : program.rows[r]) row.push_back(scaled(v, s));
    out.rows.push_back(std::move(row));
    out.rhs.push_back(scaled(program.rhs[r], s));
  }
  out.objective_scale = scale_of(program.objective, nullptr);
  for (const auto& v : program.objective) {
    out.objective.push_back(negate_objective ? mpz_class(-scaled(v, out.objective_scale))
                                             : scaled(v, out.objective_scale));
  }
  return out;
}

std::optional<IntegerForm<std::int64_t>> integerize_small(const LinearProgram& program, bool negate_objective) {
  auto fits = [](const Rational& v) { return v.get_num().fits_slong_p() && v.get_den().fits_slong_p(); };
  auto lcm = [](std::int64_t a, std::int64_t b) -> std::optional<std::int64_t> {
    const std::int64_t g = std::gcd(a, b);
    std::int64_t out;
    if (__builtin_mul_overflow(a / g, b, &out)) return std::nullopt;
    return out;
  };
  auto scale_of = [&](const std::vector<Rational>& values, const Rational* extra) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> l = 1;
    for (const auto& v : values) {
      if (!fits(v)) return std::nullopt;
      if (!(l = lcm(*l, v.get_den().get_si()))) return std::nullopt;
    }
    if (extra) {
      if (!fits(*extra)) return std::nullopt;
      l = lcm(*l, extra->get_den().get_si());
    }
    return l;
  };
  auto scaled = [](const Rational& v, std::int64_t s) -> std::optional<std::int64_t> {
    std::int64_t out;
    if (__builtin_mul_overflow(v.get_num().get_si(), s / v.get_den().get_si(), &out)) return std::nullopt;
    return out;
  };

  IntegerForm<std::int64_t> out;
  out.rows.reserve(program.rows.size());
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    const auto s = scale_of(program.rows[r], &program.rhs[r]);
    if (!s) return std::nullopt;
    std::vector<std::int64_t> row;
    row.reserve(program.rows[r].size());
    for (const auto& v : program.rows[r]) {
      const auto x = scaled(v, *s);
      if (!x) return std::nullopt;
      row.push_back(*x);
    }
    const auto b = scaled(program.rhs[r], *s);
    if (!b) return std::nullopt;
    out.rows.push_back(std::move(row));
    out.rhs.push_back(*b);
  }
  const auto s = scale_of(program.objective, nullptr);
  if (!s) return std::nullopt;
  out.objective_scale = *s;
  for (const auto& v : program.objective) {
    const auto x = scaled(v, *s);
    if (!x || *x == std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    out.objective.push_back(negate_objective ? -*x : *x);
  }
  return out;
}

template <class Int, class V>
Solution solve(const IntegerForm<V>& form) {
  const std::size_t m = form.rows.size();
  const std::size_t n = form.objective.size();

  Tableau<Int> t(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = Int::from(form.rhs[r]) < Int(0);
    for (std::size_t c = 0; c < n; ++c) {
      const Int v = Int::from(form.rows[r][c]);
      t.at(r, c) = flip ? -v : v;
    }
    t.at(r, n + r) = Int(1);
    const Int b = Int::from(form.rhs[r]);
    t.rhs(r) = flip ? -b : b;
    t.basis()[r] = n + r;
  }
  // Phase one: minimize the sum of artificials.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) t.cost(c) = t.cost(c) - t.at(r, c);
  }
  for (std::size_t r = 0; r < m; ++r) t.cost(n + m) = t.cost(n + m) - t.rhs(r);
  t.optimize(n + m);

  Solution result;
  if (sgn(t.cost(n + m)) != 0) {
    result.status = Status::Infeasible;
    return result;
  }

  // Pivot zero-valued artificials out of the basis; rows where that is
  // impossible are linearly dependent and get dropped.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis()[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(t.at(r, c)) != 0) {
        col = c;
        break;
      }
    }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.drop_row(r);
    }
  }

  // Phase two. Reduced costs scaled by det: c_j * det - sum_r c_B(r) * T[r][j].
  for (std::size_t c = 0; c <= n + m; ++c) t.cost(c) = Int(0);
  for (std::size_t c = 0; c < n; ++c) t.cost(c) = Int::from(form.objective[c]) * t.det();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Int cb = Int::from(form.objective[t.basis()[r]]);
    if (sgn(cb) == 0) continue;
    for (std::size_t c = 0; c < n; ++c) t.cost(c) = t.cost(c) - cb * t.at(r, c);
    t.cost(n + m) = t.cost(n + m) - cb * t.rhs(r);
  }
  if (!t.optimize(n)) {
    result.status = Status::Unbounded;
    return result;
  }

  const Rational det = t.det().to_rational();
  result.status = Status::Optimal;
  result.objective_value = -t.cost(n + m).to_rational() / det / to_q(form.objective_scale);
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) result.x[t.basis()[r]] = t.rhs(r).to_rational() / det;
  return result;
}

void validate(const LinearProgram& program) {
  if (program.rows.size() != program.rhs.size()) throw InvalidInput("LP: row count does not match rhs length");
  for (const auto& row : program.rows) {
    if (row.size() != program.num_variables()) throw InvalidInput("LP: row width does not match objective length");
  }
}

Solution optimize(const LinearProgram& program, bool maximize) {
  validate(program);
  Solution result;
  bool solved = false;
  if (auto small = integerize_small(program, maximize)) {
    try {
      result = solve<Checked64>(*small);
      solved = true;
    } catch (const Overflow&) {
    }
  }
  if (!solved) result = solve<BigInt>(integerize_big(program, maximize));
  if (maximize && result.status == Status::Optimal) result.objective_value = -result.objective_value;
  return result;
}

}  // namespace

Solution minimize(const LinearProgram& program) { return optimize(program, false); }

Solution maximize(const LinearProgram& program) { return optimize(program, true); }

bool is_feasible_point(const LinearProgram& program, const std::vector<Rational>& x) {
  if (x.size() != program.num_variables()) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < x.size(); ++c) lhs += program.rows[r][c] * x[c];
    if (lhs != program.rhs[r]) return false;
  }
  return true;
}

}  // namespace vgit::lp
