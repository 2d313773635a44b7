#include "pfh/pfd.hpp"

#include <stdexcept>
#include <string>

#include "pfh/bell.hpp"
#include "pfh/harmonic.hpp"

namespace pfh {

namespace {

Rational int_pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return Rational(r);
}

int sign_pow(unsigned exponent) { return exponent % 2 == 0 ? 1 : -1; }

// (1 - x)_n = prod_{j=1..n} (j - x)
Polynomial falling_shift_poly(unsigned n) {
  Polynomial p = Polynomial::constant(Rational(1));
  for (unsigned j = 1; j <= n; ++j) {
    p = p * Polynomial({Rational(static_cast<long>(j)), Rational(-1)});
  }
  return p;
}

std::vector<Rational> half_integer_samples(const RationalFunctionSpec& spec, unsigned count) {
  std::vector<Rational> points;
  points.reserve(count);
  for (long j = 0; points.size() < count; ++j) {
    const Rational x = Rational(2 * j + 1, 2);
    if (!spec.is_pole(x)) {
      points.push_back(x);
    }
  }
  return points;
}

// Exact Gaussian elimination on the augmented system; the pole-coefficient
// systems solved here are provably nonsingular, so a vanishing pivot column
// is an internal error.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> aug) {
  const size_t m = aug.size();
  for (size_t col = 0; col < m; ++col) {
    size_t pivot = col;
    while (pivot < m && aug[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == m) {
      throw std::logic_error("oracle_decompose: singular coefficient system");
    }
    std::swap(aug[col], aug[pivot]);
    const Rational inv = aug[col][col].inverse();
    for (size_t j = col; j <= m; ++j) {
      aug[col][j] *= inv;
    }
    for (size_t row = 0; row < m; ++row) {
      if (row == col || aug[row][col].is_zero()) {
        continue;
      }
      const Rational factor = aug[row][col];
      for (size_t j = col; j <= m; ++j) {
        aug[row][j] -= factor * aug[col][j];
      }
    }
  }
  std::vector<Rational> solution;
  solution.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    solution.push_back(aug[i][m]);
  }
  return solution;
}

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

}  // namespace

unsigned RationalFunctionSpec::denominator_degree() const {
  unsigned d = 0;
  for (const auto& p : poles) {
    d += p.multiplicity;
  }
  return d;
}

Polynomial RationalFunctionSpec::expanded_denominator() const {
  Polynomial d = Polynomial::constant(Rational(1));
  for (const auto& p : poles) {
    const Polynomial factor({-p.root, Rational(1)});
    for (unsigned e = 0; e < p.multiplicity; ++e) {
      d = d * factor;
    }
  }
  return d;
}

bool RationalFunctionSpec::is_pole(const Rational& x) const {
  for (const auto& p : poles) {
    if (p.root == x) {
      return true;
    }
  }
  return false;
}

Rational RationalFunctionSpec::evaluate(const Rational& x) const {
  if (is_pole(x)) {
    throw std::domain_error("RationalFunctionSpec: evaluation at a pole");
  }
  Rational value = scalar * numerator.evaluate(x);
  for (const auto& p : poles) {
    value *= (x - p.root).pow(-static_cast<long>(p.multiplicity));
  }
  return value;
}

void RationalFunctionSpec::validate() const {
  for (size_t i = 0; i < poles.size(); ++i) {
    require(poles[i].multiplicity >= 1, "RationalFunctionSpec: zero multiplicity");
    for (size_t j = i + 1; j < poles.size(); ++j) {
      require(!(poles[i].root == poles[j].root), "RationalFunctionSpec: repeated pole root");
    }
  }
}

Rational PFDResult::evaluate(const Rational& x) const {
  Rational value = polynomial_part.evaluate(x);
  for (const auto& [root, coeffs] : terms) {
    if (root == x) {
      throw std::domain_error("PFDResult: evaluation at a pole");
    }
    const Rational inv = (x - root).inverse();
    Rational power = inv;
    for (const Rational& c : coeffs) {
      value += c * power;
      power *= inv;
    }
  }
  return value;
}

Rational PFDResult::residue_sum() const {
  Rational sum(0);
  for (const auto& [root, coeffs] : terms) {
    if (!coeffs.empty()) {
      sum += coeffs.front();
    }
  }
  return sum;
}

RationalFunctionSpec build_family_spec(const FamilyParams& params) {
  RationalFunctionSpec spec;
  const unsigned n = params.n;
  const auto neg_poles = [&spec, n](unsigned multiplicity) {
    for (unsigned k = n + 1; k-- > 0;) {
      spec.poles.push_back({Rational(-static_cast<long>(k)), multiplicity});
    }
  };
  const auto pos_poles = [&spec, n](unsigned multiplicity) {
    for (unsigned k = 1; k <= n; ++k) {
      spec.poles.push_back({Rational(static_cast<long>(k)), multiplicity});
    }
  };
  const Rational nfact(factorial(n));
  const Rational n2fact(factorial(2UL * n));

  switch (params.family) {
    case Family::kTheorem: {
      require(params.lambda >= 1, "theorem family: lambda must be >= 1");
      require(params.mu <= params.lambda, "theorem family: mu must satisfy mu <= lambda");
      spec.scalar = nfact.pow(static_cast<long>(params.lambda) - static_cast<long>(params.mu));
      Polynomial num = Polynomial::constant(Rational(1));
      const Polynomial base = falling_shift_poly(n);
      for (unsigned e = 0; e < params.mu; ++e) {
        num = num * base;
      }
      spec.numerator = num;
      neg_poles(params.lambda);
      break;
    }
    case Family::kBeukers6: {
      const Polynomial base = falling_shift_poly(n);
      spec.numerator = Polynomial::monomial(Rational(1), 1) * base * base;
      neg_poles(2);
      break;
    }
    case Family::kExample7: {
      const Polynomial base = falling_shift_poly(n);
      spec.numerator = base * base;
      for (unsigned k = n; k >= 1; --k) {
        spec.poles.push_back({Rational(-static_cast<long>(k)), 2});
      }
      break;
    }
    // The monic pole factors (x - k) flip the sign of every odd power of
    // (1 - x)_n; the scalar absorbs the (-1)^n.
    case Family::kExample8:
      spec.scalar = Rational(sign_pow(n)) * nfact * n2fact;
      neg_poles(2);
      pos_poles(1);
      break;
    case Family::kExample9:
      spec.scalar = Rational(sign_pow(n)) * nfact * nfact * n2fact;
      neg_poles(3);
      pos_poles(1);
      break;
    case Family::kExample10:
      spec.scalar = nfact * n2fact * n2fact;
      neg_poles(3);
      pos_poles(2);
      break;
    case Family::kTheta:
      require(params.theta < 4 + 4 * n, "theta family: need 0 <= theta < 4 + 4n");
      spec.scalar = nfact.pow(4);
      spec.numerator = Polynomial::monomial(Rational(1), params.theta);
      neg_poles(4);
      break;
  }
  spec.validate();
  return spec;
}

PFDResult theorem_decompose(unsigned n, unsigned lambda, unsigned mu) {
  if (lambda < 1) {
    throw std::domain_error("theorem_decompose: lambda must be >= 1");
  }
  const long long properness = static_cast<long long>(lambda) +
                               (static_cast<long long>(lambda) - static_cast<long long>(mu)) *
                                   static_cast<long long>(n);
  if (properness <= 0) {
    throw std::domain_error("theorem_decompose: hypothesis lambda + (lambda - mu) n > 0 fails");
  }
  PFDResult result;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational weight = Rational(sign_pow(k * lambda)) *
                            int_pow(binomial(n, k), lambda) * int_pow(binomial(n + k, k), mu);
    std::vector<Rational> coeffs(lambda, Rational(0));
    for (unsigned ell = 0; ell < lambda; ++ell) {
      const Rational omega = omega_coeff({lambda, mu, n, k, ell});
      coeffs[lambda - ell - 1] = weight * omega / Rational(factorial(ell));
    }
    result.terms.emplace(Rational(-static_cast<long>(k)), std::move(coeffs));
  }
  return result;
}

namespace {

void beukers6_coefficients(const FamilyParams& params, PFDResult& result) {
  const unsigned n = params.n;
  result.terms.emplace(Rational(0), std::vector<Rational>{Rational(1), Rational(0)});
  for (unsigned k = 1; k <= n; ++k) {
    const Rational w = int_pow(binomial(n, k), 2) * int_pow(binomial(n + k, k), 2);
    const Rational kq(static_cast<long>(k));
    const Rational h_term = (params.erratum_mode == ErratumMode::kPrinted)
                                ? Rational(4) * harmonic_number(k, 1)
                                : Rational(4) * kq * harmonic_number(k, 1);
    const Rational simple = w * (Rational(1) + Rational(2) * kq * harmonic_number(n + k, 1) +
                                 Rational(2) * kq * harmonic_number(n - k, 1) - h_term);
    result.terms.emplace(-kq, std::vector<Rational>{simple, -kq * w});
  }
}

void example7_coefficients(unsigned n, PFDResult& result) {
  for (unsigned k = 1; k <= n; ++k) {
    const Rational kq(static_cast<long>(k));
    const Rational w = kq * kq * int_pow(binomial(n, k), 2) * int_pow(binomial(n + k, k), 2);
    const Rational bracket = kq.inverse() + harmonic_number(n + k, 1) +
                             harmonic_number(n - k, 1) - Rational(2) * harmonic_number(k, 1);
    result.terms.emplace(-kq, std::vector<Rational>{Rational(-2) * w * bracket, w});
  }
}

void example8_coefficients(unsigned n, PFDResult& result) {
  for (unsigned k = 0; k <= n; ++k) {
    const Rational w = Rational(binomial(n, k)) * Rational(binomial(2 * n, n + k));
    const Rational simple = w * (harmonic_number(k, 1) + harmonic_number(n + k, 1) -
                                 Rational(2) * harmonic_number(n - k, 1));
    result.terms.emplace(Rational(-static_cast<long>(k)), std::vector<Rational>{simple, w});
  }
  for (unsigned k = 1; k <= n; ++k) {
    const Rational w = Rational(sign_pow(k)) * Rational(binomial(2 * n, n + k)) /
                       (Rational(static_cast<long>(1 + n)) * Rational(binomial(n + k, n + 1)));
    result.terms.emplace(Rational(static_cast<long>(k)), std::vector<Rational>{w});
  }
}

void example9_coefficients(unsigned n, PFDResult& result) {
  for (unsigned k = 0; k <= n; ++k) {
    const Rational w =
        Rational(sign_pow(k)) * int_pow(binomial(n, k), 2) * Rational(binomial(2 * n, n + k));
    const Rational log1 = Rational(2) * harmonic_number(k, 1) + harmonic_number(n + k, 1) -
                          Rational(3) * harmonic_number(n - k, 1);
    const Rational log2 = Rational(2) * harmonic_number(k, 2) + harmonic_number(n + k, 2) +
                          Rational(3) * harmonic_number(n - k, 2);
    result.terms.emplace(
        Rational(-static_cast<long>(k)),
        std::vector<Rational>{w * (log1 * log1 + log2) / Rational(2), w * log1, w});
  }
  for (unsigned k = 1; k <= n; ++k) {
    const Rational w = Rational(sign_pow(k)) * Rational(binomial(2 * n, n + k)) /
                       (Rational(static_cast<long>(1 + n)).pow(2) *
                        int_pow(binomial(n + k, n + 1), 2));
    result.terms.emplace(Rational(static_cast<long>(k)), std::vector<Rational>{w});
  }
}

void example10_coefficients(unsigned n, PFDResult& result) {
  for (unsigned k = 0; k <= n; ++k) {
    const Rational w =
        Rational(sign_pow(k)) * Rational(binomial(n, k)) * int_pow(binomial(2 * n, n + k), 2);
    const Rational log1 = harmonic_number(k, 1) + Rational(2) * harmonic_number(n + k, 1) -
                          Rational(3) * harmonic_number(n - k, 1);
    const Rational log2 = harmonic_number(k, 2) + Rational(2) * harmonic_number(n + k, 2) +
                          Rational(3) * harmonic_number(n - k, 2);
    result.terms.emplace(
        Rational(-static_cast<long>(k)),
        std::vector<Rational>{w * (log1 * log1 + log2) / Rational(2), w * log1, w});
  }
  for (unsigned k = 1; k <= n; ++k) {
    const Rational w = int_pow(binomial(2 * n, n + k), 2) /
                       (Rational(static_cast<long>(1 + n)) * Rational(binomial(n + k, n + 1)));
    const Rational simple = w * (harmonic_number(k - 1, 1) +
                                 Rational(2) * harmonic_number(n - k, 1) -
                                 Rational(3) * harmonic_number(n + k, 1));
    result.terms.emplace(Rational(static_cast<long>(k)), std::vector<Rational>{simple, w});
  }
}

// The three bracket polynomials of the theta family, as polynomials in a
// formal k whose harmonic values are supplied from outside. At a pole with
// k >= 1 they are evaluated directly; at k = 0 the prefactor (-k)^(theta-j)
// is indeterminate and the identity only survives as the limit, which is the
// k-power coefficient extracted in theta_pole_zero_coefficients below.
struct ThetaBrackets {
  Polynomial b0, b1, b2, b3;
};

ThetaBrackets theta_brackets(unsigned theta, const Rational& a1, const Rational& a2,
                             const Rational& a3) {
  const Rational t(static_cast<long>(theta));
  const Polynomial t1({t, Rational(-4) * a1});
  const Polynomial t2({t, Rational(0), Rational(-4) * a2});
  const Polynomial t3({t, Rational(0), Rational(0), Rational(-4) * a3});
  ThetaBrackets b;
  b.b0 = Polynomial::constant(Rational(1));
  b.b1 = t1;
  b.b2 = t1 * t1 - t2;
  b.b3 = t1 * t1 * t1 - t1 * t2.scaled(Rational(3)) + t3.scaled(Rational(2));
  return b;
}

std::vector<Rational> theta_pole_zero_coefficients(unsigned n, unsigned theta) {
  // Frozen harmonic values at k = 0: a_m -> (-1)^m H_n^(m).
  const ThetaBrackets b = theta_brackets(theta, -harmonic_number(n, 1), harmonic_number(n, 2),
                                         -harmonic_number(n, 3));
  const Polynomial* brackets[4] = {&b.b0, &b.b1, &b.b2, &b.b3};
  std::vector<Rational> coeffs(4, Rational(0));  // coeffs[t-1] multiplies 1/x^t
  for (unsigned j = 0; j < 4; ++j) {
    if (j < theta) {
      continue;  // positive power of zero
    }
    const unsigned power = j - theta;
    const Rational limit = brackets[j]->coefficient(power) / Rational(factorial(j));
    coeffs[3 - j] = (power % 2 == 0) ? limit : -limit;
  }
  return coeffs;
}

void theta_coefficients(const FamilyParams& params, PFDResult& result) {
  const unsigned n = params.n;
  const unsigned theta = params.theta;
  result.terms.emplace(Rational(0), theta_pole_zero_coefficients(n, theta));
  for (unsigned k = 1; k <= n; ++k) {
    const Rational kq(static_cast<long>(k));
    const Rational a1 = harmonic_number(k, 1) - harmonic_number(n - k, 1);
    const Rational a2 = harmonic_number(k, 2) + harmonic_number(n - k, 2);
    const Rational a3 = harmonic_number(k, 3) - harmonic_number(n - k, 3);
    const ThetaBrackets b = theta_brackets(theta, a1, a2, a3);
    const Polynomial* brackets[4] = {&b.b0, &b.b1, &b.b2, &b.b3};
    const Rational binom4 = int_pow(binomial(n, k), 4);
    std::vector<Rational> coeffs(4, Rational(0));
    for (unsigned j = 0; j < 4; ++j) {
      const Rational prefactor = (-kq).pow(static_cast<long>(theta) - static_cast<long>(j));
      coeffs[3 - j] = binom4 * prefactor * brackets[j]->evaluate(kq) / Rational(factorial(j));
    }
    result.terms.emplace(-kq, std::move(coeffs));
  }
}

}  // namespace

PFDResult example_decompose(const FamilyParams& params) {
  PFDResult result;
  switch (params.family) {
    case Family::kTheorem:
      throw std::invalid_argument("example_decompose: use theorem_decompose for this family");
    case Family::kBeukers6:
      beukers6_coefficients(params, result);
      break;
    case Family::kExample7: {
      const RationalFunctionSpec spec = build_family_spec(params);
      result.polynomial_part =
          spec.numerator.scaled(spec.scalar).divmod(spec.expanded_denominator()).first;
      example7_coefficients(params.n, result);
      break;
    }
    case Family::kExample8:
      example8_coefficients(params.n, result);
      break;
    case Family::kExample9:
      example9_coefficients(params.n, result);
      break;
    case Family::kExample10:
      example10_coefficients(params.n, result);
      break;
    case Family::kTheta: {
      if (params.theta >= 4 + 4 * params.n) {
        throw std::invalid_argument("theta family: need 0 <= theta < 4 + 4n");
      }
      theta_coefficients(params, result);
      break;
    }
  }
  return result;
}

PFDResult oracle_decompose(const RationalFunctionSpec& spec) {
  spec.validate();
  const Polynomial denominator = spec.expanded_denominator();
  const Polynomial full_numerator = spec.numerator.scaled(spec.scalar);
  auto [quotient, remainder] = full_numerator.divmod(denominator);

  PFDResult result;
  result.polynomial_part = quotient;
  const unsigned unknowns = spec.denominator_degree();
  if (unknowns == 0) {
    return result;
  }

  const std::vector<Rational> points = half_integer_samples(spec, unknowns);
  std::vector<std::vector<Rational>> aug(unknowns, std::vector<Rational>(unknowns + 1));
  for (unsigned row = 0; row < unknowns; ++row) {
    const Rational& x = points[row];
    unsigned col = 0;
    for (const auto& p : spec.poles) {
      const Rational inv = (x - p.root).inverse();
      Rational power(1);
      for (unsigned t = 1; t <= p.multiplicity; ++t) {
        power *= inv;
        aug[row][col++] = power;
      }
    }
    aug[row][unknowns] = remainder.evaluate(x) / denominator.evaluate(x);
  }

  const std::vector<Rational> solution = solve_linear_system(std::move(aug));
  unsigned col = 0;
  for (const auto& p : spec.poles) {
    std::vector<Rational> coeffs;
    coeffs.reserve(p.multiplicity);
    for (unsigned t = 1; t <= p.multiplicity; ++t) {
      coeffs.push_back(solution[col++]);
    }
    result.terms.emplace(p.root, std::move(coeffs));
  }
  return result;
}

Rational evaluate_at(const RationalFunctionSpec& spec, const Rational& x) {
  return spec.evaluate(x);
}

Rational evaluate_at(const PFDResult& pfd, const Rational& x) { return pfd.evaluate(x); }

VerifyResult verify_equal(const RationalFunctionSpec& spec, const PFDResult& pfd) {
  const int den_degree = static_cast<int>(spec.denominator_degree());
  int bound = spec.numerator.degree();
  bound = std::max(bound, pfd.polynomial_part.degree() + den_degree);
  bound = std::max(bound, den_degree);
  // Stray roots in the candidate (not among the declared poles) widen the
  // cleared-denominator degree; they are sampled around, never evaluated.
  for (const auto& [root, coeffs] : pfd.terms) {
    if (!spec.is_pole(root)) {
      bound += static_cast<int>(coeffs.size());
    }
  }
  const unsigned count = static_cast<unsigned>(std::max(bound, 0)) + 1;

  VerifyResult result;
  unsigned checked = 0;
  for (long j = 0; checked < count; ++j) {
    const Rational x = Rational(2 * j + 1, 2);
    if (spec.is_pole(x) || pfd.terms.contains(x)) {
      continue;
    }
    ++checked;
    const Rational lhs = spec.evaluate(x);
    const Rational rhs = pfd.evaluate(x);
    if (!(lhs == rhs)) {
      result.equal = false;
      result.witness = x;
      result.lhs = lhs;
      result.rhs = rhs;
      return result;
    }
  }
  result.equal = true;
  return result;
}

Rational residue_sum_expected(const RationalFunctionSpec& spec) {
  const Polynomial denominator = spec.expanded_denominator();
  const Polynomial remainder =
      spec.numerator.scaled(spec.scalar).divmod(denominator).second;
  if (remainder.degree() + 1 == denominator.degree()) {
    return remainder.leading_coefficient();  // the denominator is monic
  }
  return Rational(0);
}

}  // namespace pfh
