#include "pfh/sympoly.hpp"

#include <stdexcept>

#include "pfh/harmonic.hpp"
#include "pfh/partitions.hpp"

namespace pfh {

namespace {

unsigned total_degree(const SymPoly::Monomial& m) {
  unsigned d = 0;
  for (const auto& [var, exp] : m) {
    d += exp;
  }
  return d;
}

SymPoly::Monomial merge_monomials(const SymPoly::Monomial& a, const SymPoly::Monomial& b) {
  SymPoly::Monomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

bool SymPoly::GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) {
    return da < db;
  }
  // Same degree: lexicographic on the exponent vectors, a higher power of an
  // earlier variable ranking higher.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) {
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) {
      return ia->second < ib->second;
    }
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib != b.end();
}

SymPoly SymPoly::constant(const Rational& c) {
  SymPoly p;
  if (!c.is_zero()) {
    p.terms_.emplace(Monomial{}, c);
  }
  return p;
}

SymPoly SymPoly::variable(unsigned id) {
  SymPoly p;
  p.terms_.emplace(Monomial{{id, 1}}, Rational(1));
  return p;
}

std::set<unsigned> SymPoly::variables_used() const {
  std::set<unsigned> vars;
  for (const auto& [mono, coeff] : terms_) {
    for (const auto& [var, exp] : mono) {
      vars.insert(var);
    }
  }
  return vars;
}

void SymPoly::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [mono, coeff] : r.terms_) {
    coeff = -coeff;
  }
  return r;
}

SymPoly operator+(const SymPoly& lhs, const SymPoly& rhs) {
  SymPoly r = lhs;
  for (const auto& [mono, coeff] : rhs.terms_) {
    r.add_term(mono, coeff);
  }
  return r;
}

SymPoly operator-(const SymPoly& lhs, const SymPoly& rhs) { return lhs + (-rhs); }

SymPoly operator*(const SymPoly& lhs, const SymPoly& rhs) {
  SymPoly r;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      r.add_term(merge_monomials(ma, mb), ca * cb);
    }
  }
  return r;
}

SymPoly SymPoly::scaled(const Rational& factor) const {
  SymPoly r;
  if (factor.is_zero()) {
    return r;
  }
  r.terms_ = terms_;
  for (auto& [mono, coeff] : r.terms_) {
    coeff *= factor;
  }
  return r;
}

SymPoly SymPoly::pow(unsigned exponent) const {
  SymPoly result = SymPoly::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) {
    result = result * *this;
  }
  return result;
}

SymPoly SymPoly::substitute(const std::map<unsigned, SymPoly>& replacements) const {
  SymPoly result;
  for (const auto& [mono, coeff] : terms_) {
    SymPoly term = SymPoly::constant(coeff);
    for (const auto& [var, exp] : mono) {
      const auto it = replacements.find(var);
      const SymPoly base = (it != replacements.end()) ? it->second : SymPoly::variable(var);
      term = term * base.pow(exp);
    }
    result = result + term;
  }
  return result;
}

Rational SymPoly::evaluate(const std::map<unsigned, Rational>& values) const {
  Rational total(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term = coeff;
    for (const auto& [var, exp] : mono) {
      const auto it = values.find(var);
      if (it == values.end()) {
        throw std::invalid_argument("SymPoly::evaluate: unbound variable");
      }
      term *= it->second.pow(static_cast<long>(exp));
    }
    total += term;
  }
  return total;
}

SymPoly sym_derive(const SymPoly& p) {
  SymPoly result;
  for (const auto& [mono, coeff] : p.terms()) {
    for (size_t pos = 0; pos < mono.size(); ++pos) {
      const auto [var, exp] = mono[pos];
      if (!omega_vars::is_g(var) && !omega_vars::is_h(var)) {
        continue;  // L and M are constants under the derivation
      }
      const unsigned depth = omega_vars::depth(var);
      const long slope = omega_vars::is_g(var) ? -static_cast<long>(depth)
                                               : static_cast<long>(depth);
      const unsigned successor =
          omega_vars::is_g(var) ? omega_vars::g(depth + 1) : omega_vars::h(depth + 1);

      SymPoly::Monomial derived;
      derived.reserve(mono.size() + 1);
      for (size_t q = 0; q < mono.size(); ++q) {
        if (q == pos) {
          if (exp > 1) {
            derived.emplace_back(var, exp - 1);
          }
        } else {
          derived.push_back(mono[q]);
        }
      }
      derived = merge_monomials(derived, SymPoly::Monomial{{successor, 1}});
      result.add_term(derived, coeff * Rational(static_cast<long>(exp)) * Rational(slope));
    }
  }
  return result;
}

SymPoly omega_symbolic(unsigned ell, OmegaMethod method) {
  if (method == OmegaMethod::kRecurrence) {
    SymPoly omega = SymPoly::constant(Rational(1));
    const SymPoly drift = SymPoly::variable(omega_vars::kL) * SymPoly::variable(omega_vars::g(1)) +
                          SymPoly::variable(omega_vars::kM) * SymPoly::variable(omega_vars::h(1));
    for (unsigned j = 0; j < ell; ++j) {
      omega = sym_derive(omega) - drift * omega;
    }
    return omega;
  }

  const SymPoly L = SymPoly::variable(omega_vars::kL);
  const SymPoly M = SymPoly::variable(omega_vars::kM);
  SymPoly total;
  const Rational sign_ell = (ell % 2 == 0) ? Rational(1) : Rational(-1);
  for (const Partition& p : enumerate_partitions(ell)) {
    Rational weight = sign_ell * Rational(factorial(ell));
    SymPoly product = SymPoly::constant(Rational(1));
    for (unsigned i = 1; i <= ell; ++i) {
      const unsigned m = p.multiplicity[i - 1];
      if (m == 0) {
        continue;
      }
      weight /= Rational(factorial(m)) * Rational(static_cast<long>(i)).pow(static_cast<long>(m));
      const Rational h_sign = (i % 2 == 0) ? Rational(-1) : Rational(1);
      const SymPoly base = L * SymPoly::variable(omega_vars::g(i)) +
                           (M * SymPoly::variable(omega_vars::h(i))).scaled(h_sign);
      product = product * base.pow(m);
    }
    total = total + product.scaled(weight);
  }
  return total;
}

Rational evaluate_sym(const SymPoly& p, unsigned n, unsigned k, const Rational& lambda,
                      const Rational& mu) {
  if (k > n) {
    throw std::domain_error("evaluate_sym: k must satisfy k <= n");
  }
  std::map<unsigned, Rational> values;
  values.emplace(omega_vars::kL, lambda);
  values.emplace(omega_vars::kM, mu);
  for (unsigned var : p.variables_used()) {
    if (omega_vars::is_g(var)) {
      const unsigned i = omega_vars::depth(var);
      const Rational hk = harmonic_number(k, i);
      const Rational hnk = harmonic_number(n - k, i);
      values.emplace(var, (i % 2 == 0) ? hnk + hk : hnk - hk);
    } else if (omega_vars::is_h(var)) {
      const unsigned i = omega_vars::depth(var);
      values.emplace(var, harmonic_number(n + k, i) - harmonic_number(k, i));
    }
  }
  return p.evaluate(values);
}

}  // namespace pfh
