#include "mondef/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mondef {

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    fail(ErrorCode::DimensionMismatch,
         "monomials live in different variable counts: " +
             std::to_string(a.vars()) + " vs " + std::to_string(b.vars()));
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    fail(ErrorCode::InvalidArgument, "monomial needs at least one variable");
  for (int e : exponents_)
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
}

Monomial Monomial::pure_power(int vars, int var, int exponent) {
  std::vector<int> e(vars, 0);
  if (var < 1 || var > vars)
    fail(ErrorCode::VertexOutOfRange, "variable out of range: " + std::to_string(var));
  e[var - 1] = exponent;
  return Monomial(std::move(e));
}

Monomial Monomial::on_support(int vars, VertexSet support, int exponent) {
  std::vector<int> e(vars, 0);
  for (int v : support) {
    if (v > vars)
      fail(ErrorCode::VertexOutOfRange, "variable out of range: " + std::to_string(v));
    e[v - 1] = exponent;
  }
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int i = 0; i < vars(); ++i)
    if (exponents_[i] > 0) s = s.with(i + 1);
  return s;
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponents()[i] > b.exponents()[i]) return false;
  return true;
}

bool strictly_divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  for (int i = 0; i < a.vars(); ++i) {
    const int e = a.exponents()[i];
    if (e > 0 && e >= b.exponents()[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<int> e(a.vars());
  for (int i = 0; i < a.vars(); ++i)
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial lcm_set(int vars, std::span<const Monomial> ms) {
  Monomial out = Monomial::unit(vars);
  for (const Monomial& m : ms) out = lcm(out, m);
  return out;
}

MonomialIdeal MonomialIdeal::zero(int vars) {
  if (vars < 1) fail(ErrorCode::InvalidArgument, "variable count must be positive");
  return MonomialIdeal(vars, {});
}

MonomialIdeal MonomialIdeal::minimalize(int vars, std::vector<Monomial> generators) {
  if (vars < 1) fail(ErrorCode::InvalidArgument, "variable count must be positive");
  for (const Monomial& m : generators) {
    if (m.vars() != vars)
      fail(ErrorCode::DimensionMismatch, "generator has wrong variable count");
    if (m.is_unit())
      fail(ErrorCode::UnitGenerator, "the unit monomial cannot be a generator");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : generators) {
    bool redundant = false;
    for (const Monomial& g : generators) {
      if (&g == &m) continue;
      if (g == m) continue;
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(m);
  }
  return MonomialIdeal(vars, std::move(minimal));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const {
  if (vars_ != other.vars_)
    fail(ErrorCode::DimensionMismatch, "ideal sum across different variable counts");
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return minimalize(vars_, std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generator_count());
  for (const Monomial& m : ideal.generators()) {
    std::vector<int> e = m.exponents();
    for (int& x : e) x = x > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(ideal.vars(), std::move(gens));
}

bool is_generic(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int t = ideal.generator_count();
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      bool shared = false;
      for (int v = 0; v < ideal.vars(); ++v) {
        const int a = gens[i].exponents()[v];
        if (a > 0 && a == gens[j].exponents()[v]) {
          shared = true;
          break;
        }
      }
      if (!shared) continue;
      const Monomial l = lcm(gens[i], gens[j]);
      bool witness = false;
      for (int k = 0; k < t; ++k) {
        if (k == i || k == j) continue;
        if (strictly_divides(gens[k], l)) {
          witness = true;
          break;
        }
      }
      if (!witness) return false;
    }
  }
  return true;
}

GeneratorMatching match_deformation(const MonomialIdeal& deformed,
                                    const MonomialIdeal& base) {
  if (deformed.vars() != base.vars())
    fail(ErrorCode::DimensionMismatch, "deformation test across different variable counts");
  if (!base.is_squarefree())
    fail(ErrorCode::NotSquareFree, "deformation base must be square-free");

  GeneratorMatching result;
  if (deformed.generator_count() != base.generator_count()) return result;

  std::map<std::uint32_t, int> base_by_support;
  for (int j = 0; j < base.generator_count(); ++j)
    base_by_support[base.generators()[j].support().mask()] = j;

  std::vector<int> pairing(deformed.generator_count(), -1);
  std::vector<bool> taken(base.generator_count(), false);
  for (int i = 0; i < deformed.generator_count(); ++i) {
    auto it = base_by_support.find(deformed.generators()[i].support().mask());
    if (it == base_by_support.end() || taken[it->second]) return result;
    pairing[i] = it->second;
    taken[it->second] = true;
  }
  result.ok = true;
  result.pairing = std::move(pairing);
  return result;
}

bool is_deformation(const MonomialIdeal& deformed, const MonomialIdeal& base) {
  return match_deformation(deformed, base).ok;
}

}  // namespace mondef
