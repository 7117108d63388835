#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "mondef/error.hpp"
#include "mondef/vertex_set.hpp"

namespace mondef {

// A monomial in a fixed number of variables, stored as its exponent vector.
// Values are immutable after construction.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int vars) { return Monomial(std::vector<int>(vars, 0)); }
  static Monomial pure_power(int vars, int var, int exponent);
  // prod_{i in support} x_i^exponent
  static Monomial on_support(int vars, VertexSet support, int exponent);

  int vars() const { return static_cast<int>(exponents_.size()); }
  int degree(int var) const { return exponents_[var - 1]; }
  const std::vector<int>& exponents() const { return exponents_; }
  int total_degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  VertexSet support() const;
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lex order on exponent vectors; the canonical generator order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exponents_ <=> b.exponents_;
  }

private:
  std::vector<int> exponents_;
};

bool divides(const Monomial& a, const Monomial& b);
// a strictly divides b: every variable occurring in a has strictly
// smaller exponent than in b.
bool strictly_divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
// lcm of a set of monomials; the empty set yields the unit monomial.
Monomial lcm_set(int vars, std::span<const Monomial> ms);

// A monomial ideal held by its minimal generating set, kept sorted in lex
// order on exponent vectors.  The zero ideal is the empty generator list.
class MonomialIdeal {
public:
  static MonomialIdeal zero(int vars);
  // Drops generators divisible by another, dedupes, sorts.  Rejects the
  // unit monomial as a generator and mismatched variable counts.
  static MonomialIdeal minimalize(int vars, std::vector<Monomial> generators);

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;
  // Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  MonomialIdeal plus(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  MonomialIdeal(int vars, std::vector<Monomial> gens)
      : vars_(vars), gens_(std::move(gens)) {}

  int vars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal radical(const MonomialIdeal& ideal);
bool is_generic(const MonomialIdeal& ideal);

// Deformation test: a bijection between generators of `deformed` and of the
// square-free `base` matching supports exactly.  Support equality makes the
// bijection unique when it exists; pairing[i] is the base index for
// generator i of `deformed`.
struct GeneratorMatching {
  bool ok = false;
  std::vector<int> pairing;
};
GeneratorMatching match_deformation(const MonomialIdeal& deformed,
                                    const MonomialIdeal& base);
bool is_deformation(const MonomialIdeal& deformed, const MonomialIdeal& base);

}  // namespace mondef
