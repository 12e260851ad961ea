#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "fockbridge/heisenberg.hpp"
#include "fockbridge/partition.hpp"
#include "fockbridge/scalar.hpp"
#include "fockbridge/symfunc.hpp"

namespace fbtest {

using namespace fockbridge;

inline Scalar S(const std::string& text) { return Scalar::parse(text); }
inline Partition P(const std::string& text) { return Partition::parse(text); }
inline BasisIndex I(const std::string& text) { return partition_index(Partition::parse(text)); }

inline IntPoly random_poly(std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-5, 5), terms(0, max_terms);
  IntPoly p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p += IntPoly::monomial(coeff(rng), deg(rng), deg(rng));
  return p;
}

inline Scalar random_scalar(std::mt19937& rng) {
  IntPoly den;
  while (den.is_zero()) den = random_poly(rng, 2, 3);
  return Scalar::fraction(random_poly(rng, 2, 3), den);
}

inline std::string show(const SymFunc& f) { return f.to_string(); }

}  // namespace fbtest

namespace doctest {
template <>
struct StringMaker<fockbridge::Scalar> {
  static String convert(const fockbridge::Scalar& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<fockbridge::Partition> {
  static String convert(const fockbridge::Partition& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<fockbridge::SymFunc> {
  static String convert(const fockbridge::SymFunc& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<fockbridge::IntPoly> {
  static String convert(const fockbridge::IntPoly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
