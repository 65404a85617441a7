#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace redforge {

using Rational = boost::multiprecision::mpq_rational;

/// maximize c·x subject to A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;  // primal optimum
  std::vector<Rational> y;  // dual: Aᵀy >= c, b·y = value
};

/// Exact two-phase simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

/// Checks primal feasibility, dual feasibility and equal objectives exactly.
bool verify_optimality(const LinearProgram& lp, const LpSolution& sol);

/// Rank of a rational matrix given by rows.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace redforge
