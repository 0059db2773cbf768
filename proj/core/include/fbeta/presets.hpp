#pragma once

#include <vector>

#include "fbeta/datum.hpp"

namespace fbeta {

// Each builder assembles an AlgebraInstance for one published family:
// fresh parameter registry, every table entry derived from the family's
// closed formulas, side conditions enforced with ConfigError. The
// resulting instances pass validate() by construction.

// Two-parameter family. omega is an integer matrix with
// omega(i,j) + omega(j,i) = i.j; one free parameter t.
//   beta(i,j)  = t^(omega_ji - omega_ij)
//   alpha(i,j) = t^(2(2 delta_ij omega_ii - omega_ij))
//   gamma(i,j) = t^(omega_ij - 2 delta_ij omega_ii)
//   alt gamma  = v^(i.j) t^(omega_ij)
//   xi = 1
AlgebraInstance preset_two_parameter(const CartanDatum& dm,
                                     const std::vector<std::vector<int>>& omega,
                                     bool alt_gamma = false);

// Sign-twisted family over a parity datum: requires every off-diagonal
// i.j even and d_i = parity(i) mod 2. One torsion parameter t, t^2 = -1.
//   beta(i,j)  = t^(i.j + 2 p(i)p(j)),  alpha = 1,  xi(i,j) = t^(2 p(i)p(j))
//   gamma(i,j) = t^(i.j) | t^(d_i) | t^(2 p(i)p(j))     for j<i | j=i | j>i
//   alt gamma  = t^(2 i.j) | t^(d_i) | t^(i.j + 2 p(i)p(j))
AlgebraInstance preset_super(const CartanDatum& dm, bool alt_gamma = false);

// Multi-parameter family: free units q[i,j] for i<j, with
// q_ii = v_i^-2 and q_ji = v^(-2 i.j) q_ij^-1 derived.
//   beta(i,j) = v^(i.j) q_ij,  alpha(i,j) = q_ij,
//   gamma(i,j) = q_ii^(delta_ij) sqrt(q_ji),  xi = 1
AlgebraInstance preset_multi_parameter(const CartanDatum& dm);

// First multi-parameter super family over a caller-built registry.
// p_diag holds the p_i; side conditions
//   p_ij^2 = p_i^(2 a_ij),   p_ij p_ji = p_i^(2 a_ij) s_ij s_ji,
//   p_ii = p_i^2 s_ii,       (p_i v_i^-1)^2 = 1
// are verified. With h_i = p_i v_i^-1:
//   beta(i,j)  = s_ji^-1 p_ji v^(-i.j),  alpha(i,j) = s_ij p_ij^-1
//   gamma(i,j) = s_ij^-1 h_i^(a_ij) s_ji | s_ii | p_ij p_j^(-a_ji) s_ji^-1
//                                      for j<i | j=i | j>i
// xi = s^-1 is attached when s is symmetric, else left absent.
AlgebraInstance preset_multi_super_I(const CartanDatum& dm, ParamTablePtr pt,
                                     std::vector<FieldElem> p_diag,
                                     FormTable p, FormTable s);

// Second multi-parameter super family: p~_i = v_i^2 throughout; input is
// the s~ table with s~_ii = p~_i^-1 and s~_ij s~_ji = p~_i^(-a_ij).
//   beta(i,j) = s~_ij v^(i.j),  alpha = s~,
//   gamma(i,j) = s~_ji | s~_ii^3 | v^(-i.j)   for j<i | j=i | j>i
// xi = s~^-1 is attached when s~ is symmetric, else left absent.
AlgebraInstance preset_multi_super_II(const CartanDatum& dm, ParamTablePtr pt,
                                      FormTable s_tilde);

// Ready-made data and instances used by the test suite and shipped as
// config files under configs/.
namespace canon {

CartanDatum a2();          // dot [[2,-1],[-1,2]]
CartanDatum b2();          // dot [[4,-2],[-2,2]]
CartanDatum a2_doubled();  // dot [[4,-2],[-2,4]], parity (0,0)
CartanDatum b2_super();    // b2 with parity (0,1)
CartanDatum a3();          // standard rank-3 chain
CartanDatum b3_super();    // dot [[4,-2,0],[-2,4,-2],[0,-2,2]], parity (0,0,1)

AlgebraInstance two_parameter_a2(bool alt_gamma = false);
AlgebraInstance two_parameter_b2(bool alt_gamma = false);
AlgebraInstance two_parameter_a3();
AlgebraInstance super_a2(bool alt_gamma = false);
AlgebraInstance super_b2(bool alt_gamma = false);
AlgebraInstance super_b3();
AlgebraInstance multi_parameter_a2();
AlgebraInstance multi_parameter_b2();
AlgebraInstance multi_super_i_a2();
AlgebraInstance multi_super_i_b2();
// Asymmetric s via genuine order-2 units h_i; no xi, twist checks only.
AlgebraInstance multi_super_i_b2_asym();
AlgebraInstance multi_super_ii_a2();
AlgebraInstance multi_super_ii_b2();

// The ten xi-carrying rank-2 instances (one pair per family), fixed order.
std::vector<AlgebraInstance> all_double_ready();

}  // namespace canon

}  // namespace fbeta
