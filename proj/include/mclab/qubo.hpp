#pragma once

#include <cstdint>
#include <vector>

#include "mclab/graph.hpp"

namespace mclab {

using Assignment = std::vector<std::uint8_t>;  // bits in {0,1}

struct QuadraticTerm {
    int i = 0;  // i < j always
    int j = 0;
    double coeff = 0.0;
    bool operator==(const QuadraticTerm&) const = default;
};

// Quadratic binary objective
//   H(x) = offset + sum_i linear[i] x_i + sum_{(i,j)} quadratic x_i x_j.
// Value type; treated as immutable once built.
struct QuboModel {
    int num_vars = 0;
    std::vector<double> linear;             // dense, size num_vars
    std::vector<QuadraticTerm> quadratic;   // sorted by (i,j), pairs unique
    double offset = 0.0;
    double penalty_a = 1.0;
    double penalty_b = 2.0;
};

// Spin objective over s_i in {-1,+1}:
//   E(s) = offset + sum_i h[i] s_i + sum_{(i,j)} j s_i s_j.
struct IsingModel {
    int num_vars = 0;
    std::vector<double> h;
    std::vector<QuadraticTerm> j;
    double offset = 0.0;
};

// H(x) = -a sum x_i + b sum_{(i,j) in E} x_i x_j. Ground states are the
// maximum independent sets of g when b > a > 0; throws std::invalid_argument
// otherwise.
QuboModel build_is_qubo(const Graph& g, double a = 1.0, double b = 2.0);

// IS model of the complement; ground states decode to maximum cliques of g.
QuboModel build_mc_qubo(const Graph& g, double a = 1.0, double b = 2.0);

// Exact in integer arithmetic when all coefficients are integral. Throws
// std::invalid_argument on length mismatch.
double evaluate(const QuboModel& m, const Assignment& x);

// Substitution x_i = (1 + s_i) / 2; energies agree pointwise.
IsingModel qubo_to_ising(const QuboModel& m);
double ising_energy(const IsingModel& m, const std::vector<int>& spins);

std::vector<int> decode_vertex_set(const Assignment& x);

// Validity checks for decoded solutions; s must be within range (throws
// std::invalid_argument otherwise). The empty set satisfies both.
bool is_independent_set(const Graph& g, const std::vector<int>& s);
bool is_clique(const Graph& g, const std::vector<int>& s);

}  // namespace mclab
