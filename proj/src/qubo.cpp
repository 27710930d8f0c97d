#include "mclab/qubo.hpp"

#include <stdexcept>

namespace mclab {

QuboModel build_is_qubo(const Graph& g, double a, double b) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument(
            "build_is_qubo: penalties must satisfy b > a > 0, otherwise ground "
            "states may violate independence");
    QuboModel m;
    m.num_vars = g.vertex_count();
    m.linear.assign(m.num_vars, -a);
    m.quadratic.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) m.quadratic.push_back({u, v, b});
    m.penalty_a = a;
    m.penalty_b = b;
    return m;
}

QuboModel build_mc_qubo(const Graph& g, double a, double b) {
    return build_is_qubo(g.complement(), a, b);
}

double evaluate(const QuboModel& m, const Assignment& x) {
    if (static_cast<int>(x.size()) != m.num_vars)
        throw std::invalid_argument("evaluate: assignment length does not match num_vars");
    double energy = m.offset;
    for (int i = 0; i < m.num_vars; ++i)
        if (x[i]) energy += m.linear[i];
    for (const auto& t : m.quadratic)
        if (x[t.i] && x[t.j]) energy += t.coeff;
    return energy;
}

IsingModel qubo_to_ising(const QuboModel& m) {
    IsingModel ising;
    ising.num_vars = m.num_vars;
    ising.h.assign(m.num_vars, 0.0);
    ising.offset = m.offset;
    for (int i = 0; i < m.num_vars; ++i) {
        ising.h[i] += m.linear[i] / 2.0;
        ising.offset += m.linear[i] / 2.0;
    }
    ising.j.reserve(m.quadratic.size());
    for (const auto& t : m.quadratic) {
        ising.j.push_back({t.i, t.j, t.coeff / 4.0});
        ising.h[t.i] += t.coeff / 4.0;
        ising.h[t.j] += t.coeff / 4.0;
        ising.offset += t.coeff / 4.0;
    }
    return ising;
}

double ising_energy(const IsingModel& m, const std::vector<int>& spins) {
    if (static_cast<int>(spins.size()) != m.num_vars)
        throw std::invalid_argument("ising_energy: spin vector length does not match num_vars");
    double energy = m.offset;
    for (int i = 0; i < m.num_vars; ++i) energy += m.h[i] * spins[i];
    for (const auto& t : m.j) energy += t.coeff * spins[t.i] * spins[t.j];
    return energy;
}

std::vector<int> decode_vertex_set(const Assignment& x) {
    std::vector<int> set;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) set.push_back(static_cast<int>(i));
    return set;
}

namespace {

void check_in_range(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set member out of range");
}

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<int>& s) {
    check_in_range(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const std::vector<int>& s) {
    check_in_range(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

}  // namespace mclab
