#pragma once

// Concrete representations of Heisenberg algebras.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fockbridge/heisenberg.hpp"

namespace fockbridge {

/// Semi-infinite wedges v_{i_0} ^ v_{i_{-1}} ^ ..., indexed by the
/// partition lambda_{j+1} = i_{-j} + j.  Parameters a_k = 1, m = 1.
RepPtr fermionic_rep();

/// b_lambda(s) = (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l) for s in lambda, else 1.
Scalar macdonald_b(const Partition& lambda, Cell s);
/// (phi, psi) of a horizontal strip outer/inner; throws Error otherwise.
std::pair<Scalar, Scalar> macdonald_phi_psi(const SkewShape& shape);
/// U_k, D_k by the Pieri coefficients phi and psi; a_k = (1 - t^k)/(1 - q^k).
RepPtr macdonald_rep();

/// Disjoint union.  Throws Error when parameters or degree steps differ.
RepPtr direct_sum(std::vector<RepPtr> summands);
inline RepPtr direct_sum(RepPtr a, RepPtr b) { return direct_sum(std::vector<RepPtr>{std::move(a), std::move(b)}); }

/// Tensor product with the Leibniz action; parameters multiply by the number
/// of factors.  Throws Error when parameters or degree steps differ.
RepPtr tensor(std::vector<RepPtr> factors);
inline RepPtr tensor(RepPtr a, RepPtr b) { return tensor(std::vector<RepPtr>{std::move(a), std::move(b)}); }

/// The level-one Fock space at q = 1 for n >= 2: partitions, acted on through
/// their n-quotients as the n-fold tensor power of fermionic_rep().
RepPtr llt_q1_rep(int n);

/// Every coefficient of the action (and every parameter) specialized.
RepPtr specialized_rep(RepPtr rep, const Bindings& bindings);

/// The JSON matrix bundle:
///   {"degree_step": m, "params": [a_1, ...], "highest": label,
///    "degrees": [{"degree": d, "basis": [label, ...]}, ...],
///    "operators": [{"op": "U"|"D", "k": k, "from_degree": d,
///                   "matrix": [[entry, ...], ...]}, ...]}
/// Row i, column j of a matrix is <op v_j, v_i> with j running over the basis
/// of from_degree and i over the target degree.  Entries are scalar strings.
RepPtr bundle_from_json(const nlohmann::json& doc, std::string name = "bundle");
RepPtr load_bundle(const std::filesystem::path& path);
/// Exports U_k, D_k for k <= k_max between degrees min_degree..max_degree.
nlohmann::json export_bundle(const Rep& rep, int max_degree, int k_max);

}  // namespace fockbridge
