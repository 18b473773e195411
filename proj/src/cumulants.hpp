#pragma once

// Set-partition combinatorics, joint cumulants, and the symbolic assembly of
// the exact free-energy cumulant formulas.
//
// The k-th cumulant identity being assembled reads, for k >= 2,
//
//   kappa_k(log Z) + n*(-1)^(k-1) psi_{k-1}(theta) + t*delta_{k,2}
//     = sum_pi (|pi|-1)! (-1)^|pi| sum_{j=1}^{k-1} C(k,j)
//         prod_{B in pi} E[(centered log Z)^{a_{j,B}} H_{b_{j,B},t}(B_0(t))],
//
// where pi runs over partitions of {1..k} with no singleton block and no
// block contained in {j+1..k}, a_{j,B} = |B n {1..j}| and b_{j,B} = |B| - a_{j,B}.
// Each Hermite-side factor expands into expectations of products of quenched
// cumulants of s_0^+ via Gaussian integration by parts, with the convention
// that a kappa_0 slot stands for the centered free energy itself.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace oy {

struct SetPartition {
    int k = 0;
    std::vector<std::vector<int>> blocks;  // 1-based indices, disjoint, covering {1..k}
};

/// Calls `visit` once per partition of {1..k}, enumerated via restricted
/// growth strings. k is capped at 10 (Bell(10) = 115975).
void enumerate_partitions(int k, const std::function<void(const SetPartition&)>& visit);

/// Joint cumulant kappa(X_1..X_k) from a moment oracle over index subsets:
/// sum over partitions of (|pi|-1)! (-1)^(|pi|-1) prod_B E[prod_{i in B} X_i].
double joint_cumulant(const std::function<double(const std::vector<int>&)>& moment_oracle,
                      int k);

struct BlockFactor {
    int a = 0;  // power of the centered free energy
    int b = 0;  // Hermite order
};

struct FormulaTerm {
    int j = 0;
    SetPartition partition;
    std::int64_t coefficient = 0;  // (|pi|-1)! (-1)^|pi| C(k,j)
    std::vector<BlockFactor> factors;
};

/// Full surviving term list of the order-k identity, 2 <= k <= 6.
std::vector<FormulaTerm> build_theorem_rhs(int k);

/// One term of the expansion of E[(centered log Z)^a H_{b,t}(B_0(t))] into
/// quenched-cumulant products: coefficient * E[prod_i kappa_{ell_i}(s_0^+)],
/// where ell has exactly `a` slots summing to b and ell_i = 0 denotes a
/// centered-free-energy factor.
struct HermiteExpansionTerm {
    std::int64_t coefficient = 0;  // (-1)^b * b! / prod(ell_i!)
    std::vector<int> ells;
};

std::vector<HermiteExpansionTerm> hermite_to_quenched(int a, int b);

// Normal form for quenched-side polynomials: a monomial is a product of
// expectation atoms; an atom E[A^z * prod kappa_{ell}] is keyed by z (the
// number of kappa_0 slots) and the sorted list of positive orders.
struct QuenchedAtom {
    int z = 0;
    std::vector<int> ells;  // sorted ascending, all >= 1
    auto operator<=>(const QuenchedAtom&) const = default;
};
using QuenchedMonomial = std::vector<QuenchedAtom>;  // sorted
using QuenchedPolynomial = std::map<QuenchedMonomial, std::int64_t>;

/// build_theorem_rhs(k) with every Hermite-side factor expanded through
/// hermite_to_quenched, collected in normal form.
QuenchedPolynomial theorem_rhs_as_quenched(int k);

/// Hand-assembled closed forms of the k = 3 and k = 4 identities in the same
/// normal form (for the symbolic cross-check).
QuenchedPolynomial closed_form_quenched(int k);

/// Human-readable dump of a term list for audit.
std::string dump_terms(std::span<const FormulaTerm> terms);

struct KStatistics {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
    bool degenerate = false;  // all samples equal
};

/// Unbiased population cumulant estimates through order 4; requires more than
/// four samples for k4 to be defined.
KStatistics k_statistics(std::span<const double> samples);

std::int64_t bell_number(int k);

}  // namespace oy
