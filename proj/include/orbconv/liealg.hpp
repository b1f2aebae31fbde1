#pragma once

// Root data of so(p,p), su(p,p) and sp(p,p) with respect to the standard
// Cartan space, the matching root vectors, and the adjoint action of K on p.
//
// Index convention: all root indices are 0-based. Diff(i,j) is the root
// H_i - H_j, Sum(i,j) is H_i + H_j (both with i < j), Double(k) is 2 H_k.

#include "orbconv/types.hpp"

#include <string>
#include <vector>

namespace orbconv {

enum class RootKind { Diff, Sum, Double };

struct PositiveRoot {
    RootKind kind = RootKind::Diff;
    int i = 0;
    int j = 0;  // unused for Double
    int multiplicity = 1;

    static PositiveRoot diff(int i, int j, int mult = 1) { return {RootKind::Diff, i, j, mult}; }
    static PositiveRoot sum(int i, int j, int mult = 1) { return {RootKind::Sum, i, j, mult}; }
    static PositiveRoot twice(int k, int mult = 1) { return {RootKind::Double, k, k, mult}; }

    std::string str() const;  // 1-based, e.g. "H1-H2", "2H3"

    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

struct RootDatum {
    Space space = Space::RealD;
    int p = 0;
    std::vector<PositiveRoot> roots;

    int total_multiplicity() const;
};

RootDatum build_root_system(Space space, int p);

double root_value(const PositiveRoot& root, const CartanVector& h);

/// Root vectors X_alpha (2p x 2p, in g) spanning the root space of `root`.
/// RealD: Y+_{i,j} or Z+_{i,j}. ComplexC: additionally Y+_{i,j,C}, Z+_{i,j,C}
/// and X+_k for the double roots.
std::vector<Eigen::MatrixXcd> root_vectors(const PositiveRoot& root, Space space, int p);

/// theta(X) = -X^* (transpose for real matrices).
Eigen::MatrixXcd cartan_involution(const Eigen::MatrixXcd& x);

/// B-blocks of 1/2 (X_alpha - theta X_alpha), one per root vector.
std::vector<PVector> symmetrized_vectors(const PositiveRoot& root, Space space, int p);

/// X_alpha + theta X_alpha, the compact generators paired with the root.
std::vector<Eigen::MatrixXcd> compact_vectors(const PositiveRoot& root, Space space, int p);

/// B-block of the Cartan basis vector A_i (0-based).
PVector cartan_unit(int i, int p);

/// [[0, B], [B^*, 0]]
Eigen::MatrixXcd embed(const PVector& v);
/// diag(k1, k2)
Eigen::MatrixXcd embed(const KElement& k);
/// Upper-right block of a 2p x 2p matrix in p.
PVector block_of(const Eigen::MatrixXcd& m);

/// B -> k1 B k2^*
PVector adjoint_on_p(const KElement& k, const PVector& v);

KElement compose(const KElement& a, const KElement& b);

/// Real coordinates of v: p^2 entries (RealD) or 2p^2 entries with real and
/// imaginary parts interleaved row-major (ComplexC).
Eigen::VectorXd flatten(const PVector& v, Space space);

/// Basis of p: symmetrized vectors over all positive roots plus the diagonal
/// units (and their imaginary counterparts for ComplexC).
std::vector<PVector> p_basis(Space space, int p);

/// Basis of k as 2p x 2p matrices: so(p) + so(p) (RealD) or s(u(p) + u(p)) (ComplexC).
std::vector<Eigen::MatrixXcd> k_basis(Space space, int p);

// ---------------------------------------------------------------------------
// Exact oracles for the real space so(p,p).

/// Integer root vector Y+_{i,j} (is_sum == false) or Z+_{i,j}.
Eigen::MatrixXi real_root_vector(bool is_sum, int i, int j, int p);

enum class BracketCase { Disjoint, Equal, SameFirst, SameSecond, SecondIsFirst, FirstIsSecond };

std::string_view to_string(BracketCase c);

struct BracketResult {
    BracketCase tag;
    Eigen::MatrixXi matrix;     // [Z+_{i,j} + theta Z+_{i,j}, Z_{k,l}] computed over the integers
    Eigen::MatrixXi predicted;  // closed form for the case tag

    bool matches() const { return matrix == predicted; }
};

/// Commutator of the compact generator of Z+_{i,j} with the symmetrized
/// vector Z_{k,l}, together with its closed-form classification.
BracketResult bracket_oracle(int i, int j, int k, int l, int p);

struct RootVectorLabel {
    bool is_sum = false;  // false: Y+_{i,j}, true: Z+_{i,j}
    int i = 0;
    int j = 1;
};

/// Ad(exp(t (X_alpha + theta X_alpha))) applied to `target`, with the group
/// element obtained by a dense matrix exponential of the 2p x 2p generator.
PVector exp_adjoint_oracle(const RootVectorLabel& label, double t, const PVector& target);

}  // namespace orbconv
