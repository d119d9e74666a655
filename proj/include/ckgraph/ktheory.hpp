#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckgraph/edge_operator.hpp"
#include "ckgraph/exact_linalg.hpp"
#include "ckgraph/multigraph.hpp"

namespace ckgraph {

/// Hypotheses under which the Cuntz-Krieger algebra of A is simple.
struct SimplicityFlags {
    bool irreducible = false;
    bool permutation = false;

    bool simple() const { return irreducible && !permutation; }
};

SimplicityFlags simplicity(const EdgeMatrix& m);

// Matrix-level computations. These take the edge matrix as given and apply no
// graph preconditions; the graph-level functions below wrap them.

/// Z^2m / (1 - Aᵗ)Z^2m.
AbelianGroup k0_of(const EdgeMatrix& m);
/// Z-basis of ker(1 - T), in Hermite normal form.
IntMatrix k1_basis_of(const EdgeMatrix& m);
/// Smallest λ > 0 with (1 - A)·x = λ·(1, ..., 1), with its witness x.
std::optional<ScalarSolution> unit_multiple_of(const EdgeMatrix& m);

/// The all-ones vector of length 2m: the class of the algebra unit in
/// Z^2m / (1 - Aᵗ)Z^2m.
IntVector unit_class_is_one_vector(const Multigraph& g);

/// Cokernel of 1 - Aᵗ, asserted equal to the cokernel of 1 - A.
/// Requires a connected graph with Betti number >= 1.
AbelianGroup k0(const Multigraph& g);

struct K1Result {
    std::size_t rank = 0;
    IntMatrix basis;  // rows span ker(1 - T), Hermite normal form
};

K1Result k1(const Multigraph& g);

/// φ(c) = Σ kᵢ·eᵢ - Σ kᵢ·ēᵢ for cycle coefficients kᵢ; verified to lie in
/// ker(1 - T). Throws DomainError if c is not a cycle.
IntVector phi(const Multigraph& g, const CycleVector& c);

/// HNF(φ(cycle basis)) == HNF(ker(1 - T)). Requires Betti number >= 2.
bool phi_image_equals_kernel(const Multigraph& g);

/// For Betti number 1: φ(c) for the fundamental cycle c, and c plus every
/// off-cycle edge oriented away from c.
std::pair<IntVector, IntVector> g1_kernel_generators(const Multigraph& g);

/// Elementary operations that take 1 - A to diagonal form by contracting the
/// non-loop edges one at a time and then reducing the remaining flower block.
struct ReductionTranscript {
    std::size_t genus = 0;
    std::size_t vertex_count = 0;
    IntMatrix start;  // 1 - A
    std::vector<ElementaryOp> ops;
    /// Original geometric edge indices in the order they were contracted.
    std::vector<std::size_t> contraction_order;
    /// Oriented edge indices in pivot order: contracted pairs (γ, γ̄), then
    /// the surviving loops a₁..a_g, then their reversals.
    std::vector<std::size_t> pivot_order;
    /// Diagonal of the final matrix, read in pivot order. Expected
    /// (1, ..., 1, g-1, 0, ..., 0).
    IntVector final_diagonal;
    /// Row operations applied to (1, ..., 1), read in pivot order. Expected
    /// (..., g·|V|, 0, ..., 0).
    IntVector unit_image;

    /// Applies every operation to `start`.
    IntMatrix replay() const;
    /// Applies every row operation to (1, ..., 1), returned in pivot order.
    IntVector replay_unit() const;
};

/// Lowest-index non-loop edge first; with a seed, a uniformly random non-loop
/// edge at each step instead.
ReductionTranscript contraction_reduce(const Multigraph& g,
                                       std::optional<std::uint64_t> shuffle_seed = std::nullopt);

std::string to_string(const ReductionTranscript& t);

/// (g - 1) / gcd(g - 1, n).
Integer closed_form_unit_order(std::size_t genus, std::size_t n);

struct UnitOrder {
    std::optional<Integer> order;  // absent for Betti number 1
    IntVector witness;             // (1 - A)·witness = order·(1, ..., 1)
    std::optional<Integer> closed_form;
};

/// Order of the unit class in K₀, from the linear system and (for g >= 2)
/// from the vertex-count formula; a disagreement throws TheoremViolation.
UnitOrder unit_order(const Multigraph& g);

/// Position of the unit inside the torsion summand Z/(g-1), as a residue.
struct TorsionClass {
    Integer modulus;
    Integer residue;
};

TorsionClass unit_torsion_class(const Multigraph& g);

enum class Verdict { Equivalent, NotEquivalent, Isomorphic, NotIsomorphic, Indeterminate };

std::string to_string(Verdict v);

struct GraphEvidence {
    std::size_t genus = 0;
    AbelianGroup k0;
    SimplicityFlags simplicity;
    std::optional<Integer> unit_order;
    IntVector unit_witness;
};

struct Classification {
    Verdict verdict;
    GraphEvidence first;
    GraphEvidence second;
    /// Set when a graph fails the simplicity hypotheses.
    bool simplicity_caveat = false;
    std::string reason;
};

/// Stable isomorphism (equivalently Morita equivalence): decided by g.
/// Throws DomainError unless both graphs have Betti number >= 2.
Classification classify_stable(const Multigraph& g1, const Multigraph& g2);

/// Strict isomorphism: same g and same unit order. Indeterminate when either
/// algebra fails the simplicity hypotheses.
Classification classify_strict(const Multigraph& g1, const Multigraph& g2);

/// gcd(g - 1, |V|) == 1, asserted equal to unit_order == g - 1.
bool boundary_algebra_compatible(const Multigraph& g);

struct KTheoryReport {
    std::size_t genus = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    AbelianGroup k0;
    std::size_t k1_rank = 0;
    IntMatrix k1_basis;
    UnitOrder unit;
    SimplicityFlags simplicity;
};

KTheoryReport ktheory_report(const Multigraph& g);

}  // namespace ckgraph
