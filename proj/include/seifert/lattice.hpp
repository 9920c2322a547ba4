#pragma once

// Intersection lattices and the diagonal-embedding obstruction.
//
// An embedding of a negative definite lattice L into D_m = (Z^m, m(-1)) sends
// each basis vector v with v.v = -s to an integer vector of squared length s,
// so it touches at most s coordinates. Dropping unused coordinates, any
// embedding lives in D_m with m <= sum |v_i.v_i|; searching that bound
// exhaustively decides embeddability into every D_m at once.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace seifert {

using GramMatrix = std::vector<std::vector<std::int64_t>>;

struct Lattice {
    GramMatrix gram;
    std::size_t rank() const { return gram.size(); }
};

struct DiagonalEmbedding {
    std::size_t dimension = 0;                         // m
    std::vector<std::vector<std::int64_t>> vectors;    // one row per basis vector, length m
};

struct EmbeddingSearch {
    std::optional<DiagonalEmbedding> embedding;
    std::uint64_t nodes = 0;        // partial assignments visited
    std::size_t column_bound = 0;   // sum of |gram_ii|
};

struct ObstructionReport {
    long g = 0;
    long d = 0;
    long q = 0;
    Lattice lattice;
    EmbeddingSearch search;
    /// True iff the search certified that Lambda_q embeds in no D_m.
    bool obstruction_holds = false;
};

/// Basis e1-e2, ..., e_{2q-1}-e_{2q}, h-e1-...-eq of (Z^{1+2q}, <1> + 2q<-1>).
/// Throws Error(DegenerateLattice) for q <= 1.
Lattice lambda_q(long q);

bool is_negative_definite(const GramMatrix& gram);

/// Pairing under m(-1): -sum x_i y_i.
std::int64_t diagonal_pairing(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y);

/// True iff the rows reproduce `gram` under m(-1).
bool verify_embedding(const GramMatrix& gram, const DiagonalEmbedding& e);

/// Exhaustive search with column-symmetry pruning. Returns the first
/// embedding in search order, which is the lexicographically least
/// canonical representative. Throws Error(NotNegativeDefinite).
EmbeddingSearch search_diagonal_embedding(const Lattice& lattice);

std::optional<DiagonalEmbedding> embeds_in_diagonal(const Lattice& lattice);

/// Runs the search on Lambda_{d+2} for the d of d_range(g).
/// Throws Error(NoValidD) when no such d exists.
ObstructionReport nonfillability_obstruction(long g);

}  // namespace seifert
