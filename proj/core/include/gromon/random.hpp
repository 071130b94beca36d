#pragma once

// Seeded generators for test instances. Every generator draws only from the
// Rng it is given, so a fixed seed reproduces the same instance everywhere.

#include "gromon/euclidean.hpp"
#include "gromon/graph.hpp"
#include "gromon/numeric.hpp"
#include "gromon/types.hpp"

#include <vector>

namespace gromon {

/// A^T A + n * 1e-3 * I with A an n x n standard Gaussian table.
Matrix random_spd(std::size_t n, Rng& rng);

/// Shortest-path metric of a random connected graph: a random spanning tree
/// plus every other edge with probability 1/2, weights uniform in (0.5, 1.5].
Matrix random_metric(std::size_t n, Rng& rng);

/// Strictly positive probability vector; entries drawn from (0.1, 1] then normalized.
Vector random_weights(std::size_t n, Rng& rng);

/// Gaussian points (dim x n), uniform weights.
EuclideanCloud random_cloud(std::size_t n, std::size_t dim, Rng& rng);

/// Erdos-Renyi G(n, edge_probability).
Graph random_graph(std::size_t n, double edge_probability, Rng& rng);

/// Dense coupling from Sinkhorn scaling of a random positive kernel.
Coupling random_coupling(const Vector& source_weights, const Vector& target_weights, Rng& rng);

/// Haar-distributed orthogonal matrix; with proper_only the determinant is +1.
Matrix random_orthogonal(std::size_t dim, Rng& rng, bool proper_only = false);

/// Haar-distributed orthogonal rotation (reflections included) and a Gaussian translation.
Isometry random_isometry(std::size_t dim, Rng& rng);

/// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace gromon
