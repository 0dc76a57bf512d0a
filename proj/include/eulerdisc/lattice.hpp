#pragma once
//
// Integer point configurations, lattice volumes and face lattices.
//

#include "eulerdisc/combi.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eulerdisc::lattice {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

struct PointConfiguration {
    std::vector<IntVector> points;
    /// Empty, or one unique label per point.
    std::vector<std::string> labels;

    std::size_t ambient_dimension() const { return points.empty() ? 0 : points.front().size(); }
    /// Throws std::invalid_argument on ragged points or bad labels.
    void validate() const;
};

/// Columns e_i + e_j of A_G, one per edge in edge order, labelled "ij".
PointConfiguration edge_config(const combi::PatternGraph& g);

struct Normalized {
    int dimension = 0;
    /// Points in Z^dimension; the first point maps to the origin.
    std::vector<IntVector> points;
};

/// Coordinates with respect to a basis of the affine lattice spanned by the points.
Normalized lattice_normalize(const PointConfiguration& c);

/// Integer echelon (Hermite style) basis of the lattice spanned by the rows.
IntMatrix lattice_basis(const std::vector<IntVector>& rows);

/// Coordinates of v in an echelon basis; throws if v is not in the lattice.
IntVector lattice_coordinates(const IntMatrix& basis, const IntVector& v);

/// Exact determinant of a small integer matrix (fraction-free, overflow checked).
std::int64_t int_det(IntMatrix m);

/// Sum of |det| over a placing triangulation of points in Z^d; 0 if not full-dimensional.
std::int64_t lattice_volume(const std::vector<IntVector>& points, int d);

/// Normalized volume in the affine lattice of the configuration; 1 for a single point.
std::int64_t normalized_volume(const PointConfiguration& c);

struct FaceDescriptor {
    /// Functional in normalized coordinates, maximal (= offset) exactly on the members.
    IntVector functional;
    std::int64_t offset = 0;
    std::vector<std::size_t> members;
    int dimension = 0;
};

/// All nonempty proper faces of Conv(points), by dimension then member indices.
std::vector<FaceDescriptor> faces(const PointConfiguration& c, int max_dim = 8, std::size_t max_points = 20);

/// Face counts for dimensions 0 .. d-1.
std::vector<std::int64_t> f_vector(const PointConfiguration& c, int max_dim = 8, std::size_t max_points = 20);

/// A_{G/H}: surviving edges as sums of unit vectors on the surviving vertices.
PointConfiguration contracted_config(const combi::PatternGraph& g, const combi::PatternGraph& h);

/// vol({0} ∪ A_{G/H}) - vol(A_{G/H}) in the lattice spanned by A_{G/H}.
std::int64_t subdiagram_volume(const combi::PatternGraph& g, const combi::PatternGraph& h);

/// Bordered integer matrix: label header, one row per coordinate, one column per point.
std::string dump(const PointConfiguration& c);

} // namespace eulerdisc::lattice
