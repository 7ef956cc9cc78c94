#pragma once

#include <string>
#include <vector>

#include "ordconflict/core.hpp"

namespace ordconflict {

/// True iff every row of the matrix sums to zero, i.e. conflicts depend only
/// on relative positions, never on absolute coordinates.
bool is_translation_invariant(const ConflictSpec& spec);

/// Columns permuted (3,4,1,2): exchanges the roles of the two edges in the
/// conflict test. Produces the identical conflict graph on every graph.
ConflictSpec swap_edge_roles(const ConflictSpec& spec);

/// Columns reversed, all entries negated. The conflict graph of the result on
/// the mirrored graph -G is isomorphic to the original's on G under e -> e-.
ConflictSpec reverse_negate(const ConflictSpec& spec);

/// For a one-row matrix (m1..m4) at threshold p: the two-row matrix
/// ((-m1,-m2,-m3,-m4),(-m3,-m4,-m1,-m2)) at threshold 1-p, whose conflict
/// graph is the exact complement of the original's on every graph.
ConflictSpec complement_spec(const ConflictSpec& spec);

ConflictSpec shift_spec(Int p);
ConflictSpec nest_spec(Int p);

/// The complementary pair: nest at threshold p against shift at 1-p.
struct NestShiftPair {
    ConflictSpec shift;
    ConflictSpec nest;
};
NestShiftPair nest_shift_pair(Int p);

enum class Transform { ReverseNegate, SwapEdgeRoles };
std::string transform_name(Transform t);

struct MatrixClass {
    enum class Tag {
        NonInvariantPositive,   // all row sums > 0
        NonInvariantNegative,   // all row sums < 0
        NonInvariantMixed,      // row sums nonzero in mixed/partial signs
        Zero,                   // row 2
        TableRow,               // rows 3..11, one-row sign matrices
        Shift,                  // row 12
        Nest,                   // row 13
        GeneralInvariant,       // translation invariant, no closed-form row
    };
    Tag tag = Tag::GeneralInvariant;
    int row = 0;  // 1..13 when meaningful, else 0
    ConflictSpec representative;
    std::vector<Transform> trace;  // applying these to the input yields the representative
};

/// Normalizes sign matrices to the canonical representative of their formula
/// row via swap_edge_roles / reverse_negate; ties between valid transform
/// paths are broken by lexicographically smallest trace.
MatrixClass classify_matrix(const ConflictSpec& spec);

/// The canonical representative one-row sign matrix of each row 3..11.
ConflictSpec table_row_representative(int row, Int p);

/// All 19 translation-invariant one-row sign matrices, in row order.
std::vector<ConflictSpec> invariant_sign_specs(Int p);

}  // namespace ordconflict
