#include "ordconflict/transforms.hpp"

#include <algorithm>
#include <array>

namespace ordconflict {

namespace {

using Row = std::array<Int, 4>;

Row swap_row(const Row& r) { return Row{r[2], r[3], r[0], r[1]}; }
Row revneg_row(const Row& r) { return Row{-r[3], -r[2], -r[1], -r[0]}; }

std::vector<Row> sorted_rows(const ConflictSpec& s) {
    std::vector<Row> rows = s.matrix;
    std::sort(rows.begin(), rows.end());
    return rows;
}

// Starred representatives of the one-row sign-matrix rows, indexed 3..11.
constexpr std::array<Row, 9> kRowStars = {{
    {1, 0, -1, 0},    // row 3: left endpoints at distance >= p
    {-1, 1, 0, 0},    // row 4: some edge of length >= p
    {1, -1, 0, 0},    // row 5: some edge of length <= -p
    {-1, 1, -1, 1},   // row 6: lengths sum to >= p
    {1, -1, 1, -1},   // row 7: lengths sum to <= -p
    {1, -1, -1, 1},   // row 8: lengths differ by >= p
    {1, 1, -1, -1},   // row 9: midpoints at distance >= p/2
    {1, 0, 0, -1},    // row 10: spans disjoint, >= p apart
    {-1, 0, 0, 1},    // row 11: right end of one >= p beyond left end of the other
}};

}  // namespace

bool is_translation_invariant(const ConflictSpec& spec) {
    for (const auto& r : spec.matrix)
        if (r[0] + r[1] + r[2] + r[3] != 0) return false;
    return true;
}

ConflictSpec swap_edge_roles(const ConflictSpec& spec) {
    ConflictSpec out = spec;
    for (auto& r : out.matrix) r = swap_row(r);
    return out;
}

ConflictSpec reverse_negate(const ConflictSpec& spec) {
    ConflictSpec out = spec;
    for (auto& r : out.matrix) r = revneg_row(r);
    return out;
}

ConflictSpec complement_spec(const ConflictSpec& spec) {
    if (spec.rows() != 1) throw ValidationError("complement_spec requires a one-row matrix");
    const Row& r = spec.matrix[0];
    Row neg{-r[0], -r[1], -r[2], -r[3]};
    return ConflictSpec{{neg, swap_row(neg)}, 1 - spec.p};
}

ConflictSpec shift_spec(Int p) { return ConflictSpec{{{1, 0, -1, 0}, {0, 1, 0, -1}}, p}; }
ConflictSpec nest_spec(Int p) { return ConflictSpec{{{1, 0, -1, 0}, {0, -1, 0, 1}}, p}; }

NestShiftPair nest_shift_pair(Int p) { return NestShiftPair{shift_spec(1 - p), nest_spec(p)}; }

std::string transform_name(Transform t) {
    return t == Transform::ReverseNegate ? "reverse_negate" : "swap_edge_roles";
}

MatrixClass classify_matrix(const ConflictSpec& spec) {
    MatrixClass cls;
    cls.representative = spec;

    bool any_pos = false, any_neg = false, any_zero = false;
    for (const auto& r : spec.matrix) {
        Int s = r[0] + r[1] + r[2] + r[3];
        (s > 0 ? any_pos : s < 0 ? any_neg : any_zero) = true;
    }
    if (any_pos || any_neg) {
        cls.row = 1;
        cls.tag = (!any_neg && !any_zero)  ? MatrixClass::Tag::NonInvariantPositive
                  : (!any_pos && !any_zero) ? MatrixClass::Tag::NonInvariantNegative
                                            : MatrixClass::Tag::NonInvariantMixed;
        return cls;
    }

    // Candidate traces in lexicographic order ("reverse_negate" < "swap_edge_roles").
    const std::array<std::vector<Transform>, 4> traces = {{
        {},
        {Transform::ReverseNegate},
        {Transform::ReverseNegate, Transform::SwapEdgeRoles},
        {Transform::SwapEdgeRoles},
    }};
    auto apply_trace = [&](const std::vector<Transform>& tr) {
        ConflictSpec s = spec;
        for (Transform t : tr)
            s = (t == Transform::ReverseNegate) ? reverse_negate(s) : swap_edge_roles(s);
        return s;
    };

    if (spec.rows() == 1) {
        const Row& r = spec.matrix[0];
        if (r == Row{0, 0, 0, 0}) {
            cls.tag = MatrixClass::Tag::Zero;
            cls.row = 2;
            return cls;
        }
        bool sign = std::all_of(r.begin(), r.end(), [](Int m) { return m >= -1 && m <= 1; });
        if (sign) {
            for (const auto& tr : traces) {
                ConflictSpec cand = apply_trace(tr);
                for (size_t i = 0; i < kRowStars.size(); ++i) {
                    if (cand.matrix[0] == kRowStars[i]) {
                        cls.tag = MatrixClass::Tag::TableRow;
                        cls.row = static_cast<int>(i) + 3;
                        cls.representative = cand;
                        cls.trace = tr;
                        return cls;
                    }
                }
            }
            // Unreachable: the 19 invariant sign matrices are exactly rows 2-11.
        }
        cls.tag = MatrixClass::Tag::GeneralInvariant;
        return cls;
    }

    if (spec.rows() == 2) {
        auto shift_rows = sorted_rows(shift_spec(spec.p));
        auto nest_rows = sorted_rows(nest_spec(spec.p));
        for (const auto& tr : traces) {
            ConflictSpec cand = apply_trace(tr);
            auto rows = sorted_rows(cand);
            if (rows == shift_rows || rows == nest_rows) {
                bool is_shift = rows == shift_rows;
                cls.tag = is_shift ? MatrixClass::Tag::Shift : MatrixClass::Tag::Nest;
                cls.row = is_shift ? 12 : 13;
                cls.representative = is_shift ? shift_spec(spec.p) : nest_spec(spec.p);
                cls.trace = tr;
                return cls;
            }
        }
    }

    cls.tag = MatrixClass::Tag::GeneralInvariant;
    return cls;
}

ConflictSpec table_row_representative(int row, Int p) {
    if (row < 3 || row > 11) throw ValidationError("no one-row representative for that row");
    return ConflictSpec{{kRowStars[static_cast<size_t>(row - 3)]}, p};
}

std::vector<ConflictSpec> invariant_sign_specs(Int p) {
    std::vector<ConflictSpec> out;
    for (int m1 = -1; m1 <= 1; ++m1)
        for (int m2 = -1; m2 <= 1; ++m2)
            for (int m3 = -1; m3 <= 1; ++m3)
                for (int m4 = -1; m4 <= 1; ++m4)
                    if (m1 + m2 + m3 + m4 == 0) out.push_back(sign_spec(m1, m2, m3, m4, p));
    std::sort(out.begin(), out.end(), [](const ConflictSpec& a, const ConflictSpec& b) {
        auto ca = classify_matrix(a), cb = classify_matrix(b);
        if (ca.row != cb.row) return ca.row < cb.row;
        return a.matrix < b.matrix;
    });
    return out;
}

}  // namespace ordconflict
