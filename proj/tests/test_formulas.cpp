#include <doctest.h>

#include <cmath>
#include <optional>

#include "ordconflict/formulas.hpp"
#include "oracles.hpp"

using namespace ordconflict;

namespace {

// The plain k >= |p|+2 table expressions, coded directly for the overlap
// test against the full-range piecewise forms.
std::optional<long long> table_direct_A(int row, Int p, long long k) {
    switch (row) {
        case 2: return p <= 0 ? 1 : binom2(k);
        case 3: return p <= 0 ? 1 : k - 1;
        case 4: return 1;
        case 5: return p <= -1 ? binom2(k + p) : binom2(k);
        case 6: return 1;
        case 7:
            if (p >= -1) return binom2(k);
            return (1 - p) % 2 + binom2(k - (1 - p + 1) / 2 + 1);
        case 8: return 1;
        case 9: return 1;
        case 10: return p <= 0 ? (k + p) * (k + p) / 4 : (k + 1) * (k + 1) / 4 - 1;
        case 11: return 1;
        case 12: return p > 0 ? std::optional<long long>(k - 1) : std::nullopt;
        case 13: return p > 0 ? 2 * k - 3 : (k - 1 + (1 - p) - 1) / (1 - p);
    }
    return std::nullopt;
}

std::optional<long long> table_direct_W(int row, Int p, long long k) {
    auto ceil_pos = [](long long a, long long b) { return (a + b - 1) / b; };
    switch (row) {
        case 2: return p <= 0 ? binom2(k) : 1;
        case 3: return p <= 0 ? binom2(k) : ceil_pos(k - 1, p);
        case 4: return p <= 1 ? binom2(k) : 1 + binom2(k - p + 1);
        case 5: return 1;
        case 6: return p <= 2 ? binom2(k) : p % 2 + binom2(k - (p + 1) / 2 + 1);
        case 7: return 1;
        case 8: return p <= 0 ? binom2(k) : ceil_pos(k - 1, p);
        case 9: return p <= 0 ? binom2(k) : ceil_pos(2 * k - 3, p);
        case 10: return p <= 0 ? k - 1 : ceil_pos(k - 1, p + 1);
        case 11: return p <= 1 ? binom2(k) : binom2(k - p + 2);
        case 12: return p > 0 ? ceil_pos(k - 1, p) : 2 * k - 3;
        case 13: return p > 0 ? std::optional<long long>(std::nullopt)
                              : std::optional<long long>(k - 1);
    }
    return std::nullopt;
}

std::vector<ConflictSpec> family_specs(Int p) {
    std::vector<ConflictSpec> out = invariant_sign_specs(p);
    out.push_back(shift_spec(p));
    out.push_back(nest_spec(p));
    return out;
}

}  // namespace

TEST_CASE("f is the largest k with binom2(k) <= x") {
    CHECK(f_largest_k(1) == 2);
    CHECK(f_largest_k(3) == 3);
    CHECK(f_largest_k(6) == 4);
    CHECK_THROWS_AS(f_largest_k(0), ValidationError);
    for (long long x = 1; x <= 5000; ++x) {
        long long f = f_largest_k(x);
        CHECK(f == oracles::loop_f(x));
        // footnote form: floor(sqrt(2x)), bumped when the next binomial fits
        long long r = static_cast<long long>(std::floor(std::sqrt(2.0 * static_cast<double>(x))));
        long long expect = x < binom2(r + 1) ? r : r + 1;
        CHECK(f == expect);
    }
}

TEST_CASE("closed forms on the worked examples") {
    FormulaResult a = closed_form_A(sign_spec(1, 0, -1, 0, 2), 5);
    CHECK(a.is_exact());
    CHECK(a.value == 4);
    CHECK(a.provenance == "table1.row3");
    FormulaResult w = closed_form_W(sign_spec(1, 0, -1, 0, 2), 5);
    CHECK(w.value == 2);

    CHECK(closed_form_W(sign_spec(-1, 1, -1, 1, 4), 5).value == 6);

    CHECK(closed_form_A(sign_spec(1, 0, 0, -1, 0), 4).value == 4);
    CHECK(closed_form_W(sign_spec(1, 0, 0, -1, 0), 4).value == 3);

    FormulaResult na = closed_form_A(nest_spec(1), 6);
    CHECK(na.value == 9);
    FormulaResult nw = closed_form_W(nest_spec(1), 6);
    REQUIRE(nw.kind == FormulaResult::Kind::Bounds);
    CHECK(nw.lower == Rational::of(6, 4));
    CHECK(nw.upper == Rational::whole(3));

    for (Int p : {-3, 0, 2}) {
        CHECK(closed_form_W(sign_spec(1, 1, 1, 1, p), 7).value == 1);
        CHECK(closed_form_A(sign_spec(1, 1, 1, 1, p), 7).value == 1);
    }
    CHECK_THROWS_AS(closed_form_A(nest_spec(1), 1), ValidationError);
}

TEST_CASE("general integer matrices use the coarse invariant conditions") {
    // m2+m4 > 0 pins A = 1 for every threshold; W follows only while
    // m2+m4 >= max(p,0).
    ConflictSpec g1{{{1, 2, -3, 0}}, 3};
    CHECK(closed_form_A(g1, 5).value == 1);
    CHECK(closed_form_W(g1, 5).kind == FormulaResult::Kind::Unknown);
    ConflictSpec g2{{{1, 2, -3, 0}}, 1};
    CHECK(closed_form_W(g2, 5).value == binom2(5));
    // two-row invariant matrices beyond shift/nest stay unknown
    ConflictSpec g3{{{1, 2, -3, 0}, {0, 2, 0, -2}}, 1};
    CHECK(closed_form_A(g3, 5).kind == FormulaResult::Kind::Unknown);
    CHECK(closed_form_W(g3, 5).kind == FormulaResult::Kind::Unknown);
    // mixed-sign row sums: W settles at 1, A does not
    ConflictSpec g4{{{1, 1, 1, 1}, {-1, -1, -1, -1}}, 0};
    CHECK(closed_form_W(g4, 5).value == 1);
    CHECK(closed_form_A(g4, 5).kind == FormulaResult::Kind::Unknown);
}

TEST_CASE("exact values stay within the general bounds") {
    for (Int p = -6; p <= 6; ++p)
        for (const ConflictSpec& spec : family_specs(p))
            for (long long k = 2; k <= 30; ++k) {
                FormulaResult a = closed_form_A(spec, k);
                FormulaResult w = closed_form_W(spec, k);
                if (a.is_exact()) {
                    CHECK(a.value >= 1);
                    CHECK(a.value <= binom2(k));
                }
                if (w.is_exact()) {
                    CHECK(w.value >= 1);
                    CHECK(w.value <= binom2(k));
                }
                if (a.kind == FormulaResult::Kind::Bounds) CHECK(rat_le(a.lower, a.upper));
                if (w.kind == FormulaResult::Kind::Bounds) CHECK(rat_le(w.lower, w.upper));
            }
}

TEST_CASE("closed forms are nondecreasing in k") {
    for (Int p = -6; p <= 6; ++p)
        for (const ConflictSpec& spec : family_specs(p))
            for (long long k = 2; k < 30; ++k) {
                FormulaResult a1 = closed_form_A(spec, k), a2 = closed_form_A(spec, k + 1);
                FormulaResult w1 = closed_form_W(spec, k), w2 = closed_form_W(spec, k + 1);
                if (a1.is_exact()) CHECK(a1.value <= a2.value);
                if (w1.is_exact()) CHECK(w1.value <= w2.value);
                if (a1.kind == FormulaResult::Kind::Bounds) {
                    CHECK(rat_le(a1.lower, a2.lower));
                    CHECK(rat_le(a1.upper, a2.upper));
                }
                if (w1.kind == FormulaResult::Kind::Bounds) {
                    CHECK(rat_le(w1.lower, w2.lower));
                    CHECK(rat_le(w1.upper, w2.upper));
                }
            }
}

TEST_CASE("piecewise forms agree with the plain table on k >= |p|+2") {
    for (Int p = -6; p <= 6; ++p)
        for (const ConflictSpec& spec : family_specs(p)) {
            int row = classify_matrix(spec).row;
            for (long long k = std::max<long long>(2, (p < 0 ? -p : p) + 2); k <= 30; ++k) {
                auto da = table_direct_A(row, p, k);
                auto dw = table_direct_W(row, p, k);
                FormulaResult a = closed_form_A(spec, k);
                FormulaResult w = closed_form_W(spec, k);
                if (da) {
                    REQUIRE(a.is_exact());
                    CHECK(a.value == *da);
                }
                if (dw) {
                    REQUIRE(w.is_exact());
                    CHECK(w.value == *dw);
                }
            }
        }
}

TEST_CASE("chromatic-threshold inverses on the worked examples") {
    FormulaResult xc = closed_form_X_cli(sign_spec(1, 0, -1, 0, 2), 3);
    CHECK(xc.is_exact());
    CHECK(xc.value == 7);  // pw+1

    FormulaResult xi = closed_form_X_ind(sign_spec(1, 0, 0, -1, 0), 5);
    CHECK(xi.value == 4);

    FormulaResult z = closed_form_X_ind(sign_spec(0, 0, 0, 0, 1), 6);
    CHECK(z.value == 4);  // f(6)

    CHECK(closed_form_X_ind(sign_spec(-1, 1, 0, 0, 2), 3).kind == FormulaResult::Kind::Infinite);
    CHECK(closed_form_X_cli(sign_spec(1, -1, 0, 0, -2), 3).kind == FormulaResult::Kind::Infinite);

    FormulaResult nb = closed_form_X_cli(nest_spec(2), 3);
    REQUIRE(nb.kind == FormulaResult::Kind::Bounds);
    CHECK(nb.lower == Rational::whole(2 * 2 * 3 + 1));
    CHECK(nb.upper == Rational::whole(4 * 2 * 3));
}

TEST_CASE("sup-inversion equals the directly coded inverse table") {
    for (Int p : {-4, -2, -1, 0, 1, 2, 4})
        for (const ConflictSpec& spec : family_specs(p))
            for (long long b = 1; b <= 24; ++b) {
                FormulaResult gi = closed_form_X_ind(spec, b), di = table2_X_ind(spec, b);
                FormulaResult gc = closed_form_X_cli(spec, b), dc = table2_X_cli(spec, b);
                REQUIRE(gi.kind == di.kind);
                REQUIRE(gc.kind == dc.kind);
                if (gi.is_exact()) CHECK(gi.value == di.value);
                if (gc.is_exact()) CHECK(gc.value == dc.value);
                if (gi.kind == FormulaResult::Kind::Bounds) {
                    CHECK(gi.lower == di.lower);
                    CHECK(gi.upper == di.upper);
                }
                if (gc.kind == FormulaResult::Kind::Bounds) {
                    CHECK(gc.lower == dc.lower);
                    CHECK(gc.upper == dc.upper);
                }
            }
}

TEST_CASE("complete graphs force the f lower bound on the inverses") {
    for (Int p = -4; p <= 4; ++p)
        for (const ConflictSpec& spec : family_specs(p))
            for (long long b : {1, 2, 5, 12, 30}) {
                long long fb = f_largest_k(b);
                FormulaResult xi = closed_form_X_ind(spec, b);
                FormulaResult xc = closed_form_X_cli(spec, b);
                if (xi.is_exact()) CHECK(xi.value >= fb);
                if (xi.kind == FormulaResult::Kind::Bounds) CHECK(rat_le(Rational::whole(fb), xi.lower));
                if (xc.is_exact()) CHECK(xc.value >= fb);
                if (xc.kind == FormulaResult::Kind::Bounds) CHECK(rat_le(Rational::whole(fb), xc.lower));
            }
}
