#include "ordconflict/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ordconflict {

namespace {

long long ceil_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

long long isqrt64(long long x) {
    if (x < 0) throw ValidationError("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// f extended to x = 0 (largest k with binom2(k) <= 0 is 1), needed by a few
// inverse-table entries at their smallest arguments.
long long f0(long long x) { return x == 0 ? 1 : f_largest_k(x); }

std::string row_tag(int row) { return "table1.row" + std::to_string(row); }
std::string row2_tag(int row) { return "table2.row" + std::to_string(row); }

struct Thm1Conditions {
    bool complete_always = false;  // conflict graph complete on every graph
    bool empty_always = false;     // conflict graph empty on every graph
    bool alpha_one = false;        // some embedding forces a complete conflict graph
    bool omega_one = false;        // some embedding forces an empty conflict graph
};

Thm1Conditions invariant_conditions(const ConflictSpec& spec) {
    Thm1Conditions c;
    if (spec.rows() != 1) return c;
    Int m1 = spec.matrix[0][0], m2 = spec.matrix[0][1];
    Int m3 = spec.matrix[0][2], m4 = spec.matrix[0][3];
    Int p = spec.p;
    c.complete_always = m2 + m4 >= std::max<Int>(p, 0);
    c.empty_always = (m1 + m2 == 0) && (m3 + m4 == 0) && m2 <= 0 && m4 <= 0 && p > m2 + m4;
    c.alpha_one = c.complete_always || (m2 + m4 > 0) || (m2 + m4 == 0 && m1 != 0 && m2 != 0);
    c.omega_one = c.empty_always || (m2 < 0 && m4 < 0);
    return c;
}

}  // namespace

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

bool rat_le(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

std::string rat_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

FormulaResult FormulaResult::exact(long long v, std::string prov) {
    FormulaResult r;
    r.kind = Kind::Exact;
    r.value = v;
    r.provenance = std::move(prov);
    return r;
}
FormulaResult FormulaResult::bounds(Rational lo, Rational hi, std::string prov) {
    FormulaResult r;
    r.kind = Kind::Bounds;
    r.lower = lo;
    r.upper = hi;
    r.provenance = std::move(prov);
    return r;
}
FormulaResult FormulaResult::infinite(std::string prov) {
    FormulaResult r;
    r.kind = Kind::Infinite;
    r.provenance = std::move(prov);
    return r;
}
FormulaResult FormulaResult::unknown(std::string prov) {
    FormulaResult r;
    r.kind = Kind::Unknown;
    r.provenance = std::move(prov);
    return r;
}

bool FormulaResult::admits(long long v) const {
    switch (kind) {
        case Kind::Exact: return v == value;
        case Kind::Bounds: return rat_le(lower, Rational::whole(v)) && rat_le(Rational::whole(v), upper);
        case Kind::Infinite: return false;
        case Kind::Unknown: return true;
    }
    return false;
}

long long binom2(long long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

long long f_largest_k(long long x) {
    if (x < 1) throw ValidationError("f(x) needs x >= 1");
    long long k = isqrt64(2 * x);
    while (binom2(k + 1) <= x) ++k;
    while (binom2(k) > x) --k;
    return k;
}

FormulaResult closed_form_A(const MatrixClass& cls, Int p, long long k) {
    if (k < 2) throw ValidationError("A(M,p,k) needs k >= 2");
    using Tag = MatrixClass::Tag;
    switch (cls.tag) {
        case Tag::NonInvariantPositive:
        case Tag::NonInvariantNegative:
            return FormulaResult::exact(1, row_tag(1));
        case Tag::NonInvariantMixed:
            return FormulaResult::unknown(row_tag(1));
        case Tag::Zero:
            return FormulaResult::exact(p <= 0 ? 1 : binom2(k), row_tag(2));
        case Tag::TableRow:
            break;
        case Tag::Shift:
            if (p >= 1) return FormulaResult::exact(k - 1, row_tag(12));
            return FormulaResult::bounds(Rational::of(k, 4 * (1 - p)),
                                         Rational::whole(ceil_div(k - 1, 2 * (1 - p))), row_tag(12));
        case Tag::Nest:
            if (p >= 1) return FormulaResult::exact(2 * k - 3, row_tag(13));
            return FormulaResult::exact(ceil_div(k - 1, 1 - p), row_tag(13));
        case Tag::GeneralInvariant: {
            auto c = invariant_conditions(cls.representative);
            if (c.alpha_one) return FormulaResult::exact(1, "invariant.alpha-one");
            if (c.empty_always) return FormulaResult::exact(binom2(k), "invariant.empty");
            return FormulaResult::unknown("unclassified");
        }
    }
    switch (cls.row) {
        case 3:
            return FormulaResult::exact(p >= 1 ? k - 1 : 1, row_tag(3));
        case 4:
            return FormulaResult::exact(1, row_tag(4));
        case 5:
            if (p >= 0) return FormulaResult::exact(binom2(k), row_tag(5));
            return FormulaResult::exact(k <= -p + 1 ? 1 : binom2(k + p), row_tag(5));
        case 6:
            return FormulaResult::exact(1, row_tag(6));
        case 7: {
            if (p >= -1) return FormulaResult::exact(binom2(k), row_tag(7));
            long long q = ceil_div(1 - p, 2);
            long long v = k <= q ? 1 : (1 - p) % 2 + binom2(k - q + 1);
            return FormulaResult::exact(v, row_tag(7));
        }
        case 8:
            return FormulaResult::exact(1, row_tag(8));
        case 9:
            return FormulaResult::exact(1, row_tag(9));
        case 10:
            if (p >= 1) return FormulaResult::exact((k + 1) * (k + 1) / 4 - 1, row_tag(10));
            return FormulaResult::exact(k <= -p + 1 ? 1 : (k + p) * (k + p) / 4, row_tag(10));
        case 11:
            return FormulaResult::exact(1, row_tag(11));
        default:
            return FormulaResult::unknown("unclassified");
    }
}

FormulaResult closed_form_W(const MatrixClass& cls, Int p, long long k) {
    if (k < 2) throw ValidationError("W(M,p,k) needs k >= 2");
    using Tag = MatrixClass::Tag;
    switch (cls.tag) {
        case Tag::NonInvariantPositive:
        case Tag::NonInvariantNegative:
        case Tag::NonInvariantMixed:
            return FormulaResult::exact(1, row_tag(1));
        case Tag::Zero:
            return FormulaResult::exact(p <= 0 ? binom2(k) : 1, row_tag(2));
        case Tag::TableRow:
            break;
        case Tag::Shift:
            if (p >= 1) return FormulaResult::exact(ceil_div(k - 1, p), row_tag(12));
            return FormulaResult::exact(2 * k - 3, row_tag(12));
        case Tag::Nest:
            if (p >= 1)
                return FormulaResult::bounds(Rational::of(k, 4 * p),
                                             Rational::whole(ceil_div(k - 1, 2 * p)), row_tag(13));
            return FormulaResult::exact(k - 1, row_tag(13));
        case Tag::GeneralInvariant: {
            auto c = invariant_conditions(cls.representative);
            if (c.omega_one) return FormulaResult::exact(1, "invariant.omega-one");
            if (c.complete_always) return FormulaResult::exact(binom2(k), "invariant.complete");
            return FormulaResult::unknown("unclassified");
        }
    }
    switch (cls.row) {
        case 3:
            return FormulaResult::exact(p >= 1 ? ceil_div(k - 1, p) : binom2(k), row_tag(3));
        case 4:
            if (p <= 1) return FormulaResult::exact(binom2(k), row_tag(4));
            return FormulaResult::exact(k <= p ? 1 : 1 + binom2(k - p + 1), row_tag(4));
        case 5:
            return FormulaResult::exact(1, row_tag(5));
        case 6: {
            if (p <= 2) return FormulaResult::exact(binom2(k), row_tag(6));
            long long q = ceil_div(p, 2);
            long long v = k <= q ? 1 : p % 2 + binom2(k - q + 1);
            return FormulaResult::exact(v, row_tag(6));
        }
        case 7:
            return FormulaResult::exact(1, row_tag(7));
        case 8:
            return FormulaResult::exact(p <= 0 ? binom2(k) : ceil_div(k - 1, p), row_tag(8));
        case 9:
            return FormulaResult::exact(p <= 0 ? binom2(k) : ceil_div(2 * k - 3, p), row_tag(9));
        case 10:
            return FormulaResult::exact(p >= 1 ? ceil_div(k - 1, p + 1) : k - 1, row_tag(10));
        case 11:
            if (p <= 1) return FormulaResult::exact(binom2(k), row_tag(11));
            return FormulaResult::exact(k <= p ? 1 : binom2(k - p + 2), row_tag(11));
        default:
            return FormulaResult::unknown("unclassified");
    }
}

FormulaResult closed_form_A(const ConflictSpec& spec, long long k) {
    MatrixClass cls = classify_matrix(spec);
    return closed_form_A(cls, spec.p, k);
}

FormulaResult closed_form_W(const ConflictSpec& spec, long long k) {
    MatrixClass cls = classify_matrix(spec);
    return closed_form_W(cls, spec.p, k);
}

namespace {

// sup{k >= 2 : value(k) <= bound} for a family that is nondecreasing in k.
// The cap comfortably exceeds the largest feasible k of every implemented
// family; a family still at value 1 there has value 1 for all k.
template <typename Eval>
FormulaResult invert_sup(Eval&& eval, Int p, long long bound, const std::string& prov) {
    FormulaResult probe = eval(2);
    if (probe.kind == FormulaResult::Kind::Unknown) return FormulaResult::unknown(prov);
    long long abs_p = p < 0 ? -p : p;
    long long cap = (abs_p + 2) * (4 * std::max<long long>(bound, 1) + 8) + 16;
    Rational b = Rational::whole(bound);

    if (probe.kind == FormulaResult::Kind::Exact) {
        long long last_ok = 0;
        FormulaResult at_cap = probe;
        for (long long k = 2; k <= cap; ++k) {
            at_cap = eval(k);
            if (at_cap.value <= bound)
                last_ok = k;
            else
                return FormulaResult::exact(last_ok, prov);
        }
        if (at_cap.value == 1) return FormulaResult::infinite(prov);
        return FormulaResult::unknown(prov);
    }

    // Bounded family: feasibility certified through the upper bound, ruled
    // out through the lower bound.
    long long lo_ok = 0, hi_ok = 0;
    for (long long k = 2; k <= cap; ++k) {
        FormulaResult v = eval(k);
        if (rat_le(v.upper, b)) lo_ok = k;
        if (rat_le(v.lower, b))
            hi_ok = k;
        else
            break;
    }
    return FormulaResult::bounds(Rational::whole(lo_ok), Rational::whole(hi_ok), prov);
}

}  // namespace

FormulaResult closed_form_X_ind(const ConflictSpec& spec, long long a) {
    if (a < 1) throw ValidationError("X_ind needs a >= 1");
    MatrixClass cls = classify_matrix(spec);
    std::string prov = cls.row > 0 ? row2_tag(cls.row) : "table2.general";
    return invert_sup([&](long long k) { return closed_form_A(cls, spec.p, k); }, spec.p, a, prov);
}

FormulaResult closed_form_X_cli(const ConflictSpec& spec, long long w) {
    if (w < 1) throw ValidationError("X_cli needs w >= 1");
    MatrixClass cls = classify_matrix(spec);
    std::string prov = cls.row > 0 ? row2_tag(cls.row) : "table2.general";
    return invert_sup([&](long long k) { return closed_form_W(cls, spec.p, k); }, spec.p, w, prov);
}

FormulaResult table2_X_ind(const ConflictSpec& spec, long long a) {
    if (a < 1) throw ValidationError("X_ind needs a >= 1");
    MatrixClass cls = classify_matrix(spec);
    Int p = spec.p;
    using Tag = MatrixClass::Tag;
    switch (cls.tag) {
        case Tag::NonInvariantPositive:
        case Tag::NonInvariantNegative:
            return FormulaResult::infinite(row2_tag(1));
        case Tag::NonInvariantMixed:
            return FormulaResult::unknown(row2_tag(1));
        case Tag::Zero:
            if (p <= 0) return FormulaResult::infinite(row2_tag(2));
            return FormulaResult::exact(f_largest_k(a), row2_tag(2));
        case Tag::Shift:
            if (p >= 1) return FormulaResult::exact(a + 1, row2_tag(12));
            return FormulaResult::bounds(Rational::whole(2 * (1 - p) * a + 1),
                                         Rational::whole(4 * (1 - p) * a), row2_tag(12));
        case Tag::Nest:
            if (p >= 1) return FormulaResult::exact((a + 3) / 2, row2_tag(13));
            return FormulaResult::exact((1 - p) * a + 1, row2_tag(13));
        case Tag::GeneralInvariant: {
            auto c = invariant_conditions(cls.representative);
            if (c.alpha_one) return FormulaResult::infinite("invariant.alpha-one");
            if (c.empty_always) return FormulaResult::exact(f_largest_k(a), "invariant.empty");
            return FormulaResult::unknown("unclassified");
        }
        case Tag::TableRow:
            break;
    }
    switch (cls.row) {
        case 3:
            if (p <= 0) return FormulaResult::infinite(row2_tag(3));
            return FormulaResult::exact(a + 1, row2_tag(3));
        case 4:
            return FormulaResult::infinite(row2_tag(4));
        case 5:
            if (p <= -1) return FormulaResult::exact(f_largest_k(a) - p, row2_tag(5));
            return FormulaResult::exact(f_largest_k(a), row2_tag(5));
        case 6:
            return FormulaResult::infinite(row2_tag(6));
        case 7: {
            if (p >= -1) return FormulaResult::exact(f_largest_k(a), row2_tag(7));
            long long parity = (1 - p) % 2;
            return FormulaResult::exact(f0(a - parity) + ceil_div(-(p + 1), 2), row2_tag(7));
        }
        case 8:
            return FormulaResult::infinite(row2_tag(8));
        case 9:
            return FormulaResult::infinite(row2_tag(9));
        case 10:
            if (p <= 0) return FormulaResult::exact(isqrt64(4 * a + 3) - p, row2_tag(10));
            return FormulaResult::exact(isqrt64(4 * a + 7) - 1, row2_tag(10));
        case 11:
            return FormulaResult::infinite(row2_tag(11));
        default:
            return FormulaResult::unknown("unclassified");
    }
}

FormulaResult table2_X_cli(const ConflictSpec& spec, long long w) {
    if (w < 1) throw ValidationError("X_cli needs w >= 1");
    MatrixClass cls = classify_matrix(spec);
    Int p = spec.p;
    using Tag = MatrixClass::Tag;
    switch (cls.tag) {
        case Tag::NonInvariantPositive:
        case Tag::NonInvariantNegative:
        case Tag::NonInvariantMixed:
            return FormulaResult::infinite(row2_tag(1));
        case Tag::Zero:
            if (p <= 0) return FormulaResult::exact(f_largest_k(w), row2_tag(2));
            return FormulaResult::infinite(row2_tag(2));
        case Tag::Shift:
            if (p >= 1) return FormulaResult::exact(p * w + 1, row2_tag(12));
            return FormulaResult::exact((w + 3) / 2, row2_tag(12));
        case Tag::Nest:
            if (p >= 1)
                return FormulaResult::bounds(Rational::whole(2 * p * w + 1),
                                             Rational::whole(4 * p * w), row2_tag(13));
            return FormulaResult::exact(w + 1, row2_tag(13));
        case Tag::GeneralInvariant: {
            auto c = invariant_conditions(cls.representative);
            if (c.omega_one) return FormulaResult::infinite("invariant.omega-one");
            if (c.complete_always) return FormulaResult::exact(f_largest_k(w), "invariant.complete");
            return FormulaResult::unknown("unclassified");
        }
        case Tag::TableRow:
            break;
    }
    switch (cls.row) {
        case 3:
            if (p <= 0) return FormulaResult::exact(f_largest_k(w), row2_tag(3));
            return FormulaResult::exact(p * w + 1, row2_tag(3));
        case 4:
            if (p <= 1) return FormulaResult::exact(f_largest_k(w), row2_tag(4));
            return FormulaResult::exact(f0(w - 1) + p - 1, row2_tag(4));
        case 5:
            return FormulaResult::infinite(row2_tag(5));
        case 6: {
            if (p <= 2) return FormulaResult::exact(f_largest_k(w), row2_tag(6));
            long long parity = p % 2;
            return FormulaResult::exact(f0(w - parity) + ceil_div(p - 2, 2), row2_tag(6));
        }
        case 7:
            return FormulaResult::infinite(row2_tag(7));
        case 8:
            if (p <= 0) return FormulaResult::exact(f_largest_k(w), row2_tag(8));
            return FormulaResult::exact(p * w + 1, row2_tag(8));
        case 9:
            if (p <= 0) return FormulaResult::exact(f_largest_k(w), row2_tag(9));
            return FormulaResult::exact((p * w + 3) / 2, row2_tag(9));
        case 10:
            if (p <= 0) return FormulaResult::exact(w + 1, row2_tag(10));
            return FormulaResult::exact((p + 1) * w + 1, row2_tag(10));
        case 11:
            if (p <= 1) return FormulaResult::exact(f_largest_k(w), row2_tag(11));
            return FormulaResult::exact(f_largest_k(w) + p - 2, row2_tag(11));
        default:
            return FormulaResult::unknown("unclassified");
    }
}

}  // namespace ordconflict
