#pragma once

#include <string>

#include "ordconflict/transforms.hpp"

namespace ordconflict {

/// Exact integer fraction; bounds like k/(4p) are never rounded to floats.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    static Rational whole(long long v) { return Rational{v, 1}; }
    bool operator==(const Rational&) const = default;
};
bool rat_le(const Rational& a, const Rational& b);
std::string rat_str(const Rational& r);

struct FormulaResult {
    enum class Kind { Exact, Bounds, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    long long value = 0;  // Exact only
    Rational lower;       // Bounds only
    Rational upper;
    std::string provenance;

    static FormulaResult exact(long long v, std::string prov);
    static FormulaResult bounds(Rational lo, Rational hi, std::string prov);
    static FormulaResult infinite(std::string prov);
    static FormulaResult unknown(std::string prov);

    bool is_exact() const { return kind == Kind::Exact; }
    /// For exact results the value itself; for bounds, containment of v.
    bool admits(long long v) const;
};

long long binom2(long long n);

/// Largest k with k(k-1)/2 <= x; requires x >= 1.
long long f_largest_k(long long x);

/// A(M,p,k): the minimum independence number of the conflict graph over
/// ordered graphs with chromatic number at least k. Full piecewise ranges,
/// valid for every k >= 2.
FormulaResult closed_form_A(const ConflictSpec& spec, long long k);

/// W(M,p,k): the minimum clique number, same ranges.
FormulaResult closed_form_W(const ConflictSpec& spec, long long k);

FormulaResult closed_form_A(const MatrixClass& cls, Int p, long long k);
FormulaResult closed_form_W(const MatrixClass& cls, Int p, long long k);

/// X_ind(M,p,a) = sup{k : A(M,p,k) <= a}, computed by iterating the closed
/// form upward; identically-1 families give an infinite result.
FormulaResult closed_form_X_ind(const ConflictSpec& spec, long long a);

/// X_cli(M,p,w) = sup{k : W(M,p,k) <= w}.
FormulaResult closed_form_X_cli(const ConflictSpec& spec, long long w);

/// Directly coded inverse-table expressions, used to cross-check the
/// sup-inversion route. Unknown where no direct expression exists.
FormulaResult table2_X_ind(const ConflictSpec& spec, long long a);
FormulaResult table2_X_cli(const ConflictSpec& spec, long long w);

}  // namespace ordconflict
