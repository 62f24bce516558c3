#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trinv/canon.hpp"

namespace trinv {

// Enumeration window for unitriangular maps
//   x -> x + phi1, y -> y + phi2(x), z -> z + phi3(x,y), w -> w + phi4(x,y,z)
// over GF(2). A disengaged degree bound pins the corresponding phi to zero;
// an engaged bound allows every polynomial up to that (total) degree.
struct DegreeBounds {
    std::vector<uint16_t> phi1_values;  // allowed constants; empty = the whole field
    std::optional<unsigned> d2;
    std::optional<unsigned> d3;
    std::optional<unsigned> d4;
};

inline constexpr uint64_t kDefaultCensusBudget = uint64_t{1} << 20;

// Number of maps the window contains, saturating at UINT64_MAX.
uint64_t enumeration_cardinality(const Field& f, const DegreeBounds& bounds);

// All monomials in the first var_count variables of total degree at most d,
// in ascending canonical term order.
std::vector<Monomial> monomials_up_to(int var_count, unsigned max_total_degree);

// Visits every map in the window in a fixed order: phi1 ascending, then the
// phi2, phi3, phi4 coefficient masks in monomial order, phi4 innermost.
// BudgetExceeded before any work if the window is larger than budget;
// FieldNotPrime unless the field is GF(2).
void for_each_triangular_map(const Field& f, const DegreeBounds& bounds, uint64_t budget,
                             const std::function<void(const PolyMap&)>& visit);

std::vector<PolyMap> enumerate_involutions(const Field& f, const DegreeBounds& bounds,
                                           uint64_t budget = kDefaultCensusBudget);

// Runs the classifier against the brute-force self-composition filter over
// the whole window. failures collects every disagreement: a classified
// non-involution, a rejected involution, a reconstruction mismatch, a
// non-unit diagonal coefficient, or an internal invariant violation.
struct CensusReport {
    uint64_t total_maps = 0;
    uint64_t involutions = 0;
    std::array<uint64_t, 3> per_condition{0, 0, 0};
    std::vector<std::string> failures;
};
CensusReport census_classify(const Field& f, const DegreeBounds& bounds,
                             uint64_t budget = kDefaultCensusBudget);

// Basis of the subspace of k[x,y,z] of total degree <= max_total_degree
// fixed by t, solved exactly over GF(2). t must restrict to k[x,y,z]
// (DegreeNotPreserved if an image of x, y or z involves w); images may raise
// degree, the solve tracks every monomial they reach. The basis is the
// deterministic reduced echelon kernel basis in ascending monomial order.
std::vector<Polynomial> fixed_space_basis(const PolyMap& t, unsigned max_total_degree);

}  // namespace trinv
