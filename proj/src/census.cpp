#include "trinv/census.hpp"

#include <algorithm>
#include <map>

namespace trinv {

namespace {

uint64_t saturating_monomial_count(std::optional<unsigned> d, int vars) {
    if (!d) return 0;
    // number of monomials of total degree <= d in `vars` variables
    uint64_t count = 1;
    for (int i = 1; i <= vars; ++i) {
        const uint64_t factor = static_cast<uint64_t>(*d) + i;
        if (count > UINT64_MAX / factor) return UINT64_MAX;
        count = count * factor / i;  // exact at each step: product of i consecutive integers
    }
    return count;
}

Polynomial poly_from_mask(const Field& f, const std::vector<Monomial>& monos, uint64_t mask) {
    Polynomial p(f);
    for (size_t i = 0; i < monos.size(); ++i) {
        if ((mask >> i) & 1u) p += Polynomial::monomial(f, monos[i]);
    }
    return p;
}

}  // namespace

uint64_t enumeration_cardinality(const Field& f, const DegreeBounds& bounds) {
    const uint64_t n2 = saturating_monomial_count(bounds.d2, 1);
    const uint64_t n3 = saturating_monomial_count(bounds.d3, 2);
    const uint64_t n4 = saturating_monomial_count(bounds.d4, 3);
    if (n2 > 62 || n3 > 62 || n4 > 62 || n2 + n3 + n4 > 62) return UINT64_MAX;
    const uint64_t bits = n2 + n3 + n4;
    const uint64_t phi1 = bounds.phi1_values.empty() ? f->order() : bounds.phi1_values.size();
    if (phi1 > (UINT64_MAX >> bits)) return UINT64_MAX;
    return phi1 << bits;
}

std::vector<Monomial> monomials_up_to(int var_count, unsigned max_total_degree) {
    std::vector<Monomial> out;
    Monomial m;
    const std::function<void(int, unsigned)> rec = [&](int v, unsigned left) {
        if (v == var_count) {
            out.push_back(m);
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            m.exp[v] = e;
            rec(v + 1, left - e);
        }
        m.exp[v] = 0;
    };
    rec(0, max_total_degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return TermOrder{}(b, a); });
    return out;
}

void for_each_triangular_map(const Field& f, const DegreeBounds& bounds, uint64_t budget,
                             const std::function<void(const PolyMap&)>& visit) {
    if (f->degree() != 1)
        fail(errc::field_not_prime, "census enumeration runs over GF(2) only");
    const uint64_t cardinality = enumeration_cardinality(f, bounds);
    if (cardinality > budget)
        fail(errc::budget_exceeded, "enumeration cardinality " +
                                        (cardinality == UINT64_MAX ? std::string("overflows and")
                                                                   : std::to_string(cardinality)) +
                                        " exceeds the budget " + std::to_string(budget));

    std::vector<uint16_t> phi1s = bounds.phi1_values;
    if (phi1s.empty()) {
        for (uint32_t c = 0; c < f->order(); ++c) phi1s.push_back(static_cast<uint16_t>(c));
    } else {
        for (uint16_t c : phi1s) {
            if (c >= f->order()) fail(errc::bad_field_spec, "phi1 constant exceeds the field order");
        }
    }

    const std::vector<Monomial> m2 = bounds.d2 ? monomials_up_to(1, *bounds.d2) : std::vector<Monomial>{};
    const std::vector<Monomial> m3 = bounds.d3 ? monomials_up_to(2, *bounds.d3) : std::vector<Monomial>{};
    const std::vector<Monomial> m4 = bounds.d4 ? monomials_up_to(3, *bounds.d4) : std::vector<Monomial>{};

    const Polynomial x = Polynomial::variable(f, Var::x);
    const Polynomial y = Polynomial::variable(f, Var::y);
    const Polynomial z = Polynomial::variable(f, Var::z);
    const Polynomial w = Polynomial::variable(f, Var::w);

    for (const uint16_t c1 : phi1s) {
        const Polynomial ix = x + Polynomial::constant(f, c1);
        for (uint64_t k2 = 0; k2 < (uint64_t{1} << m2.size()); ++k2) {
            const Polynomial iy = y + poly_from_mask(f, m2, k2);
            for (uint64_t k3 = 0; k3 < (uint64_t{1} << m3.size()); ++k3) {
                const Polynomial iz = z + poly_from_mask(f, m3, k3);
                for (uint64_t k4 = 0; k4 < (uint64_t{1} << m4.size()); ++k4) {
                    visit(PolyMap(f, {ix, iy, iz, w + poly_from_mask(f, m4, k4)}));
                }
            }
        }
    }
}

std::vector<PolyMap> enumerate_involutions(const Field& f, const DegreeBounds& bounds,
                                           uint64_t budget) {
    std::vector<PolyMap> out;
    for_each_triangular_map(f, bounds, budget, [&](const PolyMap& m) {
        if (is_involution(m)) out.push_back(m);
    });
    return out;
}

CensusReport census_classify(const Field& f, const DegreeBounds& bounds, uint64_t budget) {
    CensusReport report;
    for_each_triangular_map(f, bounds, budget, [&](const PolyMap& tau) {
        ++report.total_maps;
        const bool brute = is_involution(tau);
        try {
            const Classification c = classify(tau);
            if (!brute) {
                report.failures.push_back("classified a map the brute-force filter rejects: " +
                                          tau.str());
                return;
            }
            ++report.involutions;
            ++report.per_condition[c.condition - 1];
            const PolyMap rebuilt =
                compose(c.conjugator.map, compose(c.canonical_map, c.conjugator.inverse));
            if (!(rebuilt == tau))
                report.failures.push_back("reconstruction mismatch: " + tau.str());
            for (const auto& l : triangular_parts(tau).lambdas) {
                if (!l.is_one())
                    report.failures.push_back("non-unit diagonal coefficient: " + tau.str());
            }
        } catch (const InternalInvariantViolation& e) {
            report.failures.push_back(std::string("internal invariant violation: ") + e.what());
        } catch (const Error& e) {
            if (e.code() == errc::not_involution) {
                if (brute)
                    report.failures.push_back("classifier rejected a brute-force involution: " +
                                              tau.str());
            } else {
                report.failures.push_back(std::string(errc_name(e.code())) + ": " + e.what());
            }
        }
    });
    return report;
}

std::vector<Polynomial> fixed_space_basis(const PolyMap& t, unsigned max_total_degree) {
    const Field& f = t.field();
    if (f->degree() != 1)
        fail(errc::field_not_prime, "the fixed-space solve requires GF(2) coefficients");
    for (const Var v : {Var::x, Var::y, Var::z}) {
        if (!t.image(v).lives_in(3))
            fail(errc::degree_not_preserved,
                 "the map does not restrict to k[x,y,z]: the image of " +
                     xyzw_names()[static_cast<int>(v)] + " involves w");
    }

    const std::vector<Monomial> domain = monomials_up_to(3, max_total_degree);
    const size_t n = domain.size();
    const std::array<Polynomial, 4> images{t.image(Var::x), t.image(Var::y), t.image(Var::z),
                                           Polynomial::variable(f, Var::w)};

    // Images may raise total degree, so rows live in whatever monomials the
    // differences reach, not just the domain.
    std::vector<Polynomial> diffs;
    diffs.reserve(n);
    std::map<Monomial, size_t, TermOrder> row_of;
    for (size_t j = 0; j < n; ++j) {
        Polynomial mono = Polynomial::monomial(f, domain[j]);
        Polynomial diff = substitute(mono, images) + mono;
        for (const auto& [m, c] : diff.terms()) row_of.emplace(m, 0);
        diffs.push_back(std::move(diff));
    }
    size_t row_count = 0;
    for (auto& [m, idx] : row_of) idx = row_count++;

    const size_t words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(row_count, std::vector<uint64_t>(words, 0));
    for (size_t j = 0; j < n; ++j) {
        for (const auto& [m, c] : diffs[j].terms()) {
            rows[row_of.at(m)][j / 64] |= uint64_t{1} << (j % 64);
        }
    }

    // reduced echelon form over GF(2)
    const auto bit = [&](const std::vector<uint64_t>& row, size_t col) {
        return (row[col / 64] >> (col % 64)) & 1u;
    };
    std::vector<std::optional<size_t>> pivot_row_of_col(n);
    size_t next_row = 0;
    for (size_t col = 0; col < n && next_row < row_count; ++col) {
        size_t found = row_count;
        for (size_t r = next_row; r < row_count; ++r) {
            if (bit(rows[r], col)) {
                found = r;
                break;
            }
        }
        if (found == row_count) continue;
        std::swap(rows[found], rows[next_row]);
        for (size_t r = 0; r < row_count; ++r) {
            if (r != next_row && bit(rows[r], col)) {
                for (size_t w = 0; w < words; ++w) rows[r][w] ^= rows[next_row][w];
            }
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }

    // kernel basis: one vector per free column, in ascending monomial order
    std::vector<Polynomial> basis;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_row_of_col[col]) continue;
        Polynomial v = Polynomial::monomial(f, domain[col]);
        for (size_t pc = 0; pc < n; ++pc) {
            if (pivot_row_of_col[pc] && bit(rows[*pivot_row_of_col[pc]], col))
                v += Polynomial::monomial(f, domain[pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace trinv
