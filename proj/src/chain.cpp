#include "boundaryk/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "boundaryk/errors.hpp"
#include "boundaryk/snf.hpp"

namespace boundaryk::chain {

using intlin::IntMatrix;

namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "]";
    return os.str();
}

// Presentation of ker(out_map) / im(in_map) with enough witness data to
// push a cycle down to normal-form coordinates.
struct QuotientPresentation {
    fgab::FgAbGroup group;
    IntMatrix v_inv;      // inverse of v from snf(out_map)
    std::size_t out_rank = 0;
    std::size_t kernel_dim = 0;
    IntMatrix u_rel;      // row witness of snf(relations)
    std::vector<mpz_class> rel_factors;
    std::size_t rel_ones = 0;  // leading factors equal to 1
};

QuotientPresentation present_quotient(const IntMatrix& out_map, const IntMatrix& in_map) {
    QuotientPresentation q;
    const intlin::SnfResult snf_out = intlin::smith_normal_form(out_map);
    q.out_rank = snf_out.invariant_factors.size();
    q.kernel_dim = out_map.cols() - q.out_rank;
    q.v_inv = intlin::unimodular_inverse(snf_out.v);

    // Columns of in_map land in ker(out_map); in the v-basis that means
    // their first out_rank coordinates vanish and the tail presents the
    // relations on the kernel generators.
    const IntMatrix y = intlin::mul(q.v_inv, in_map);
    for (std::size_t i = 0; i < q.out_rank; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (y(i, j) != 0)
                throw std::logic_error("present_quotient: incoming map does not land in the kernel");

    IntMatrix rel(q.kernel_dim, in_map.cols());
    for (std::size_t i = 0; i < q.kernel_dim; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) rel(i, j) = y(q.out_rank + i, j);

    const intlin::SnfResult snf_rel = intlin::smith_normal_form(rel);
    q.u_rel = snf_rel.u;
    q.rel_factors = snf_rel.invariant_factors;
    q.rel_ones = 0;
    for (const auto& d : q.rel_factors)
        if (d == 1) ++q.rel_ones;
    q.group = fgab::group_from_factors(q.rel_factors, q.kernel_dim - q.rel_factors.size());
    return q;
}

fgab::GroupElement project_cycle(const QuotientPresentation& q, const IntMatrix& cycle_col) {
    IntMatrix y = intlin::mul(q.v_inv, cycle_col);
    for (std::size_t i = 0; i < q.out_rank; ++i)
        if (y(i, 0) != 0) throw std::logic_error("project_cycle: chain is not a cycle");

    IntMatrix tail(q.kernel_dim, 1);
    for (std::size_t i = 0; i < q.kernel_dim; ++i) tail(i, 0) = y(q.out_rank + i, 0);
    const IntMatrix w = intlin::mul(q.u_rel, tail);

    fgab::GroupElement e;
    const std::size_t r = q.rel_factors.size();
    for (std::size_t i = q.rel_ones; i < r; ++i) {
        mpz_class red;
        mpz_fdiv_r(red.get_mpz_t(), w(i, 0).get_mpz_t(), q.rel_factors[i].get_mpz_t());
        e.torsion_coords.push_back(red);
    }
    for (std::size_t i = r; i < q.kernel_dim; ++i) e.free_coords.push_back(w(i, 0));
    return e;
}

}  // namespace

ChainComplexData::ChainComplexData(std::vector<std::size_t> ranks,
                                   std::vector<intlin::IntMatrix> boundaries,
                                   Provenance provenance)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), provenance_(provenance) {}

std::size_t ChainComplexData::rank(int n) const {
    if (n < 0 || n > top_dim()) return 0;
    return ranks_[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplexData::boundary(int n) const {
    if (n >= 1 && n <= top_dim()) return boundaries_[static_cast<std::size_t>(n - 1)];
    return IntMatrix(rank(n - 1), rank(n));  // zero map at the edges
}

long ChainComplexData::euler_characteristic() const {
    long chi = 0;
    int sign = 1;
    for (std::size_t r : ranks_) {
        chi += sign * static_cast<long>(r);
        sign = -sign;
    }
    return chi;
}

ChainComplexData ChainComplexData::from_matrices(std::vector<std::size_t> ranks,
                                                 std::vector<intlin::IntMatrix> boundaries) {
    if (ranks.empty()) ranks.push_back(0);
    if (ranks.size() > 4) throw DimensionTooHigh(static_cast<int>(ranks.size()) - 1);
    if (boundaries.size() + 1 != ranks.size())
        throw std::invalid_argument("from_matrices: need one boundary matrix per degree 1..top_dim");
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        const IntMatrix& b = boundaries[n - 1];
        if (b.rows() != ranks[n - 1] || b.cols() != ranks[n])
            throw std::invalid_argument("from_matrices: boundary_" + std::to_string(n) +
                                        " has shape " + std::to_string(b.rows()) + "x" +
                                        std::to_string(b.cols()) + ", expected " +
                                        std::to_string(ranks[n - 1]) + "x" + std::to_string(ranks[n]));
    }
    for (std::size_t n = 1; n + 1 < ranks.size(); ++n)
        if (!intlin::mul(boundaries[n - 1], boundaries[n]).is_zero())
            throw BoundarySquare(static_cast<int>(n));
    return ChainComplexData(std::move(ranks), std::move(boundaries), Provenance::RawMatrices);
}

ChainComplexData ChainComplexData::from_simplicial(const SimplicialData& simplices) {
    // trim trailing empty degrees
    std::size_t levels = simplices.size();
    while (levels > 0 && simplices[levels - 1].empty()) --levels;
    if (levels == 0) return ChainComplexData({0}, {}, Provenance::Simplicial);
    if (levels > 4) throw DimensionTooHigh(static_cast<int>(levels) - 1);

    std::vector<std::map<std::vector<int>, std::size_t>> index(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        for (const auto& s : simplices[k]) {
            if (s.size() != k + 1)
                throw std::invalid_argument("simplex " + tuple_str(s) + " listed in degree " +
                                            std::to_string(k));
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i] <= s[i - 1])
                    throw NonIncreasingVertices("simplex " + tuple_str(s) +
                                                " does not have strictly increasing vertices");
            if (!index[k].emplace(s, index[k].size()).second)
                throw DuplicateSimplex("simplex " + tuple_str(s) + " listed twice");
        }
    }

    std::vector<std::size_t> ranks(levels);
    for (std::size_t k = 0; k < levels; ++k) ranks[k] = index[k].size();

    // boundary[v0..vk] = sum_i (-1)^i [v0..^vi..vk]
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k < levels; ++k) {
        IntMatrix b(ranks[k - 1], ranks[k]);
        for (const auto& [simplex, col] : index[k]) {
            for (std::size_t i = 0; i <= k; ++i) {
                std::vector<int> face = simplex;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                const auto it = index[k - 1].find(face);
                if (it == index[k - 1].end())
                    throw MissingFace("face " + tuple_str(face) + " of simplex " +
                                      tuple_str(simplex) + " is not listed");
                b(it->second, col) = (i % 2 == 0) ? 1 : -1;
            }
        }
        boundaries.push_back(std::move(b));
    }

    for (std::size_t n = 1; n + 1 < levels; ++n)
        if (!intlin::mul(boundaries[n - 1], boundaries[n]).is_zero())
            throw BoundarySquare(static_cast<int>(n));
    return ChainComplexData(std::move(ranks), std::move(boundaries), Provenance::Simplicial);
}

HomologyProfile homology(const ChainComplexData& c) {
    HomologyProfile profile;
    for (int n = 0; n <= 3; ++n) {
        if (c.rank(n) == 0) {
            profile.h[static_cast<std::size_t>(n)] = fgab::FgAbGroup();
            if (n == 0) profile.base_point_class = fgab::GroupElement();
            continue;
        }
        const QuotientPresentation q = present_quotient(c.boundary(n), c.boundary(n + 1));
        profile.h[static_cast<std::size_t>(n)] = q.group;
        if (n == 0) {
            IntMatrix e0(c.rank(0), 1);
            e0(0, 0) = 1;
            fgab::GroupElement base = project_cycle(q, e0);
            // Generator signs in H0 are a free choice; pick them so the
            // base class has nonnegative free coordinates.
            for (auto& x : base.free_coords)
                if (x < 0) x = -x;
            profile.base_point_class = std::move(base);
        }
    }
    return profile;
}

std::array<fgab::FgAbGroup, 4> cohomology(const ChainComplexData& c) {
    std::array<fgab::FgAbGroup, 4> h;
    for (int n = 0; n <= 3; ++n) {
        if (c.rank(n) == 0) continue;
        // cochain maps are the transposed boundaries one degree up/down
        const IntMatrix out = intlin::transpose(c.boundary(n + 1));
        const IntMatrix in = intlin::transpose(c.boundary(n));
        h[static_cast<std::size_t>(n)] = present_quotient(out, in).group;
    }
    return h;
}

std::array<std::size_t, 4> homology_with_field(const ChainComplexData& c,
                                               const fgab::FieldSpec& f) {
    const auto rank_f = [&f](const IntMatrix& m) {
        if (f.kind() == fgab::FieldSpec::Kind::Rationals) return intlin::rank_over_rationals(m);
        return intlin::rank_mod_p(m, f.p());
    };
    std::array<std::size_t, 4> dims{};
    for (int n = 0; n <= 3; ++n) {
        if (c.rank(n) == 0) continue;
        dims[static_cast<std::size_t>(n)] =
            c.rank(n) - rank_f(c.boundary(n)) - rank_f(c.boundary(n + 1));
    }
    return dims;
}

std::string ValidationReport::digest() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < clauses.size(); ++i)
        os << (i ? " " : "") << clauses[i].name << (clauses[i].pass ? ":pass" : ":fail");
    return os.str();
}

ValidationReport validate_closed_oriented_3mfld(const ChainComplexData& c) {
    const HomologyProfile profile = homology(c);
    const auto coh = cohomology(c);
    const fgab::FgAbGroup z = fgab::FgAbGroup::free(1);

    ValidationReport report;
    auto add = [&report](std::string name, bool pass, std::string detail) {
        report.clauses.push_back({std::move(name), pass, std::move(detail)});
    };

    add("i", profile.h[0] == z, "connected: H0 = " + fgab::to_string(profile.h[0]));
    add("ii", profile.h[3] == z, "closed orientable: H3 = " + fgab::to_string(profile.h[3]));

    const long chi = c.euler_characteristic();
    add("iii", chi == 0, "Euler characteristic = " + std::to_string(chi));

    bool duality = true;
    std::ostringstream detail;
    for (int k = 0; k <= 3; ++k) {
        const bool ok = iso_check(coh[static_cast<std::size_t>(k)],
                                  profile.h[static_cast<std::size_t>(3 - k)]);
        duality = duality && ok;
        detail << (k ? "; " : "") << "H^" << k << " = "
               << fgab::to_string(coh[static_cast<std::size_t>(k)]) << (ok ? " = " : " != ")
               << "H_" << (3 - k);
    }
    add("iv", duality, "Poincare duality: " + detail.str());

    add("v", coh[1].is_free(), "H^1 torsion-free: H^1 = " + fgab::to_string(coh[1]));

    report.all_pass = std::all_of(report.clauses.begin(), report.clauses.end(),
                                  [](const ValidationClause& cl) { return cl.pass; });
    return report;
}

}  // namespace boundaryk::chain
