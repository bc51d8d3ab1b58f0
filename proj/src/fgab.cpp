#include "boundaryk/fgab.hpp"

#include <algorithm>
#include <stdexcept>

#include "boundaryk/errors.hpp"
#include "boundaryk/snf.hpp"

namespace boundaryk::fgab {

namespace {

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    // validated here once; every downstream op can trust the modulus
    if (!intlin::is_prime(p)) throw NotPrime(p);
    return FieldSpec(Kind::PrimeField, p);
}

std::string to_string(const FieldSpec& f) {
    if (f.kind() == FieldSpec::Kind::Rationals) return "Q";
    return "F" + std::to_string(f.p());
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<mpz_class> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) throw std::invalid_argument("torsion entry below 2 in normal form");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("torsion entries violate the divisibility chain");
    }
}

FgAbGroup group_from_factors(const std::vector<mpz_class>& factors, std::size_t extra_free) {
    std::vector<mpz_class> torsion;
    for (const auto& d : factors) {
        if (d < 0) throw std::invalid_argument("negative invariant factor");
        if (d >= 2) torsion.push_back(d);
    }
    return FgAbGroup(extra_free, std::move(torsion));
}

bool GroupElement::is_zero() const {
    auto all_zero = [](const std::vector<mpz_class>& v) {
        return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
    };
    return all_zero(free_coords) && all_zero(torsion_coords);
}

GroupElement zero_element_of(const FgAbGroup& g) {
    GroupElement e;
    e.free_coords.resize(g.free_rank());
    e.torsion_coords.resize(g.torsion().size());
    return e;
}

PointedGroup::PointedGroup(FgAbGroup g, GroupElement p) : group(std::move(g)), point(std::move(p)) {
    if (point.free_coords.size() != group.free_rank() ||
        point.torsion_coords.size() != group.torsion().size())
        throw std::invalid_argument("point coordinates do not match the group's normal form");
    for (std::size_t i = 0; i < point.torsion_coords.size(); ++i)
        point.torsion_coords[i] = mod_nonneg(point.torsion_coords[i], group.torsion()[i]);
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<mpz_class> t = a.torsion();
    t.insert(t.end(), b.torsion().begin(), b.torsion().end());

    // gcd/lcm sweep: after pass i, t[i] divides everything to its right.
    // Each replacement preserves the multiset of prime-power components,
    // so the result is the invariant-factor chain of the sum.
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), t[i].get_mpz_t(), t[j].get_mpz_t());
            mpz_class l = t[i] / g * t[j];
            t[i] = g;
            t[j] = l;
        }
    }
    t.erase(std::remove(t.begin(), t.end(), mpz_class(1)), t.end());
    return FgAbGroup(a.free_rank() + b.free_rank(), std::move(t));
}

bool iso_check(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

FgAbGroup hom_to_Z(const FgAbGroup& a) { return FgAbGroup::free(a.free_rank()); }

std::size_t tensor_with_field(const FgAbGroup& a, const FieldSpec& f) {
    if (f.kind() == FieldSpec::Kind::Rationals) return a.free_rank();
    std::size_t dim = a.free_rank();
    for (const auto& t : a.torsion())
        if (mpz_fdiv_ui(t.get_mpz_t(), f.p()) == 0) ++dim;
    return dim;
}

std::size_t tor_with_field(const FgAbGroup& a, const FieldSpec& f) {
    if (f.kind() == FieldSpec::Kind::Rationals) return 0;
    std::size_t dim = 0;
    for (const auto& t : a.torsion())
        if (mpz_fdiv_ui(t.get_mpz_t(), f.p()) == 0) ++dim;
    return dim;
}

mpz_class content(const GroupElement& e) {
    mpz_class g = 0;
    for (const auto& c : e.free_coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

std::string to_string(PointedVerdict v) {
    switch (v) {
        case PointedVerdict::Isomorphic: return "Isomorphic";
        case PointedVerdict::NotIsomorphic: return "NotIsomorphic";
        default: return "Undecided";
    }
}

PointedVerdict pointed_iso_check(const PointedGroup& a, const PointedGroup& b) {
    if (!iso_check(a.group, b.group)) return PointedVerdict::NotIsomorphic;
    if (a.group.is_free() && b.group.is_free()) {
        // GL_n(Z) orbits on Z^n are classified by the content (0 for the
        // zero vector), so equality decides.
        return content(a.point) == content(b.point) ? PointedVerdict::Isomorphic
                                                    : PointedVerdict::NotIsomorphic;
    }
    if (a.point.is_zero() && b.point.is_zero()) return PointedVerdict::Isomorphic;
    return PointedVerdict::Undecided;
}

PointedGroup pointed_direct_sum(const PointedGroup& a, const FgAbGroup& b) {
    const bool torsion_part_zero = std::all_of(
        a.point.torsion_coords.begin(), a.point.torsion_coords.end(),
        [](const mpz_class& x) { return x == 0; });
    if (!torsion_part_zero && !b.is_free())
        throw std::logic_error(
            "pointed_direct_sum: point with torsion support summed against a torsion group");

    FgAbGroup sum = direct_sum(a.group, b);
    GroupElement pt;
    pt.free_coords = a.point.free_coords;
    pt.free_coords.resize(sum.free_rank());
    if (b.is_free()) {
        // chain unchanged, coordinates carry over
        pt.torsion_coords = a.point.torsion_coords;
    } else {
        pt.torsion_coords.assign(sum.torsion().size(), 0);
    }
    return PointedGroup(std::move(sum), std::move(pt));
}

std::string to_string(const FgAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) out += " ⊕ ";
        out += term;
    };
    if (g.free_rank() == 1) append("Z");
    else if (g.free_rank() > 1) append("Z^" + std::to_string(g.free_rank()));
    for (const auto& t : g.torsion()) append("Z/" + t.get_str());
    return out;
}

FgAbGroup parse_group(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };

    std::vector<std::string_view> terms;
    static constexpr std::string_view kOPlus = "⊕";
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(kOPlus, pos);
        if (next == std::string_view::npos) {
            terms.push_back(trim(text.substr(pos)));
            break;
        }
        terms.push_back(trim(text.substr(pos, next - pos)));
        pos = next + kOPlus.size();
    }

    auto parse_positive = [](std::string_view s) -> mpz_class {
        if (s.empty()) throw std::invalid_argument("empty integer in group expression");
        for (char c : s)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed integer in group expression");
        return mpz_class(std::string(s), 10);
    };

    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;
    if (terms.size() == 1 && terms[0] == "0") return FgAbGroup();
    for (std::string_view term : terms) {
        if (term == "Z") {
            free_rank += 1;
        } else if (term.rfind("Z^", 0) == 0) {
            const mpz_class r = parse_positive(term.substr(2));
            if (!r.fits_ulong_p()) throw std::invalid_argument("free rank out of range");
            free_rank += r.get_ui();
        } else if (term.rfind("Z/", 0) == 0) {
            torsion.push_back(parse_positive(term.substr(2)));
        } else {
            throw std::invalid_argument("unrecognized group term '" + std::string(term) + "'");
        }
    }
    return FgAbGroup(free_rank, std::move(torsion));  // validates the chain
}

}  // namespace boundaryk::fgab
