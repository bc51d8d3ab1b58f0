#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boundaryk::fgab {

// Coefficient field: the rationals or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    static FieldSpec prime_field(std::uint64_t p);  // throws NotPrime

    Kind kind() const { return kind_; }
    std::uint64_t p() const { return p_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

std::string to_string(const FieldSpec& f);

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/t1 + ... + Z/tm with 2 <= t1 | t2 | ... | tm.
// The normal form is unique, so structural equality is isomorphism.
class FgAbGroup {
public:
    FgAbGroup() = default;  // trivial group
    FgAbGroup(std::size_t free_rank, std::vector<mpz_class> torsion);
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

// Builds the group presented by a diagonal of invariant factors together
// with extra free generators; entries equal to 1 are dropped.
FgAbGroup group_from_factors(const std::vector<mpz_class>& factors, std::size_t extra_free);

// Element in the coordinates of the normal form; torsion coordinates are
// stored reduced into [0, t_i).
struct GroupElement {
    std::vector<mpz_class> free_coords;
    std::vector<mpz_class> torsion_coords;

    bool is_zero() const;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement zero_element_of(const FgAbGroup& g);

// Group with a distinguished element; the constructor checks coordinate
// shapes and reduces torsion coordinates.
struct PointedGroup {
    FgAbGroup group;
    GroupElement point;

    PointedGroup() = default;
    PointedGroup(FgAbGroup g, GroupElement p);
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
bool iso_check(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup hom_to_Z(const FgAbGroup& a);
std::size_t tensor_with_field(const FgAbGroup& a, const FieldSpec& f);
std::size_t tor_with_field(const FgAbGroup& a, const FieldSpec& f);

// gcd of the free coordinates; 0 for the zero element. Classifies the
// orbit of an element of a free group under its automorphism group.
mpz_class content(const GroupElement& e);

enum class PointedVerdict { Isomorphic, NotIsomorphic, Undecided };
std::string to_string(PointedVerdict v);

// Decides pointed isomorphism where a complete invariant is available:
// both groups free (rank and point content), or both points zero (plain
// iso_check). Torsion groups with nonzero points are reported Undecided.
PointedVerdict pointed_iso_check(const PointedGroup& a, const PointedGroup& b);

// (A, pt) + B pointed at (pt, 0). Requires the point's torsion part to be
// zero or B torsion-free, which covers every sum formed in this project.
PointedGroup pointed_direct_sum(const PointedGroup& a, const FgAbGroup& b);

// Canonical rendering "Z^r + Z/t1 + ..." with the UTF-8 direct-sum sign;
// parse_group accepts exactly the same grammar.
std::string to_string(const FgAbGroup& g);
FgAbGroup parse_group(std::string_view text);

}  // namespace boundaryk::fgab
