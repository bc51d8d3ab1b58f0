#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "boundaryk/chain.hpp"
#include "boundaryk/fgab.hpp"

namespace boundaryk::ahss {

// The (p,q) window covering total degrees 0 and 1 for complexes of
// dimension <= 3. Entries repeat two-periodically in q (complex K-theory
// of a point), so lookups outside the stored q-range reduce by parity.
inline constexpr int kPMin = 0;
inline constexpr int kPMax = 3;
inline constexpr int kQMin = -4;
inline constexpr int kQMax = 2;

// Page index marking a certified limit page ("at infinity").
inline constexpr int kLimitIndex = std::numeric_limits<int>::max();

// The three reasons a differential in this window is structurally zero:
//   OddRowZero      - its source or target entry is the zero group (odd
//                     rows are the canonical case),
//   WindowExit      - its target column lies outside [0, p_max] where all
//                     entries vanish,
//   RetractArgument - the d3 on the H^0 column, killed by naturality for
//                     pt -> M -> pt once H^0 = Z and H^3 = Z are verified.
enum class DiffRule { OddRowZero, WindowExit, RetractArgument };
std::string to_string(DiffRule r);

struct DifferentialStatus {
    bool structurally_zero = false;
    std::optional<DiffRule> rule;
};

// One page of a cohomological spectral sequence over the finite window.
// The differential on page i maps (p,q) to (p+i, q-i+1).
class SpectralPage {
public:
    explicit SpectralPage(int index, int p_max = kPMax);

    int index() const { return index_; }
    int p_max() const { return p_max_; }

    // Trivial outside the p-window and in odd rows; two-periodic in q.
    const fgab::FgAbGroup& entry(int p, int q) const;
    void set_entry(int p, int q, fgab::FgAbGroup g);

    const DifferentialStatus& differential(int p, int q) const;
    void mark_structurally_zero(int p, int q, std::optional<DiffRule> rule);

private:
    int index_;
    int p_max_;
    std::vector<fgab::FgAbGroup> rows_;  // entry at (p, even q); odd rows are zero
    std::vector<DifferentialStatus> diffs_;
    std::size_t diff_slot(int p, int q) const;
};

struct JustificationEntry {
    std::string claim;
    std::string rule;
    std::string basis;
};
using JustificationLog = std::vector<JustificationEntry>;

// E_2^{p,q}: degree-p cohomology in even rows, zero in odd rows.
SpectralPage second_page(const std::array<fgab::FgAbGroup, 4>& coh);

struct CertifiedLimit {
    SpectralPage einf;
    JustificationLog log;
};

// Closes every differential of every page by one of the three rules and
// returns E_2 as the limit page. Throws DegenerationNotCertified when a
// differential matches no rule (impossible for validated 3-complexes;
// reachable through widened windows or degenerate inputs).
CertifiedLimit certify_degeneration(const SpectralPage& page2);

struct FiltrationRung {
    int p;
    fgab::FgAbGroup subgroup;  // G^{p+1} A^n, already resolved
    fgab::FgAbGroup quotient;  // E_inf^{p, n-p}
    fgab::FgAbGroup result;    // G^p A^n
    std::string splitting;     // rule that resolved the extension
};

struct FiltrationLadder {
    std::vector<FiltrationRung> degree0;
    std::vector<FiltrationRung> degree1;
};

struct KTheoryResult {
    fgab::FgAbGroup k0;
    fgab::FgAbGroup k1;
    FiltrationLadder ladder;
};

// Walks the filtration of total degrees 0 and 1 from the top, resolving
// each extension by a splitting rule (trivial subgroup, trivial quotient,
// or free quotient). Throws ExtensionUnresolved when a rung presents a
// torsion quotient over a nontrivial subgroup.
KTheoryResult assemble_k_groups(const SpectralPage& einf);

struct KHomologyResult {
    fgab::PointedGroup k0;  // H0 + H2 pointed at (base class, 0)
    fgab::FgAbGroup k1;     // H1 + H3
};

KHomologyResult k_homology(const chain::HomologyProfile& profile);

struct DualityReport {
    bool k0_matches = false;
    bool k1_matches = false;
    bool pass = false;
    std::string detail;
};

// K^0 against K_1 and K^1 against K_0 (degree shift by 3 plus Bott).
DualityReport duality_crosscheck(const KTheoryResult& coh_k, const KHomologyResult& hom_k);

}  // namespace boundaryk::ahss
