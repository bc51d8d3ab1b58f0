#include "boundaryk/ahss.hpp"

#include <sstream>
#include <stdexcept>

#include "boundaryk/errors.hpp"

namespace boundaryk::ahss {

namespace {
const fgab::FgAbGroup kTrivial{};

std::string coord(int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}
}  // namespace

std::string to_string(DiffRule r) {
    switch (r) {
        case DiffRule::OddRowZero: return "OddRowZero";
        case DiffRule::WindowExit: return "WindowExit";
        default: return "RetractArgument";
    }
}

SpectralPage::SpectralPage(int index, int p_max) : index_(index), p_max_(p_max) {
    if (p_max < kPMax) throw std::invalid_argument("window must cover p in [0,3]");
    rows_.resize(static_cast<std::size_t>(p_max + 1));
    diffs_.resize(static_cast<std::size_t>(p_max + 1) * (kQMax - kQMin + 1));
}

const fgab::FgAbGroup& SpectralPage::entry(int p, int q) const {
    if (p < kPMin || p > p_max_) return kTrivial;
    if (q % 2 != 0) return kTrivial;
    return rows_[static_cast<std::size_t>(p)];
}

void SpectralPage::set_entry(int p, int q, fgab::FgAbGroup g) {
    if (p < kPMin || p > p_max_) throw std::invalid_argument("entry outside the p-window");
    if (q % 2 != 0) {
        if (!g.is_trivial()) throw std::invalid_argument("odd rows are identically zero");
        return;
    }
    rows_[static_cast<std::size_t>(p)] = std::move(g);
}

std::size_t SpectralPage::diff_slot(int p, int q) const {
    if (p < kPMin || p > p_max_ || q < kQMin || q > kQMax)
        throw std::out_of_range("differential outside the stored window");
    return static_cast<std::size_t>(p) * (kQMax - kQMin + 1) + static_cast<std::size_t>(q - kQMin);
}

const DifferentialStatus& SpectralPage::differential(int p, int q) const {
    return diffs_[diff_slot(p, q)];
}

void SpectralPage::mark_structurally_zero(int p, int q, std::optional<DiffRule> rule) {
    diffs_[diff_slot(p, q)] = {true, rule};
}

SpectralPage second_page(const std::array<fgab::FgAbGroup, 4>& coh) {
    SpectralPage page(2);
    for (int p = 0; p <= kPMax; ++p)
        for (int q = kQMin; q <= kQMax; q += 2)
            page.set_entry(p, q, coh[static_cast<std::size_t>(p)]);
    return page;
}

CertifiedLimit certify_degeneration(const SpectralPage& page2) {
    if (page2.index() != 2)
        throw std::invalid_argument("certify_degeneration starts from the second page");

    const int p_max = page2.p_max();
    SpectralPage einf(kLimitIndex, p_max);
    for (int p = 0; p <= p_max; ++p) einf.set_entry(p, 0, page2.entry(p, 0));

    const fgab::FgAbGroup z = fgab::FgAbGroup::free(1);
    JustificationLog log;

    // d_i leaves the p-window for every source once i exceeds p_max, so
    // only finitely many pages need entry-level inspection.
    for (int i = 2; i <= p_max; ++i) {
        for (int p = 0; p <= p_max; ++p) {
            for (int q = kQMin; q <= kQMax; ++q) {
                const int tp = p + i;
                const int tq = q - i + 1;
                const std::string claim = "d" + std::to_string(i) + "^" + coord(p, q) + " = 0";

                if (page2.entry(p, q).is_trivial()) {
                    log.push_back({claim, to_string(DiffRule::OddRowZero),
                                   "vanishing domain: E" + coord(p, q) + " = 0"});
                } else if (tp > p_max) {
                    log.push_back({claim, to_string(DiffRule::WindowExit),
                                   "target column p = " + std::to_string(tp) +
                                       " lies outside [0," + std::to_string(p_max) + "]"});
                } else if (page2.entry(tp, tq).is_trivial()) {
                    log.push_back({claim, to_string(DiffRule::OddRowZero),
                                   "vanishing range: E" + coord(tp, tq) + " = 0"});
                } else if (i == 3 && p == 0) {
                    // Retract pt -> M -> pt: the outer composite is the
                    // identity on the H^0 column, and with H^0 = Z = H^3
                    // the inner maps are isomorphisms, so d3 factors
                    // through the zero differential of the point.
                    if (!(page2.entry(0, q) == z && page2.entry(tp, tq) == z))
                        throw DegenerationNotCertified(
                            "retract rule needs H^0 = Z and H^3 = Z; got H^0 = " +
                            fgab::to_string(page2.entry(0, q)) + ", H^3 = " +
                            fgab::to_string(page2.entry(tp, tq)));
                    log.push_back({claim, to_string(DiffRule::RetractArgument),
                                   "naturality for pt -> M -> pt with H^0 = Z and H^3 = Z "
                                   "forces d3 on the first column to vanish"});
                } else {
                    throw DegenerationNotCertified("no structural rule closes d" +
                                                   std::to_string(i) + "^" + coord(p, q));
                }
            }
        }
    }

    log.push_back({"d_i = 0 for all i > " + std::to_string(p_max), to_string(DiffRule::WindowExit),
                   "every target column p + i exceeds " + std::to_string(p_max)});

    for (int p = 0; p <= p_max; ++p)
        for (int q = kQMin; q <= kQMax; ++q) einf.mark_structurally_zero(p, q, std::nullopt);

    return {std::move(einf), std::move(log)};
}

namespace {

std::vector<FiltrationRung> resolve_filtration(const SpectralPage& einf, int total_degree,
                                               fgab::FgAbGroup& out) {
    std::vector<FiltrationRung> rungs;
    fgab::FgAbGroup g;  // G^{p_max+1} = 0: the grading is Hausdorff
    for (int p = einf.p_max(); p >= 0; --p) {
        const fgab::FgAbGroup& quotient = einf.entry(p, total_degree - p);
        FiltrationRung rung;
        rung.p = p;
        rung.subgroup = g;
        rung.quotient = quotient;
        if (quotient.is_trivial()) {
            rung.result = g;
            rung.splitting = "TrivialQuotient";
        } else if (g.is_trivial()) {
            rung.result = quotient;
            rung.splitting = "TrivialSubgroup";
        } else if (quotient.is_free()) {
            rung.result = fgab::direct_sum(g, quotient);
            rung.splitting = "FreeQuotientSplits";
        } else {
            throw ExtensionUnresolved("rung p = " + std::to_string(p) + " of total degree " +
                                      std::to_string(total_degree) + " has torsion quotient " +
                                      fgab::to_string(quotient) + " over nontrivial subgroup " +
                                      fgab::to_string(g));
        }
        g = rung.result;
        rungs.push_back(std::move(rung));
    }
    out = g;
    return rungs;
}

}  // namespace

KTheoryResult assemble_k_groups(const SpectralPage& einf) {
    if (einf.index() != kLimitIndex)
        throw std::invalid_argument("assemble_k_groups requires a certified limit page");
    KTheoryResult result;
    result.ladder.degree0 = resolve_filtration(einf, 0, result.k0);
    result.ladder.degree1 = resolve_filtration(einf, 1, result.k1);
    return result;
}

KHomologyResult k_homology(const chain::HomologyProfile& profile) {
    KHomologyResult result;
    result.k0 = fgab::pointed_direct_sum(fgab::PointedGroup(profile.h[0], profile.base_point_class),
                                         profile.h[2]);
    result.k1 = fgab::direct_sum(profile.h[1], profile.h[3]);
    return result;
}

DualityReport duality_crosscheck(const KTheoryResult& coh_k, const KHomologyResult& hom_k) {
    DualityReport report;
    report.k0_matches = fgab::iso_check(coh_k.k0, hom_k.k1);
    report.k1_matches = fgab::iso_check(coh_k.k1, hom_k.k0.group);
    report.pass = report.k0_matches && report.k1_matches;
    std::ostringstream os;
    os << "K^0 = " << fgab::to_string(coh_k.k0) << (report.k0_matches ? " = " : " != ")
       << "K_1 = " << fgab::to_string(hom_k.k1) << "; K^1 = " << fgab::to_string(coh_k.k1)
       << (report.k1_matches ? " = " : " != ") << "K_0 = " << fgab::to_string(hom_k.k0.group);
    report.detail = os.str();
    return report;
}

}  // namespace boundaryk::ahss
