#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance
// binary. All randomness flows from one fixed seed, so a failure reproduces
// by rerunning; failure messages carry the universe's iteration index.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "partnorm/expectation.hpp"
#include "partnorm/indicators.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/types.hpp"
#include "partnorm/universe.hpp"

namespace property_suite {

constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct Outcome {
    int universes = 0;
    int failures_total = 0;
    std::vector<std::string> failures;  // first few, for the report

    bool ok() const { return failures_total == 0; }
};

namespace detail {

using partnorm::Aggregation;
using partnorm::CellKey;
using partnorm::Error;
using partnorm::ErrorCode;
using partnorm::JournalClassification;
using partnorm::JournalId;
using partnorm::JournalYearStats;
using partnorm::MeanKind;
using partnorm::Partition;
using partnorm::Publication;
using partnorm::PublicationRecord;
using partnorm::Universe;
using partnorm::Variant;

using Reporter = std::function<void(const std::string&)>;

inline std::vector<std::string> pick_categories(std::mt19937_64& rng,
                                                const std::vector<std::string>& pool, int k) {
    std::vector<std::string> chosen = pool;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(static_cast<std::size_t>(k));
    return chosen;
}

// A small universe with overlapping category combinations, up to three years,
// sparse rows, occasional zero-item and zero-citation years. Rows with no
// items carry no citations: citations are received by that year's items.
inline Universe random_universe(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_cats_d(1, 5);
    std::uniform_int_distribution<int> n_journals_d(2, 12);
    const int n_cats = n_cats_d(rng);
    const int n_journals = n_journals_d(rng);

    std::vector<std::string> pool;
    for (int c = 0; c < n_cats; ++c) pool.push_back("C_" + std::to_string(c + 1));

    std::vector<JournalClassification> journals;
    std::uniform_int_distribution<int> k_d(1, std::min(3, n_cats));
    for (int j = 0; j < n_journals; ++j)
        journals.push_back(
            {"j_" + std::to_string(j + 1), "", pick_categories(rng, pool, k_d(rng))});

    std::vector<JournalYearStats> stats;
    std::uniform_int_distribution<int> items_d(0, 50);
    std::uniform_int_distribution<int> cit_d(0, 200);
    std::bernoulli_distribution row_present(0.85);
    bool any_items = false;
    for (const auto& jc : journals)
        for (int year = 2004; year <= 2006; ++year) {
            if (!row_present(rng)) continue;
            auto items = static_cast<std::uint64_t>(items_d(rng));
            auto citations = items == 0 ? 0 : static_cast<std::uint64_t>(cit_d(rng));
            any_items = any_items || items > 0;
            stats.push_back({jc.journal, year, items, citations});
        }
    // keep at least one publication in the universe; 2007 cannot collide
    if (!any_items) stats.push_back({journals[0].journal, 2007, 10, 25});

    return Universe::validate(journals, stats);
}

// A record of 1..6 publications drawn from the universe's journals and years.
inline PublicationRecord random_record(std::mt19937_64& rng, const Universe& u) {
    const auto& journals = u.journals();
    const auto& years = u.years();
    std::uniform_int_distribution<std::size_t> j_d(0, journals.size() - 1);
    std::uniform_int_distribution<std::size_t> y_d(0, years.size() - 1);
    std::uniform_int_distribution<int> n_d(1, 6);
    std::uniform_int_distribution<int> c_d(0, 30);

    PublicationRecord record{"record", {}};
    const int n = n_d(rng);
    for (int i = 0; i < n; ++i)
        record.publications.push_back({journals[j_d(rng)].journal, years[y_d(rng)],
                                       static_cast<std::uint64_t>(c_d(rng))});
    return record;
}

inline void check_partition_laws(const Universe& u, const Partition& p, const Reporter& fail) {
    std::set<JournalId> seen;
    for (const auto& [key, members] : p.cells()) {
        if (members.empty()) fail("cell '" + key.str() + "' has no members");
        for (const auto& id : members) {
            if (!seen.insert(id).second)
                fail("journal '" + id + "' appears in more than one cell");
            if (CellKey::of(u.classification(id).categories) != key)
                fail("journal '" + id + "' sits in cell '" + key.str() +
                     "' but is classified differently");
            if (p.cell_of(id) != key)
                fail("cell_of('" + id + "') disagrees with the cell listing");
        }
    }
    if (seen.size() != u.journals().size())
        fail("cells cover " + std::to_string(seen.size()) + " of " +
             std::to_string(u.journals().size()) + " journals");
}

inline void check_domain_nesting(std::mt19937_64& rng, const Universe& u, const Partition& p,
                                 const Reporter& fail) {
    auto record = random_record(rng, u);
    auto dj = partnorm::reference_domain(record, p, u, partnorm::DomainKind::journal);
    auto dp = partnorm::reference_domain(record, p, u, partnorm::DomainKind::partition);
    auto df = partnorm::reference_domain(record, p, u, partnorm::DomainKind::field);

    for (const auto& [id, w] : dj.weights) {
        if (!dp.contains(id)) fail("journal domain member '" + id + "' missing from D_p");
        if (w != 1.0) fail("journal domain weight of '" + id + "' is not 1");
    }
    for (const auto& [id, w] : dp.weights) {
        if (!df.contains(id)) fail("partition domain member '" + id + "' missing from D_f");
        if (w != 1.0) fail("partition domain weight of '" + id + "' is not 1");
    }
    for (const auto& [id, w] : df.weights)
        if (!(w > 0.0 && w <= 1.0))
            fail("field domain weight of '" + id + "' is " + std::to_string(w));
}

// Total citations of one cell (or all cells) across all years; the world
// average is only defined where there is citation mass.
inline std::uint64_t citation_mass(const Universe& u, const std::vector<JournalId>& journals) {
    std::uint64_t total = 0;
    for (const auto& id : journals)
        for (int year : u.years()) total += u.counts(id, year).citations;
    return total;
}

inline void check_world_average(const Universe& u, const Partition& p, const Reporter& fail) {
    std::vector<JournalId> all;
    for (const auto& jc : u.journals()) all.push_back(jc.journal);

    auto expect_one = [&](double got, const std::string& what) {
        if (std::abs(got - 1.0) > 1e-12)
            fail(what + " is " + std::to_string(got) + ", expected 1");
    };

    if (citation_mass(u, all) > 0) {
        expect_one(partnorm::world_average(u, p, Aggregation::global), "global world average");
        expect_one(partnorm::world_average(u, p, Aggregation::per_publication),
                   "per-publication world average");
    }
    for (const auto& [key, members] : p.cells()) {
        if (citation_mass(u, members) == 0) continue;
        expect_one(partnorm::world_average_cell(u, p, key, Aggregation::global),
                   "global world average of cell '" + key.str() + "'");
        expect_one(partnorm::world_average_cell(u, p, key, Aggregation::per_publication),
                   "per-publication world average of cell '" + key.str() + "'");
    }
}

// Universe whose per-cell rates are small integers: every row's citations are
// rate * items, so cell sums divide exactly. A record paying A times the cell
// rate everywhere must score exactly A under both partition variants.
inline void check_a_scaling(std::mt19937_64& rng, const Reporter& fail) {
    auto u = random_universe(rng);

    std::map<std::pair<CellKey, int>, std::uint64_t> rate;
    std::uniform_int_distribution<int> rate_d(1, 8);
    std::vector<JournalYearStats> stats;
    for (const auto& row : u.stats_rows()) {
        auto key = std::make_pair(CellKey::of(u.classification(row.journal).categories),
                                  row.year);
        auto [it, inserted] = rate.emplace(key, 0);
        if (inserted) it->second = static_cast<std::uint64_t>(rate_d(rng));
        stats.push_back({row.journal, row.year, row.items, row.items * it->second});
    }
    auto integral = Universe::validate(u.journals(), stats);
    auto p = Partition::build(integral);

    std::uniform_int_distribution<int> a_d(1, 1000);
    const auto a = static_cast<std::uint64_t>(a_d(rng));

    PublicationRecord record{"scaled", {}};
    for (const auto& jc : integral.journals())
        for (int year : integral.years()) {
            auto r = partnorm::try_cell_rate(p.cell_of(jc.journal), year, integral);
            if (!r) continue;
            auto whole = static_cast<std::uint64_t>(*r);
            if (static_cast<double>(whole) != *r) {
                fail("integral universe produced non-integer rate " + std::to_string(*r));
                return;
            }
            record.publications.push_back({jc.journal, year, a * whole});
        }
    if (record.publications.empty()) return;

    auto global = partnorm::compute_indicator(record, Variant::p_nmcr, integral, p);
    if (global.value != static_cast<double>(a))
        fail("P-NMCR of the A-scaled record is " + std::to_string(global.value) +
             ", expected exactly " + std::to_string(a));
    auto per_pub = partnorm::compute_indicator(record, Variant::p_mncr, integral, p);
    if (per_pub.value != static_cast<double>(a))
        fail("P-MNCR of the A-scaled record is " + std::to_string(per_pub.value) +
             ", expected exactly " + std::to_string(a));
}

// With every journal in exactly one category, cells and categories coincide,
// so the partition and standard variants must agree to the bit.
inline void check_variant_collapse(std::mt19937_64& rng, const Reporter& fail) {
    std::uniform_int_distribution<int> n_cats_d(1, 4);
    std::uniform_int_distribution<int> n_journals_d(2, 10);
    const int n_cats = n_cats_d(rng);
    const int n_journals = n_journals_d(rng);
    std::uniform_int_distribution<int> cat_d(1, n_cats);

    std::vector<JournalClassification> journals;
    for (int j = 0; j < n_journals; ++j)
        journals.push_back({"j_" + std::to_string(j + 1),
                            "",
                            {"C_" + std::to_string(cat_d(rng))}});

    std::vector<JournalYearStats> stats;
    std::uniform_int_distribution<int> items_d(0, 50);
    std::uniform_int_distribution<int> cit_d(0, 200);
    bool any_items = false;
    for (const auto& jc : journals)
        for (int year = 2004; year <= 2006; ++year) {
            auto items = static_cast<std::uint64_t>(items_d(rng));
            auto citations = items == 0 ? 0 : static_cast<std::uint64_t>(cit_d(rng));
            any_items = any_items || items > 0;
            stats.push_back({jc.journal, year, items, citations});
        }
    if (!any_items) stats[0].items = 10, stats[0].citations = 25;

    auto u = Universe::validate(journals, stats);
    auto p = Partition::build(u);
    auto record = random_record(rng, u);

    auto compare = [&](Variant partition_variant, Variant standard_variant) {
        std::optional<partnorm::IndicatorResult> a, b;
        std::optional<ErrorCode> ea, eb;
        try {
            a = partnorm::compute_indicator(record, partition_variant, u, p);
        } catch (const Error& e) {
            ea = e.code();
        }
        try {
            b = partnorm::compute_indicator(record, standard_variant, u, p);
        } catch (const Error& e) {
            eb = e.code();
        }
        if (ea != eb) {
            fail("single-category collapse: one variant threw, the other did not");
            return;
        }
        if (!a) return;
        if (a->value != b->value || a->n_used != b->n_used || a->n_excluded != b->n_excluded)
            fail("single-category collapse: " + std::string(partnorm::to_string(partition_variant)) +
                 " and " + partnorm::to_string(standard_variant) + " disagree");
    };
    compare(Variant::p_nmcr, Variant::nmcr);
    compare(Variant::p_mncr, Variant::mncr);
}

inline void check_harmonic_vs_arithmetic(std::mt19937_64& rng, const Universe& u,
                                         const Reporter& fail) {
    std::vector<const JournalClassification*> multi;
    for (const auto& jc : u.journals())
        if (jc.categories.size() > 1) multi.push_back(&jc);
    if (multi.empty()) return;

    std::uniform_int_distribution<std::size_t> pick(0, multi.size() - 1);
    const auto& jc = *multi[pick(rng)];
    for (int year : u.years()) {
        Publication pub{jc.journal, year, 0};
        auto arith = partnorm::try_standard_expected(pub, u, MeanKind::arithmetic);
        auto harm = partnorm::try_standard_expected(pub, u, MeanKind::harmonic);
        if (arith.has_value() != harm.has_value()) {
            fail("blend definedness differs between means for '" + jc.journal + "'");
            continue;
        }
        if (!arith) continue;
        if (*harm > *arith + 1e-12 * std::max(1.0, *arith))
            fail("harmonic blend " + std::to_string(*harm) + " exceeds arithmetic " +
                 std::to_string(*arith) + " for '" + jc.journal + "'");
    }
}

inline void check_spearman_closed_form(std::mt19937_64& rng, const Reporter& fail) {
    std::uniform_int_distribution<int> n_d(5, 15);
    const int n = n_d(rng);
    std::vector<double> x, y;
    for (int i = 1; i <= n; ++i) {
        x.push_back(i);
        y.push_back(i);
    }
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);

    // values are 1..n, so each value is its own rank
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) d2 += (x[static_cast<std::size_t>(i)] -
                                       y[static_cast<std::size_t>(i)]) *
                                      (x[static_cast<std::size_t>(i)] -
                                       y[static_cast<std::size_t>(i)]);
    const double nn = n;
    const double closed = 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));

    auto got = partnorm::spearman(x, y).r;
    if (std::abs(got - closed) > 1e-12)
        fail("spearman " + std::to_string(got) + " differs from its closed form " +
             std::to_string(closed));
}

// Student-t density, straight from lgamma; deliberately shares nothing with
// the incomplete-beta path under test.
inline double t_pdf(double x, double dof) {
    double log_norm = std::lgamma((dof + 1.0) / 2.0) - std::lgamma(dof / 2.0) -
                      0.5 * std::log(dof * std::acos(-1.0));
    return std::exp(log_norm - (dof + 1.0) / 2.0 * std::log1p(x * x / dof));
}

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double eps,
                               int depth) {
    double m = (a + b) / 2.0;
    double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    double m = (a + b) / 2.0;
    double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), eps, 40);
}

inline void check_p_value_quadrature(std::mt19937_64& rng, const Reporter& fail) {
    std::uniform_real_distribution<double> r_d(-0.95, 0.95);
    std::uniform_int_distribution<std::size_t> n_d(3, 30);
    const double r = r_d(rng);
    const std::size_t n = n_d(rng);

    const double dof = static_cast<double>(n - 2);
    const double t = std::abs(r) * std::sqrt(dof / (1.0 - r * r));
    // the tail in the direction of the sign: 1/2 minus the mass from 0 to |t|
    const double oracle =
        0.5 - integrate([&](double x) { return t_pdf(x, dof); }, 0.0, t, 1e-9);

    const double got = partnorm::one_tailed_p(r, n);
    if (std::abs(got - oracle) > 1e-6)
        fail("one-tailed p " + std::to_string(got) + " differs from the quadrature oracle " +
             std::to_string(oracle) + " at r=" + std::to_string(r) +
             ", n=" + std::to_string(n));
}

}  // namespace detail

inline Outcome run(int universes, std::uint64_t seed = kDefaultSeed) {
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int iter = 0; iter < universes; ++iter) {
        ++out.universes;
        auto fail = [&](const std::string& message) {
            ++out.failures_total;
            if (out.failures.size() < 20)
                out.failures.push_back("universe " + std::to_string(iter) + ": " + message);
        };
        try {
            auto u = detail::random_universe(rng);
            auto p = partnorm::Partition::build(u);
            detail::check_partition_laws(u, p, fail);
            detail::check_domain_nesting(rng, u, p, fail);
            detail::check_world_average(u, p, fail);
            detail::check_harmonic_vs_arithmetic(rng, u, fail);
            detail::check_a_scaling(rng, fail);
            detail::check_variant_collapse(rng, fail);
            detail::check_spearman_closed_form(rng, fail);
            detail::check_p_value_quadrature(rng, fail);
        } catch (const std::exception& e) {
            fail(std::string("unexpected exception: ") + e.what());
        }
    }
    return out;
}

}  // namespace property_suite
