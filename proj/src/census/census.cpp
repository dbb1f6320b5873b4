#include "autsys/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include "autsys/document.hpp"
#include "autsys/error.hpp"
#include "autsys/fixtures.hpp"
#include "autsys/gen.hpp"
#include "autsys/minors.hpp"
#include "autsys/oracle.hpp"
#include "autsys/order.hpp"
#include "autsys/quotient.hpp"

namespace autsys::census {
namespace {

class Tally {
public:
    Tally(int id, std::string title) : start_(std::chrono::steady_clock::now())
    {
        result_.id = id;
        result_.title = std::move(title);
    }

    template <typename Describe>
    void check(bool ok, Describe&& describe)
    {
        ++result_.checked;
        if (ok)
            return;
        if (result_.failures++ == 0)
            result_.detail = describe();
    }

    void fail(const std::string& what) { check(false, [&] { return what; }); }

    Result finish()
    {
        result_.passed = result_.failures == 0 && result_.checked > 0;
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

private:
    Result result_;
    std::chrono::steady_clock::time_point start_;
};

oracle::Family masks(const AutonomousSystem& system)
{
    oracle::Family f;
    for (Subset m : system.family())
        f.push_back(m.bits());
    return f;
}

std::string show(const AutonomousSystem& system) { return to_json(system).dump(); }

// Runs `body`, turning library exceptions into a recorded failure.
template <typename Body>
void guarded(Tally& tally, const AutonomousSystem& system, Body&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        tally.fail(std::string("exception on ") + show(system) + ": " + e.what());
    }
}

bool witness_ok(const WitnessSequence& w, const AutonomousSystem& target)
{
    return verify_witness(w, target);
}

} // namespace

std::vector<AutonomousSystem> systems(std::size_t max_n)
{
    std::vector<AutonomousSystem> out;
    for (std::size_t n = 0; n <= max_n; ++n)
        enumerate_all(n, true, [&](const AutonomousSystem& s) { out.push_back(s); });
    return out;
}

Result poset_characterization(const std::vector<AutonomousSystem>& census)
{
    Tally tally(1, "poset characterization: intersection-closed <=> no P3 subdot <=> no P3 induced minor");
    const AutonomousSystem p3 = p_n(3);
    for (const auto& system : census)
        guarded(tally, system, [&] {
            const bool closed = is_poset(system).poset;
            const auto subdot = subdot_reachable(system, p3);
            const auto minor = induced_minor(system, p3);
            bool ok = closed == !subdot && closed == !minor;
            if (subdot)
                ok = ok && subdot->is_subdot() && witness_ok(*subdot, p3);
            if (minor)
                ok = ok && witness_ok(*minor, p3);
            tally.check(ok, [&] {
                return show(system) + ": intersection-closed=" + std::to_string(closed) +
                       " P3-subdot=" + std::to_string(subdot.has_value()) +
                       " P3-minor=" + std::to_string(minor.has_value());
            });
        });
    return tally.finish();
}

Result p3_extraction(const std::vector<AutonomousSystem>& census)
{
    Tally tally(2, "P3 extraction from every non-poset yields a verified subdot witness");
    const AutonomousSystem p3 = p_n(3);
    for (const auto& system : census) {
        if (is_poset(system))
            continue;
        guarded(tally, system, [&] {
            const auto pair = find_nonintersecting_pair(system);
            if (!pair) {
                tally.fail(show(system) + ": no non-intersecting pair in a non-poset");
                return;
            }
            const WitnessSequence w = extract_p3(system, pair->a, pair->b);
            tally.check(w.is_subdot() && witness_ok(w, p3) && isomorphic(w.final_system(), p3).has_value(),
                        [&] { return show(system) + ": P3 witness failed verification"; });
        });
    }
    return tally.finish();
}

Result p4_theorem(const std::vector<AutonomousSystem>& census, const Options& options)
{
    Tally tally(3, "P4 theorem: bidirectional pair <=> P4 induced minor; extraction verifies");
    const AutonomousSystem p4 = p_n(4);
    std::size_t pair_only = 0;
    std::size_t minor_only = 0;
    auto one = [&](const AutonomousSystem& system) {
        guarded(tally, system, [&] {
            const auto pair = find_bidirectional_pair(system);
            const auto minor = induced_minor(system, p4);
            pair_only += pair && !minor;
            minor_only += !pair && minor;
            bool ok = pair.has_value() == minor.has_value();
            if (minor)
                ok = ok && witness_ok(*minor, p4);
            if (pair) {
                const WitnessSequence w = extract_p4(system, *pair);
                ok = ok && witness_ok(w, p4);
            }
            tally.check(ok, [&] {
                return show(system) + ": bidirectional=" + std::to_string(pair.has_value()) +
                       " P4-minor=" + std::to_string(minor.has_value());
            });
        });
    };
    for (const auto& system : census)
        one(system);
    const GenMethod methods[] = {GenMethod::ChainClosure, GenMethod::SubdotOfLarger, GenMethod::FromRandomPoset};
    for (std::size_t i = 0; i < options.random_samples; ++i) {
        GenSpec spec{5, true, options.seed + i, methods[i % 3]};
        one(random_system(spec));
    }
    Result result = tally.finish();
    if (pair_only + minor_only > 0)
        result.detail = "pair without minor: " + std::to_string(pair_only) +
                        ", minor without pair: " + std::to_string(minor_only) + "; first: " + result.detail;
    return result;
}

Result hex6_separation()
{
    Tally tally(4, "HEX6 has P4 as an induced minor (four-cell quotient) but not as a subdot");
    const AutonomousSystem hex = fixtures::hex6();
    const AutonomousSystem p4 = p_n(4);
    guarded(tally, hex, [&] {
        tally.check(!subdot_reachable(hex, p4).has_value(), [] { return std::string("found a P4 subdot"); });
        const auto pair = find_bidirectional_pair(hex);
        if (!pair) {
            tally.fail("no bidirectional pair in HEX6");
            return;
        }
        const BidirectionalPair expected{hex.element("x"), hex.element("y"), hex.subset({"a1", "a2", "x", "y"}),
                                         hex.subset({"b1", "b2", "x", "y"})};
        tally.check(*pair == expected, [] { return std::string("unexpected bidirectional pair"); });
        const WitnessSequence w = extract_p4(hex, *pair);
        tally.check(witness_ok(w, p4), [] { return std::string("P4 witness failed verification"); });

        std::set<std::set<std::string>> cells;
        const AutonomousSystem* before = &w.source;
        for (std::size_t i = 0; i < w.steps.size(); ++i) {
            if (w.steps[i].kind == StepKind::Quotient)
                for (Subset cell : w.steps[i].partition->cells()) {
                    auto names = before->names(cell);
                    cells.emplace(names.begin(), names.end());
                }
            before = &w.intermediates[i];
        }
        const std::set<std::set<std::string>> want{{"a1", "a2"}, {"b1", "b2"}, {"x"}, {"y"}};
        tally.check(cells == want, [] { return std::string("quotient cells differ from {a1,a2},{b1,b2},{x},{y}"); });
        tally.check(induced_minor(hex, p4).has_value(), [] { return std::string("induced-minor search missed P4"); });
    });
    return tally.finish();
}

Result canonical_order_properties(const std::vector<AutonomousSystem>& census)
{
    Tally tally(5, "canonical-order properties: maximality, monotonicity, downward closure, intersections");
    for (const auto& system : census)
        guarded(tally, system, [&] {
            const oracle::Family family = masks(system);
            const auto members = system.family();
            std::vector<CanonicalOrder> orders;
            for (Subset a : members)
                orders.push_back(canonical_order(system, a));

            for (std::size_t i = 0; i < members.size(); ++i) {
                const Subset a = members[i];
                const CanonicalOrder& order = orders[i];
                // partial order, and agreement with the scan-based definition
                bool ok = true;
                for (Element x : a)
                    for (Element y : a) {
                        ok = ok && order.leq(x, y) == oracle::context_leq(family, a.bits(), x.index, y.index);
                        ok = ok && (x == y || !(order.leq(x, y) && order.leq(y, x)));
                        for (Element z : a)
                            ok = ok && (!(order.leq(x, y) && order.leq(y, z)) || order.leq(x, z));
                    }
                tally.check(ok, [&] { return show(system) + ": canonical order is not a partial order"; });

                // minimal members containing x have x as their maximum
                for (Element x : a) {
                    const Subset b = min_aut_containing(system, a, x);
                    bool minimal = b.contains(x) && b.subset_of(a) && system.is_member(b);
                    for (Subset m : members)
                        if (m.proper_subset_of(b) && m.contains(x))
                            minimal = false;
                    const CanonicalOrder ob = canonical_order(system, b);
                    bool maximum = true;
                    for (Element z : b)
                        maximum = maximum && ob.leq(z, x);
                    tally.check(minimal && maximum, [&] { return show(system) + ": minimal-set maximality failed"; });
                }

                for (std::size_t j = 0; j < members.size(); ++j) {
                    const Subset b = members[j];
                    if (!a.subset_of(b))
                        continue;
                    // a ⊆ b: strict pairs in b's context persist in a's
                    bool mono = true;
                    for (Element x : a)
                        for (Element y : a)
                            if (orders[j].less(x, y) && !order.less(x, y))
                                mono = false;
                    tally.check(mono, [&] { return show(system) + ": monotonicity failed"; });
                    // members inside b are down-closed in b's order
                    tally.check(orders[j].is_down_closed(a), [&] { return show(system) + ": downward closure failed"; });
                }

                // S ⊆ A is down-closed iff it is the meet of members of A above it
                for (std::uint64_t s = a.bits();; s = (s - 1) & a.bits()) {
                    const bool closed = order.is_down_closed(Subset{s});
                    const bool meet = oracle::meet_above(family, a.bits(), s) == s;
                    tally.check(closed == meet, [&] { return show(system) + ": intersection characterization failed"; });
                    if (s == 0)
                        break;
                }
            }
        });
    return tally.finish();
}

Result quotient_maximality(const std::vector<AutonomousSystem>& census)
{
    Tally tally(6, "quotient by a map equals the brute-force join of all compatible target structures");
    for (const auto& system : census)
        guarded(tally, system, [&] {
            const oracle::Family family = masks(system);
            for (const auto& assignment : oracle::set_partitions(system.size(), 3)) {
                std::size_t m = 0;
                for (unsigned c : assignment)
                    m = std::max<std::size_t>(m, c + 1);
                std::vector<std::string> cells;
                for (std::size_t c = 0; c < m; ++c)
                    cells.push_back("c" + std::to_string(c));
                const GroundMap f(system.labels(), cells, assignment);
                const AutonomousSystem image = quotient_by_map(system, f);
                const oracle::Family expected = oracle::maximal_quotient(family, assignment, m);
                tally.check(masks(image) == expected && is_homomorphism(system, image, f) &&
                                oracle::is_valid(masks(image), m),
                            [&] { return show(system) + ": quotient mismatch for map onto " + std::to_string(m); });
            }
        });
    return tally.finish();
}

Result join_least_upper_bound()
{
    Tally tally(7, "join is valid, contains both inputs, and lies below every common upper bound");
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto all = enumerate_all(n, false);
        const auto bounds = oracle::all_valid_families(n, false);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j) {
                const AutonomousSystem pair[] = {all[i], all[j]};
                const AutonomousSystem joined = join(pair);
                const oracle::Family fj = masks(joined);
                const oracle::Family fi = masks(all[i]);
                const oracle::Family fk = masks(all[j]);
                bool ok = joined.labels() == all[i].labels() && oracle::is_valid(fj, n) &&
                          oracle::is_subfamily(fi, fj) && oracle::is_subfamily(fk, fj);
                for (const auto& upper : bounds)
                    if (oracle::is_subfamily(fi, upper) && oracle::is_subfamily(fk, upper))
                        ok = ok && oracle::is_subfamily(fj, upper);
                tally.check(ok, [&] { return "join of " + show(all[i]) + " and " + show(all[j]); });
            }
    }
    return tally.finish();
}

Result poset_round_trip(const std::vector<AutonomousSystem>& census)
{
    Tally tally(8, "poset round trips: to_poset(from_poset(R)) = R and from_poset(to_poset(P)) = P");
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto labels = default_labels(n);
        for (const auto& below : oracle::all_strict_orders(n)) {
            std::vector<std::pair<std::string, std::string>> pairs;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x)
                    if ((below[y] >> x) & 1U)
                        pairs.emplace_back(labels[x], labels[y]);
            const PartialOrder order = PartialOrder::from_pairs(labels, pairs);
            const AutonomousSystem system = from_poset(order);
            const auto back = to_poset(system);
            tally.check(masks(system) == oracle::down_sets(below) && back && *back == order,
                        [&] { return "order round trip failed on " + show(system); });
        }
    }
    for (const auto& system : census) {
        if (!is_poset(system))
            continue;
        const auto order = to_poset(system);
        tally.check(order && from_poset(*order) == system, [&] { return "system round trip failed on " + show(system); });
    }
    return tally.finish();
}

Result fixture_checks()
{
    Tally tally(9, "fixtures: P4/{a} ~ P3, P4\\{a} is a 3-chain, HEX6 four-cell quotient ~ P4");
    const AutonomousSystem p4 = fixtures::p4();
    const AutonomousSystem hex = fixtures::hex6();
    const Subset a = p4.subset({"a"});
    tally.check(isomorphic(contraction(p4, a), p_n(3)).has_value(), [] { return std::string("P4/{a} is not P3"); });
    const AutonomousSystem chain =
        from_poset(PartialOrder::from_pairs({"b", "x", "y"}, {{"b", "y"}, {"y", "x"}}));
    tally.check(deletion(p4, a) == chain, [] { return std::string("P4\\{a} is not the chain b < y < x"); });
    const Partition cells = Partition::from_names(hex, {{"a1", "a2"}, {"x"}, {"y"}, {"b1", "b2"}});
    tally.check(isomorphic(quotient_by_partition(hex, cells), p_n(4)).has_value(),
                [] { return std::string("HEX6 quotient is not P4"); });
    return tally.finish();
}

Result enumerator_cross_validation()
{
    Tally tally(10, "backtracking and naive-filter enumerators agree at n <= 3");
    for (std::size_t n = 0; n <= 3; ++n)
        for (bool normalized : {false, true}) {
            std::vector<oracle::Family> fast;
            enumerate_all(n, normalized, [&](const AutonomousSystem& s) { fast.push_back(masks(s)); });
            const auto slow = oracle::all_valid_families(n, normalized);
            const std::set<oracle::Family> fast_set(fast.begin(), fast.end());
            const std::set<oracle::Family> slow_set(slow.begin(), slow.end());
            tally.check(fast.size() == slow.size() && fast_set.size() == fast.size() && fast_set == slow_set, [&] {
                return "n=" + std::to_string(n) + (normalized ? " normalized" : "") + ": backtracking " +
                       std::to_string(fast.size()) + " vs naive " + std::to_string(slow.size());
            });
        }
    return tally.finish();
}

std::vector<Result> run_all(const Options& options, const std::function<void(const Result&)>& report)
{
    const std::vector<AutonomousSystem> census = systems(options.max_n);
    std::vector<Result> results;
    auto push = [&](Result r) {
        if (report)
            report(r);
        results.push_back(std::move(r));
    };
    push(poset_characterization(census));
    push(p3_extraction(census));
    push(p4_theorem(census, options));
    push(hex6_separation());
    push(canonical_order_properties(census));
    push(quotient_maximality(census));
    push(join_least_upper_bound());
    push(poset_round_trip(census));
    push(fixture_checks());
    push(enumerator_cross_validation());
    return results;
}

std::string format(const Result& result)
{
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", result.seconds);
    std::string line = std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + ". " +
                       result.title + " (checked " + std::to_string(result.checked) + ", " +
                       std::to_string(result.failures) + " failures, " + timing + ")";
    if (!result.detail.empty())
        line += "\n       first failure: " + result.detail;
    return line;
}

} // namespace autsys::census
