#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <fairlist/fairness.hpp>

#include "support/oracles.hpp"
#include "support/synth.hpp"

using namespace fairlist;

namespace {

GroupConfusion random_confusion(std::mt19937_64& rng, std::size_t cap = 20) {
    GroupConfusion c;
    for (auto* g : {&c.g0, &c.g1}) {
        g->tp = rng() % (cap + 1);
        g->fp = rng() % (cap + 1);
        g->tn = rng() % (cap + 1);
        g->fn = rng() % (cap + 1);
    }
    return c;
}

GroupConfusion swapped(const GroupConfusion& c) {
    return {c.g1, c.g0};
}

} // namespace

TEST_CASE("metric names round trip") {
    for (const Metric m : kAllMetrics) CHECK(parse_metric(metric_name(m)) == m);
    CHECK_THROWS_AS(parse_metric("bogus"), InputError);
}

TEST_CASE("confusion splits counts by group, label and prediction") {
    // predictions 1010, labels 1100, group 0101, walked sample by sample:
    // s0 (p1,y1,g0) TP0; s1 (p0,y1,g1) FN1; s2 (p1,y0,g0) FP0; s3 (p0,y0,g1) TN1.
    BinaryDataset data;
    data.num_samples = 4;
    data.labels = BitVector::from_string("1100");
    data.group = BitVector::from_string("0101");
    const auto c = confusion(BitVector::from_string("1010"), data);
    CHECK(c.g0.tp == 1);
    CHECK(c.g0.fp == 1);
    CHECK(c.g0.tn == 0);
    CHECK(c.g0.fn == 0);
    CHECK(c.g1.tp == 0);
    CHECK(c.g1.fp == 0);
    CHECK(c.g1.tn == 1);
    CHECK(c.g1.fn == 1);
}

TEST_CASE("confusion matches a per-sample tally on random data") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 40; ++round) {
        fairlist::test::SynthSpec spec;
        spec.num_samples = 1 + rng() % 200;
        spec.force_both_groups = false;
        const auto inst = fairlist::test::make_instance(rng(), spec);
        BitVector preds(inst.data.num_samples);
        for (std::size_t i = 0; i < inst.data.num_samples; ++i)
            if (rng() & 1) preds.set(i);

        const auto c = confusion(preds, inst.data);
        GroupCounts expect0, expect1;
        for (std::size_t i = 0; i < inst.data.num_samples; ++i) {
            GroupCounts& t = inst.data.group.test(i) ? expect1 : expect0;
            const bool p = preds.test(i), y = inst.data.labels.test(i);
            if (p && y) t.tp++;
            else if (p) t.fp++;
            else if (y) t.fn++;
            else t.tn++;
        }
        CHECK(c.g0.tp == expect0.tp);
        CHECK(c.g0.fp == expect0.fp);
        CHECK(c.g0.tn == expect0.tn);
        CHECK(c.g0.fn == expect0.fn);
        CHECK(c.g1.tp == expect1.tp);
        CHECK(c.g1.fp == expect1.fp);
        CHECK(c.g1.tn == expect1.tn);
        CHECK(c.g1.fn == expect1.fn);
    }
}

TEST_CASE("statistical parity is the selection-rate gap") {
    // group0 selects 3/4, group1 selects 1/4
    GroupConfusion c;
    c.g0 = {2, 1, 1, 0}; // tp fp tn fn: selected 3 of 4
    c.g1 = {1, 0, 2, 1}; // selected 1 of 4
    CHECK(unfairness(c, Metric::StatisticalParity) == doctest::Approx(0.5));
}

TEST_CASE("zero denominators silence the affected term") {
    GroupConfusion c;
    c.g0 = {0, 0, 3, 2}; // nobody selected in g0 -> PPV undefined
    c.g1 = {2, 1, 1, 1};
    CHECK(unfairness(c, Metric::PredictiveParity) == 0.0);
    // NPV is fine in both groups, so CUAE reduces to the NPV term
    const double npv0 = 3.0 / 5.0, npv1 = 1.0 / 2.0;
    CHECK(unfairness(c, Metric::ConditionalUseAccuracy) ==
          doctest::Approx(npv1 - npv0 < 0 ? npv0 - npv1 : npv1 - npv0));

    GroupConfusion empty_group;
    empty_group.g0 = {0, 0, 0, 0};
    empty_group.g1 = {1, 1, 1, 1};
    for (const Metric m : kAllMetrics)
        CHECK(unfairness(empty_group, m) == 0.0);
}

TEST_CASE("identities and ranges over random confusion tables") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 10000; ++round) {
        const auto c = random_confusion(rng);
        const double sp = unfairness(c, Metric::StatisticalParity);
        const double pp = unfairness(c, Metric::PredictiveParity);
        const double pe = unfairness(c, Metric::PredictiveEquality);
        const double eopp = unfairness(c, Metric::EqualOpportunity);
        const double eodds = unfairness(c, Metric::EqualizedOdds);
        const double cuae = unfairness(c, Metric::ConditionalUseAccuracy);

        // shared-subexpression identity holds to the last bit
        CHECK(eodds == pe + eopp);
        CHECK(cuae >= pp);
        for (const double v : {sp, pp, pe, eopp}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        for (const double v : {eodds, cuae}) {
            CHECK(v >= 0.0);
            CHECK(v <= 2.0);
        }

        // swapping the groups changes nothing, exactly
        const auto s = swapped(c);
        for (const Metric m : kAllMetrics)
            CHECK(unfairness(c, m) == unfairness(s, m));
    }
}

TEST_CASE("unfairness agrees with the per-sample oracle") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 50; ++round) {
        fairlist::test::SynthSpec spec;
        spec.num_samples = 1 + rng() % 100;
        spec.force_both_groups = false;
        const auto inst = fairlist::test::make_instance(rng(), spec);
        BitVector preds(inst.data.num_samples);
        for (std::size_t i = 0; i < inst.data.num_samples; ++i)
            if (rng() & 1) preds.set(i);
        const auto c = confusion(preds, inst.data);
        for (const Metric m : kAllMetrics)
            CHECK(unfairness(c, m) ==
                  fairlist::test::oracle_unfairness(preds, inst.data, m));
    }
}

TEST_CASE("audit reports accuracy, rates and degeneracy") {
    fairlist::test::SynthSpec spec;
    spec.num_samples = 40;
    const auto inst = fairlist::test::make_instance(4242, spec);

    RuleList constant;
    constant.default_prediction = true;
    const std::vector<Metric> all(kAllMetrics.begin(), kAllMetrics.end());
    const auto report = audit(constant, inst.data, inst.set, all);

    const double base = static_cast<double>(inst.data.positive_count()) / 40.0;
    CHECK(report.accuracy == doctest::Approx(base));
    REQUIRE(report.entries.size() == 6);
    // constant classifier: SP, PE, EOpp, EOdds all zero
    CHECK(report.entries[0].value == 0.0);
    CHECK(report.entries[2].value == 0.0);
    CHECK(report.entries[3].value == 0.0);
    CHECK(report.entries[4].value == 0.0);
    // constant-1 predictions make NPV/FNR denominators vanish nowhere but
    // TN+FN=0 in both groups: NPV degenerate, so CUAE == PP exactly
    CHECK(report.entries[5].value == report.entries[1].value);
    CHECK(report.entries[5].degenerate);

    const auto csv = audit_csv(report);
    CHECK(csv.rfind("metric,value,rate_group0,rate_group1,", 0) == 0);
    CHECK(csv.find("\naccuracy,") != std::string::npos);
    CHECK(csv.find("\nsp,0,") != std::string::npos);

    const auto table = audit_table(report);
    CHECK(table.find("samples: 40") != std::string::npos);
    CHECK(table.find("degenerate") != std::string::npos);
}
