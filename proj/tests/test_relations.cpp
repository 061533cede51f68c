#include "doctest.h"

#include <nlohmann/json.hpp>

#include "ncfgl/errors.hpp"
#include "ncfgl/relations.hpp"

using namespace ncfgl;

TEST_CASE("express solves the first commutator identity") {
    FglEngine eng(6);
    FreePoly target = commutator(eng.generator_X(1), eng.generator_X(2));
    ExpressResult r = express(target, {{"Ups[1,2]", eng.upsilon(1, 2)}});
    REQUIRE(r.status == ExpressResult::Unique);
    CHECK(r.to_text() == "6*Ups[1,2]");
    REQUIRE(r.combo.size() == 1);
    CHECK(eng.upsilon(1, 2) * r.combo[0].second == target);
}

TEST_CASE("express reconstructs module-family combinations exactly") {
    FglEngine eng(6);
    auto family = module_family(4, eng);
    REQUIRE(family.size() >= 2);
    FreePoly target = family.front().value * Int(3) - family.back().value * Int(2);
    ExpressResult r = express(target, family);
    REQUIRE(r.status == ExpressResult::Unique);
    FreePoly rebuilt;
    for (const auto& [name, c] : r.combo) {
        auto it = std::find_if(family.begin(), family.end(),
                               [&](const DictEntry& d) { return d.name == name; });
        REQUIRE(it != family.end());
        rebuilt += it->value * c;
    }
    CHECK(rebuilt == target);
    REQUIRE(r.combo.size() == 2);
    CHECK(r.combo[0].second == 3);
    CHECK(r.combo[1].second == -2);
}

TEST_CASE("express failure modes") {
    FglEngine eng(6);
    std::vector<DictEntry> dict{{"Ups[1,2]", eng.upsilon(1, 2)}};
    ExpressResult r = express(FreePoly::gen(3), dict);
    CHECK(r.status == ExpressResult::NotInSpan);
    CHECK(!r.detail.empty());
    CHECK(r.to_text() == "not in span");

    std::vector<DictEntry> dup{{"a", eng.upsilon(1, 2)}, {"b", eng.upsilon(1, 2)}};
    ExpressResult r2 = express(eng.upsilon(1, 2), dup);
    REQUIRE(r2.status == ExpressResult::NonUnique);
    FreePoly rebuilt;
    for (const auto& [name, c] : r2.combo) rebuilt += (name == "a" ? dup[0] : dup[1]).value * c;
    CHECK(rebuilt == eng.upsilon(1, 2));

    CHECK_THROWS_AS(express(FreePoly::gen(1) + FreePoly::gen(2), dict), BadInput);
    // zero entries carry no weight and are refused
    std::vector<DictEntry> zero{{"Ups[2,2]", eng.upsilon(2, 2)}};
    CHECK_THROWS_AS(express(FreePoly::gen(4), zero), BadInput);
}

TEST_CASE("generator census") {
    auto gens = commutator_generators(6);
    int w3 = 0, w6 = 0;
    for (const auto& g : gens) {
        CHECK(g.p < g.q);
        for (size_t i = 0; i + 1 < g.ivec.size(); ++i) CHECK(g.ivec[i] >= g.ivec[i + 1]);
        if (!g.ivec.empty()) CHECK(g.ivec.back() >= g.p);
        if (g.weight() == 3) ++w3;
        if (g.weight() == 6) ++w6;
    }
    CHECK(w3 == 1);
    CHECK(w6 == 8);
    // name format
    GenSpec s;
    s.ivec = {1, 1};
    s.p = 1;
    s.q = 2;
    CHECK(s.name() == "phi[1,1]Ups[1,2]");
    CHECK(s.weight() == 5);
}

TEST_CASE("freeness bookkeeping through weight 6") {
    FglEngine eng(8);
    auto rows = basis_check(6, eng);
    REQUIRE(rows.size() == 6);
    const std::vector<std::string> want_index{
        "2", "12", "96", "69120", "318504960", "4260707200873267200"};
    for (int w = 1; w <= 6; ++w) {
        const BasisRow& r = rows[w - 1];
        CHECK(r.weight == w);
        CHECK(r.count_ok);
        CHECK(r.full_rank);
        CHECK(r.rank == r.family_size);
        CHECK(r.expected == (Int(1) << (w - 1)));
        CHECK(r.index.str() == want_index[w - 1]);
    }
}

TEST_CASE("relation suite passes and serializes") {
    FglEngine eng(7);
    auto rep = verify_relation_suite(7, eng);
    CHECK(!rep.empty());
    CHECK(all_ok(rep));
    auto com = verify_commutators(eng);
    CHECK(!com.empty());
    CHECK(all_ok(com));

    auto j = nlohmann::json::parse(reports_to_json(rep));
    REQUIRE(j.is_array());
    CHECK(j.size() == rep.size());
    for (const auto& item : j) {
        CHECK(item.contains("relation"));
        CHECK(item.at("status").get<std::string>() == "ok");
    }
}
