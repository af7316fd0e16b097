#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "adp/applications.hpp"
#include "adp/instance_io.hpp"
#include "support.hpp"

using namespace adp;

TEST_CASE("text format parses ranges, sets, precedences and meta") {
    const std::string text = "alldiffprec 1\n"
                             "meta title exams\n"
                             "var a range 1 5\n"
                             "var b set 2 4 7\n"
                             "prec a b\n";
    const InstanceDoc doc = parse_instance_text(text);
    CHECK(doc.names == std::vector<std::string>{"a", "b"});
    CHECK(doc.domains[0].size() == 5);
    CHECK(doc.domains[1] == std::vector<int64_t>{2, 4, 7});
    CHECK(doc.precedences == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(doc.meta.at("title") == "exams");
    const Instance inst = doc.to_instance();
    CHECK(inst.size() == 2);
    CHECK(inst.graph.successors(0) == std::vector<int>{1});
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse_instance_text("var a range 1 5\n"), ParseError); // missing header
    CHECK_THROWS_AS(parse_instance_text("alldiffprec 2\nvar a range 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("alldiffprec 1\nvar a range 5 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("alldiffprec 1\nvar a set\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("alldiffprec 1\nvar a range 1 2\nprec a b\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_text("alldiffprec 1\nvar a range 1 2\nbogus\n"), ParseError);
    CHECK_THROWS_AS(
        parse_instance_text("alldiffprec 1\nvar a range 1 2\nvar a range 1 2\n"), ParseError);
}

TEST_CASE("canonical text round-trips through parse and serialize") {
    std::mt19937_64 rng(89);
    RandomInstanceParams params{7, 9, 0.3};
    for (int round = 0; round < 100; ++round) {
        const Instance inst = random_instance(rng, params);
        const InstanceDoc doc = doc_from_instance(inst);
        const std::string text = serialize_instance(doc);
        const InstanceDoc reparsed = parse_instance_text(text);
        CHECK(reparsed.names == doc.names);
        CHECK(reparsed.domains == doc.domains);
        CHECK(serialize_instance(reparsed) == text);
    }
}

TEST_CASE("JSON mirror is accepted and round-trips") {
    const Instance inst = test::shared_predecessor_instance();
    const InstanceDoc doc = doc_from_instance(inst);
    const std::string json = serialize_instance_json(doc);
    const InstanceDoc reparsed = parse_instance_text(json);
    CHECK(reparsed.names == doc.names);
    CHECK(reparsed.domains == doc.domains);
    CHECK(reparsed.precedences == doc.precedences);

    CHECK_THROWS_AS(parse_instance_text("{\"version\": 7}"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("{not json"), ParseError);
}

TEST_CASE("documents preserve raw (negative) value universes") {
    const Instance inst = build_instance({{-3, -1}, {-2, 0}}, {{0, 1}});
    const InstanceDoc doc = doc_from_instance(inst, {"p", "q"});
    const std::string text = serialize_instance(doc);
    CHECK(text.find("var p set -3 -1") != std::string::npos);
    const InstanceDoc reparsed = parse_instance_text(text);
    const Instance rebuilt = reparsed.to_instance();
    CHECK(rebuilt.domains == inst.domains);
    CHECK(rebuilt.value_offset == inst.value_offset);
}
