#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toricdm/errors.hpp"

using namespace toricdm;

namespace {

ErrorKind parse_kind(const std::string& text) {
    try {
        parse_document(json::parse(text));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::NotAFan;
}

}  // namespace

TEST_CASE("documents round trip") {
    std::vector<std::string> names = fixtures::complete_fans();
    for (const auto& n : fixtures::subdivision_pairs()) names.push_back(n);
    for (const auto& name : names) {
        CAPTURE(name);
        InputDocument doc = read_document(fixtures::data(name));
        json j = to_json(doc);
        InputDocument again = parse_document(json::parse(j.dump()));
        CHECK(to_json(again) == j);
        CHECK(build_fan(again) == build_fan(doc));
        CHECK(parse_document(json{{"document", j}, {"extra", 1}}).rays.size() == doc.rays.size());
        if (doc.subdivision) {
            SubdivisionPair p = build_pair(again);
            CHECK(p.fine.ray_count() == doc.rays.size() + doc.subdivision->rays.size());
        }
    }
}

TEST_CASE("fans serialize to documents that rebuild them") {
    StackyFan s = fixtures::fan("mbar11.json");
    CHECK(build_fan(parse_document(to_json(document_of(s)))) == s);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(read_document(fixtures::data("malformed.json")), Error);
    CHECK_THROWS_AS(read_document(fixtures::data("missing.json")), Error);
    CHECK(parse_kind("[]") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"rays": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": -1}, "rays": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1, "torsion": [0]}, "rays": []})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1}, "rays": [{"free": [1, 2]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1}, "rays": [{"free": [1]}], "cones": [[2]]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1}, "rays": [{"free": [1]}], "cones": [[0]]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1}, "rays": [{"free": ["x"]}]})") == ErrorKind::ParseError);
    CHECK(parse_kind(R"({"group": {"rank": 1}, "rays": [], "subdivision": {"rays": []}})") == ErrorKind::ParseError);
    CHECK_THROWS_AS(build_pair(read_document(fixtures::data("p121.json"))), Error);
}

TEST_CASE("big integers survive as strings") {
    InputDocument doc = parse_document(json::parse(
        R"({"group": {"rank": 1}, "rays": [{"free": ["123456789012345678901234567890"]}, {"free": [-1]}], "cones": [[1], [2]]})"));
    CHECK(doc.rays[0].free[0] == Integer("123456789012345678901234567890"));
    CHECK(to_json(doc)["rays"][0]["free"][0] == "123456789012345678901234567890");
}

TEST_CASE("formatting") {
    CHECK(rational_string(Rational(-4, 6)) == "-2/3");
    CHECK(dims_string(GradedDims{{Rational(0), 1}, {Rational(1, 2), 3}}) == "0: 1, 1/2: 3");
    CHECK(cone_string({0, 2}) == "{1,3}");
    CHECK(to_json(Rational(3, 1)) == "3");
}
