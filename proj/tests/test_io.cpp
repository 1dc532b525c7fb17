#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superlie/catalog.hpp"
#include "superlie/io.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

using namespace superlie;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

/// The documented sample: H(1,0) over the rationals, mirror omitted.
const char* const kSample = R"({ "field": {"type": "rational"},
  "kind": "lie",
  "space": {"even": ["x1", "x2", "z"], "odd": []},
  "brackets": [ {"left": "x1", "right": "x2", "value": [["z", "1"]]} ] })";

/// Distinguishes the failure class: file-format problems must raise
/// ParseError, in-document semantic problems plain Error.
std::string failure_class(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError&) {
        return "format";
    } catch (const Error&) {
        return "semantic";
    }
    return "none";
}

std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

/// A bracket document with one entry list; pieces spliced into kSample's shape.
std::string lie_doc(const std::string& brackets) {
    return std::string(R"({"field": {"type": "rational"}, "kind": "lie", )") +
           R"("space": {"even": ["x1", "x2", "z"], "odd": ["y"]}, "brackets": )" + brackets +
           "}";
}

}  // namespace

TEST_CASE("hand-written algebra documents parse") {
    SUBCASE("the sample document gives H(1,0) literally") {
        InputDocument doc = parse_document(kSample);
        CHECK(doc.is_lie);
        CHECK(doc.field.is_rational());
        CHECK(doc.algebra.space.dims() == DimPair{3, 0});
        CHECK(doc == document_from_lie(heisenberg_even(1, 0)));
    }
    SUBCASE("the derived mirror entry is filled in") {
        InputDocument doc = parse_document(kSample);
        CHECK(doc.algebra.table[0][1][2] == Q.one());
        CHECK(doc.algebra.table[1][0][2] == -Q.one());
    }
    SUBCASE("formatting whitespace does not matter") {
        std::string compact = kSample;
        std::string spaced;
        for (char c : compact) {
            spaced += c;
            if (c == ',') spaced += "\n\t   ";
        }
        CHECK(parse_document(compact) == parse_document(spaced));
    }
    SUBCASE("omitted brackets are zero") {
        InputDocument doc = parse_document(lie_doc("[]"));
        for (const auto& row : doc.algebra.table)
            for (const Vec& v : row) CHECK(is_zero_vec(v));
    }
}

TEST_CASE("hand-written map documents parse") {
    const std::string text = R"({"field": {"type": "rational"}, "kind": "sske",
        "space": {"even": [], "odd": ["y"]},
        "target": {"even": ["z"], "odd": []},
        "values": [{"left": "y", "right": "y", "value": [["z", "1"]]}]})";
    InputDocument doc = parse_document(text);
    CHECK(!doc.is_lie);
    CHECK(doc.map.dimension() == DimPair{0, 1});
    CHECK(doc.map.rank() == DimPair{1, 0});
    CHECK(doc.map.tensor[0][0][0] == Q.one());
    CHECK(validate_sske(doc.map).empty());
}

TEST_CASE("field specifications") {
    SUBCASE("prime fields reduce scalars") {
        const std::string text = R"({"field": {"type": "prime", "p": 5}, "kind": "sske",
            "space": {"even": [], "odd": ["y"]},
            "target": {"even": ["z"], "odd": []},
            "values": [{"left": "y", "right": "y", "value": [["z", "7"]]}]})";
        InputDocument doc = parse_document(text);
        CHECK(doc.field.describe() == "F_5");
        CHECK(doc.map.tensor[0][0][0] == F5.from_int(2));
    }
    SUBCASE("characteristic two and three are refused with the stated rule") {
        auto attempt = [](unsigned p) {
            return parse_document(R"({"field": {"type": "prime", "p": )" + std::to_string(p) +
                                  R"(}, "kind": "lie", "space": {"even": [], "odd": []},
                                      "brackets": []})");
        };
        std::string msg = thrown_message([&] { attempt(3); });
        CHECK(msg.find("characteristic of F ≠ 2,3") != std::string::npos);
        CHECK(failure_class([&] { attempt(3); }) == "semantic");
        CHECK(failure_class([&] { attempt(2); }) == "semantic");
        CHECK(failure_class([&] { attempt(9); }) == "semantic");
        CHECK(failure_class([&] { attempt(5); }) == "none");
    }
    SUBCASE("malformed field objects are format errors") {
        auto doc_with_field = [](const std::string& f) {
            return R"({"field": )" + f +
                   R"(, "kind": "lie", "space": {"even": [], "odd": []}, "brackets": []})";
        };
        CHECK(failure_class([&] { parse_document(doc_with_field(R"("rational")")); }) == "format");
        CHECK(failure_class([&] { parse_document(doc_with_field(R"({"type": "real"})")); }) ==
              "format");
        CHECK(failure_class([&] { parse_document(doc_with_field(R"({"type": "prime"})")); }) ==
              "format");
        CHECK(failure_class([&] {
                  parse_document(doc_with_field(R"({"type": "prime", "p": "5"})"));
              }) == "format");
        CHECK(failure_class([&] {
                  parse_document(doc_with_field(R"({"type": "prime", "p": -5})"));
              }) == "format");
        CHECK(failure_class([&] {
                  parse_document(doc_with_field(R"({"type": "prime", "p": 5.5})"));
              }) == "format");
    }
}

TEST_CASE("shape violations are format errors") {
    auto parses_as = [](const std::string& text) {
        return failure_class([&] { parse_document(text); });
    };
    CHECK(parses_as("not a document {{{") == "format");
    CHECK(parses_as("[1, 2]") == "format");
    CHECK(parses_as(R"({"kind": "lie"})") == "format");  // missing field/space
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "group",
        "space": {"even": [], "odd": []}, "brackets": []})") == "format");
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "lie",
        "space": {"even": [], "odd": []}, "brackets": [], "extra": 1})") == "format");
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "lie",
        "space": ["x"], "brackets": []})") == "format");
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "lie",
        "space": {"even": [1], "odd": []}, "brackets": []})") == "format");
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "lie",
        "space": {"even": [], "odd": []}, "brackets": {}})") == "format");
    CHECK(parses_as(lie_doc(R"([{"left": "x1", "right": "x2"}])")) == "format");
    CHECK(parses_as(lie_doc(R"([{"left": "x1", "right": "x2", "value": [["z"]]}])")) == "format");
    CHECK(parses_as(lie_doc(R"([{"left": "x1", "right": "x2", "value": [["z", 1]]}])")) ==
          "format");
    CHECK(parses_as(lie_doc(R"([{"left": "x1", "right": "x2", "value": [["z", "1"]],
        "note": "?"}])")) == "format");
    // a "target" key only belongs to map documents
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "lie",
        "space": {"even": [], "odd": []}, "target": {"even": [], "odd": []},
        "brackets": []})") == "format");
    // the second space is mandatory for map documents
    CHECK(parses_as(R"({"field": {"type": "rational"}, "kind": "sske",
        "space": {"even": [], "odd": []}, "values": []})") == "format");
}

TEST_CASE("semantic violations are rejected after parsing") {
    SUBCASE("unknown labels") {
        CHECK_THROWS_WITH_AS(
            parse_document(lie_doc(R"([{"left": "x1", "right": "x2", "value": [["q", "1"]]}])")),
            "unknown label 'q'", Error);
        CHECK_THROWS_WITH_AS(
            parse_document(lie_doc(R"([{"left": "w", "right": "x2", "value": []}])")),
            "unknown label 'w'", Error);
        CHECK(failure_class([] {
                  parse_document(
                      lie_doc(R"([{"left": "x1", "right": "x2", "value": [["q", "1"]]}])"));
              }) == "semantic");
    }
    SUBCASE("parity violations") {
        CHECK_THROWS_WITH_AS(
            parse_document(lie_doc(R"([{"left": "x1", "right": "x2", "value": [["y", "1"]]}])")),
            "parity violation: (x1, x2) entry has a component on 'y'", Error);
        CHECK_THROWS_WITH_AS(
            parse_document(lie_doc(R"([{"left": "x1", "right": "y", "value": [["z", "1"]]}])")),
            "parity violation: (x1, y) entry has a component on 'z'", Error);
    }
    SUBCASE("an explicit mirror must agree with graded skew-symmetry") {
        const std::string agree = lie_doc(
            R"([{"left": "x1", "right": "x2", "value": [["z", "1"]]},
                {"left": "x2", "right": "x1", "value": [["z", "-1"]]}])");
        CHECK(parse_document(agree).algebra.table[1][0][2] == -Q.one());

        const std::string clash = lie_doc(
            R"([{"left": "x1", "right": "x2", "value": [["z", "1"]]},
                {"left": "x2", "right": "x1", "value": [["z", "1"]]}])");
        CHECK_THROWS_WITH_AS(parse_document(clash), "conflicting entry for (x2, x1)", Error);

        const std::string direct = lie_doc(
            R"([{"left": "x1", "right": "x2", "value": [["z", "1"]]},
                {"left": "x1", "right": "x2", "value": [["z", "2"]]}])");
        CHECK_THROWS_WITH_AS(parse_document(direct), "conflicting entry for (x1, x2)", Error);

        const std::string repeat = lie_doc(
            R"([{"left": "x1", "right": "x2", "value": [["z", "1"]]},
                {"left": "x1", "right": "x2", "value": [["z", "1"]]}])");
        CHECK(parse_document(repeat).algebra.table[0][1][2] == Q.one());
    }
    SUBCASE("the odd-odd mirror carries a plus sign") {
        const std::string text = R"({"field": {"type": "rational"}, "kind": "lie",
            "space": {"even": ["z"], "odd": ["y1", "y2"]},
            "brackets": [{"left": "y1", "right": "y2", "value": [["z", "1"]]}]})";
        InputDocument doc = parse_document(text);
        CHECK(doc.algebra.table[1][2][0] == Q.one());
        CHECK(doc.algebra.table[2][1][0] == Q.one());  // derived, not negated
        CHECK(validate(doc.algebra).empty());

        // and an explicit negated mirror is therefore a conflict
        const std::string clash = R"({"field": {"type": "rational"}, "kind": "lie",
            "space": {"even": ["z"], "odd": ["y1", "y2"]},
            "brackets": [{"left": "y1", "right": "y2", "value": [["z", "1"]]},
                         {"left": "y2", "right": "y1", "value": [["z", "-1"]]}]})";
        CHECK_THROWS_WITH_AS(parse_document(clash), "conflicting entry for (y2, y1)", Error);
    }
    SUBCASE("bad scalars") {
        CHECK(failure_class([] {
                  parse_document(
                      lie_doc(R"([{"left": "x1", "right": "x2", "value": [["z", "one"]]}])"));
              }) == "semantic");
        CHECK(failure_class([] {
                  parse_document(
                      lie_doc(R"([{"left": "x1", "right": "x2", "value": [["z", "1/0"]]}])"));
              }) == "semantic");
    }
    SUBCASE("a parsed document can still fail algebra validation") {
        // [x1, x1] = z breaks skew-symmetry on an even vector; the format
        // layer accepts it and the validation layer reports it.
        InputDocument doc =
            parse_document(lie_doc(R"([{"left": "x1", "right": "x1", "value": [["z", "1"]]}])"));
        CHECK(failure_class([&] { analyze_document(doc); }) == "semantic");
    }
}

TEST_CASE("catalog documents round trip through the format") {
    std::vector<InputDocument> docs = {
        document_from_lie(heisenberg_even(1, 0)),
        document_from_lie(heisenberg_even(2, 1)),
        document_from_lie(heisenberg_odd(2)),
        document_from_lie(abelian(1, 2)),
        document_from_lie(heisenberg_even(2, 0, F5)),
        document_from_sske(from_lie(heisenberg_even(1, 1))),
        document_from_sske(generic_full(2, 2)),
        document_from_sske(generic_odd_full(2, 2)),
        document_from_sske(random_sske(2, 2, 2, 2, 7, F5)),
        document_from_sske(random_sske(3, 0, 2, 0, 11, Q)),
    };
    for (const InputDocument& doc : docs) {
        CAPTURE(document_fingerprint(doc));
        const std::string text = emit_document(doc);
        InputDocument back = parse_document(text);
        CHECK(back == doc);
        CHECK(emit_document(back) == text);  // byte-stable canonical form
    }
}

TEST_CASE("fingerprints are stable and discriminating") {
    InputDocument h10 = document_from_lie(heisenberg_even(1, 0));
    CHECK(document_fingerprint(h10) == "4f5806ec5302b5e6");
    CHECK(document_fingerprint(parse_document(kSample)) == "4f5806ec5302b5e6");
    std::string other = document_fingerprint(document_from_lie(heisenberg_even(2, 0)));
    CHECK(other.size() == 16);
    CHECK(other.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(other != document_fingerprint(h10));
}

TEST_CASE("analysis of algebra documents") {
    SUBCASE("H(1,0) text report is reproduced byte for byte") {
        ReportDocument r = analyze_document(parse_document(kSample));
        const std::string expected =
            "kind: lie\n"
            "field: rational\n"
            "fingerprint: 4f5806ec5302b5e6\n"
            "input dims: (3|0)\n"
            "class: class_two\n"
            "derived subalgebra: (1|0)\n"
            "center: (1|0)\n"
            "map dimension: (2|0)\n"
            "map rank: (1|0)\n"
            "radical: (0|0)\n"
            "relation space: (0|0)\n"
            "multiplier quotient: (2|0)\n"
            "multiplier kernel: (0|0)\n"
            "multiplier total: (2|0)\n"
            "epicenter: (0|0)\n"
            "capable: yes\n"
            "classification: H(1,0) (+) A(0|0)\n";
        CHECK(report_to_text(r) == expected);
    }
    SUBCASE("H_2 is not capable and exposes its epicenter basis") {
        ReportDocument r = analyze_document(document_from_lie(heisenberg_odd(2)));
        REQUIRE(r.capable.has_value());
        CHECK(*r.capable == false);
        CHECK(*r.epicenter_dims == DimPair{0, 1});
        REQUIRE(r.epicenter_basis.size() == 1);
        CHECK(r.epicenter_basis[0] == "1*z");
        CHECK(*r.classification == "H_2 (+) A(0|0)");
    }
    SUBCASE("H(2,0) reports the frozen multiplier and a one-dimensional epicenter") {
        ReportDocument r = analyze_document(document_from_lie(heisenberg_even(2, 0)));
        CHECK(r.multiplier_report->total_dims == DimPair{5, 0});
        CHECK(*r.epicenter_dims == DimPair{1, 0});
        CHECK(r.epicenter_basis == std::vector<std::string>{"1*z"});
        CHECK(*r.capable == false);
    }
    SUBCASE("abelian algebras skip the map-level data") {
        ReportDocument r = analyze_document(document_from_lie(abelian(2, 1)));
        CHECK(*r.class_tag == "abelian");
        CHECK(*r.capable == true);
        CHECK(!r.map_rank.has_value());
        CHECK(!r.multiplier_report.has_value());
        CHECK(!r.epicenter_dims.has_value());
        ReportDocument line = analyze_document(document_from_lie(abelian(1, 0)));
        CHECK(*line.capable == false);
    }
    SUBCASE("class greater than two stops after the structure summary") {
        // filiform example: [e1,e2] = e3, [e1,e3] = e4
        LieSuper L;
        L.field = Q;
        L.space = SuperSpace({"e1", "e2", "e3", "e4"}, {});
        L.table = zero_table(Q, L.space);
        L.table[0][1][2] = Q.one();
        L.table[1][0][2] = -Q.one();
        L.table[0][2][3] = Q.one();
        L.table[2][0][3] = -Q.one();
        ReportDocument r = analyze_document(document_from_lie(L));
        CHECK(*r.class_tag == "higher");
        CHECK(!r.capable.has_value());
        CHECK(!r.map_rank.has_value());
    }
}

TEST_CASE("analysis of map documents") {
    SUBCASE("generic_full(2,2) rebuilds to the expected algebra") {
        ReportDocument r = analyze_document(document_from_sske(generic_full(2, 2)));
        CHECK(r.kind == "sske");
        CHECK(r.input_dims == DimPair{2, 2});
        CHECK(*r.map_rank == DimPair{4, 4});
        CHECK(*r.rebuilt_dims == DimPair{6, 6});
        CHECK(*r.class_tag == "class_two");
        CHECK(*r.derived_dims == DimPair{4, 4});
        CHECK(*r.center_dims == DimPair{4, 4});
        CHECK(!r.classification.has_value());  // rank is not one
    }
    SUBCASE("the odd Heisenberg pairing classifies from its map document") {
        ReportDocument r = analyze_document(document_from_sske(from_lie(heisenberg_odd(1))));
        CHECK(*r.map_rank == DimPair{0, 1});
        CHECK(*r.capable == true);
        CHECK(*r.classification == "H_1 (+) A(0|0)");
        CHECK(*r.rebuilt_dims == DimPair{1, 2});
    }
}

TEST_CASE("reports are deterministic") {
    InputDocument doc = document_from_sske(generic_full(2, 1));
    ReportDocument a = analyze_document(doc);
    ReportDocument b = analyze_document(parse_document(emit_document(doc)));
    CHECK(report_to_text(a) == report_to_text(b));
    CHECK(report_to_json(a) == report_to_json(b));

    auto parsed = nlohmann::json::parse(report_to_json(a));
    CHECK(parsed["kind"] == "sske");
    CHECK(parsed["map_rank"]["even"] == 2);
    CHECK(parsed["map_rank"]["odd"] == 2);
    CHECK(parsed["multiplier"]["total"]["even"].is_number());
    CHECK(parsed["capable"].is_boolean());
    CHECK(parsed["fingerprint"] == a.fingerprint);
}

TEST_CASE("linear combinations format exactly") {
    SuperSpace s({"x1", "x2"}, {"y"});
    CHECK(format_linear(s, zero_vec(Q, 3)) == "0");
    Vec v = zero_vec(Q, 3);
    v[0] = Q.parse("2/3");
    v[2] = -Q.one();
    CHECK(format_linear(s, v) == "2/3*x1 + -1*y");
    Vec u = zero_vec(Q, 3);
    u[1] = Q.one();
    CHECK(format_linear(s, u) == "1*x2");
}

TEST_CASE("documents load from files") {
    const std::string path = "io_sample_tmp.json";
    {
        std::ofstream out(path, std::ios::binary);
        out << kSample;
    }
    CHECK(load_document(path) == parse_document(kSample));
    std::remove(path.c_str());

    CHECK(failure_class([] { load_document("definitely/not/here.json"); }) == "format");
    std::string msg = thrown_message([] { load_document("definitely/not/here.json"); });
    CHECK(msg.find("cannot read file") != std::string::npos);
}
