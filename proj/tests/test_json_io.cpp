#include "doctest.h"
#include "seqspace/json_io.hpp"

#include <stdexcept>

using namespace seqspace;
namespace sio = seqspace::io;

TEST_CASE("float literals parse exactly over powers of ten") {
    sio::json doc = sio::parse_text(R"({"x": [0.1, 1, "2/3", -0.25, 1e-3]})");
    SeqPrefix x = sio::seq_from(doc.at("x"), Mode::Exact, Tail::Unknown, "x");
    CHECK(x[0] == Scalar::exact(1, 10));
    CHECK(x[1] == Scalar::exact(1));
    CHECK(x[2] == Scalar::exact(2, 3));
    CHECK(x[3] == Scalar::exact(-1, 4));
    CHECK(x[4] == Scalar::exact(1, 1000));
}

TEST_CASE("nested structures survive the raw-number parse") {
    sio::json doc = sio::parse_text(R"({"A": [[1, 0.5], [0, 2]], "N": 8, "tag": "x"})");
    CHECK(doc.at("N").get<int>() == 8);
    CHECK(doc.at("tag").get<std::string>() == "x");
    auto rows = sio::matrix_rows_from(doc.at("A"), Mode::Exact, "A");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][1] == Scalar::exact(1, 2));
    CHECK(rows[0].tail() == Tail::Zero);
}

TEST_CASE("malformed JSON raises an input error") {
    CHECK_THROWS_AS(sio::parse_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(sio::parse_text("[1, ]"), std::invalid_argument);
}

TEST_CASE("field paths appear in conversion errors") {
    sio::json doc = sio::parse_text(R"({"x": [1, "bogus"]})");
    CHECK_THROWS_WITH_AS(sio::seq_from(doc.at("x"), Mode::Exact, Tail::Unknown, "x"),
                         doctest::Contains("x[1]"), std::invalid_argument);
    sio::json raw = sio::json::parse(R"({"v": 0.5})");  // default parse keeps the double
    CHECK_THROWS_WITH_AS(sio::scalar_from(raw.at("v"), Mode::Exact, "v"),
                         doctest::Contains("v"), std::invalid_argument);
    CHECK(sio::scalar_from(raw.at("v"), Mode::Float, "v").value() == doctest::Approx(0.5));
}

TEST_CASE("serialization keeps rationals as p/q strings") {
    Scalar v = Scalar::exact(-7, 3);
    sio::json j = sio::to_json(v);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == "-7/3");
    CHECK(sio::scalar_from(j, Mode::Exact, "v") == v);

    SeqPrefix x(std::vector<Scalar>{Scalar::exact(1), Scalar::exact(1, 2)});
    sio::json jx = sio::to_json(x);
    SeqPrefix back = sio::seq_from(jx, Mode::Exact, Tail::Unknown, "x");
    CHECK(back == x);
}

TEST_CASE("round trip through serialize-parse is value identical") {
    sio::json doc = sio::parse_text(R"({"r": ["3/4", 2, 0.2]})");
    SeqPrefix r = sio::seq_from(doc.at("r"), Mode::Exact, Tail::Unknown, "r");
    sio::json out = sio::to_json(r);
    SeqPrefix again = sio::seq_from(sio::parse_text(out.dump()), Mode::Exact, Tail::Unknown, "r");
    CHECK(again == r);
}

TEST_CASE("verdict and report serialization carry the full tri-state") {
    Verdict v;
    v.state = VerdictState::Fails;
    v.estimate = Scalar::exact(1);
    v.witness = 19;
    v.trend = {Scalar::exact(1), Scalar::exact(1)};
    v.note = "bounded away from zero";
    ConditionReport r("demo");
    r.add("4.6", v);
    sio::json j = sio::to_json(r);
    CHECK(j.at("conclusion").get<std::string>() == "NotMember");
    CHECK(j.at("witness").get<std::size_t>() == 19);
    REQUIRE(j.at("conditions").size() == 1);
    const sio::json& c = j.at("conditions")[0];
    CHECK(c.at("id").get<std::string>() == "4.6");
    CHECK(c.at("state").get<std::string>() == "Fails");
    CHECK(c.at("trend").size() == 2);
}
