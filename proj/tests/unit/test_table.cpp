#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fairlist/table.hpp>

using namespace fairlist;

TEST_CASE("plain csv parses into columns and rows") {
    const auto t = parse_csv("age,sex,y\n23,m,1\n31,f,0\n", "y", "sex");
    CHECK(t.columns == std::vector<std::string>{"age", "sex", "y"});
    REQUIRE(t.num_rows() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"23", "m", "1"});
    CHECK(t.label_col == 2);
    CHECK(t.sensitive_col == 1);
    CHECK(t.dropped_rows == 0);
}

TEST_CASE("whitespace around unquoted cells is stripped") {
    const auto t = parse_csv("a, b ,y\n 1 ,  x,0\n", "y", "b");
    CHECK(t.columns[1] == "b");
    CHECK(t.rows[0][0] == "1");
    CHECK(t.rows[0][1] == "x");
}

TEST_CASE("quoted fields keep commas, quotes and newlines") {
    const auto t = parse_csv(
        "name,score,y\n\"Doe, Jane\",\"say \"\"hi\"\"\",1\n\"a\nb\",z,0\n",
        "y", "score");
    REQUIRE(t.num_rows() == 2);
    CHECK(t.rows[0][0] == "Doe, Jane");
    CHECK(t.rows[0][1] == "say \"hi\"");
    CHECK(t.rows[1][0] == "a\nb");
}

TEST_CASE("crlf and missing trailing newline are accepted") {
    const auto t = parse_csv("a,y\r\n1,0\r\n2,1", "y", "a");
    REQUIRE(t.num_rows() == 2);
    CHECK(t.rows[1][0] == "2");
}

TEST_CASE("rows with empty cells are dropped and counted") {
    const auto t = parse_csv("a,b,y\n1,,0\n2,x,1\n,,1\n", "y", "b");
    CHECK(t.num_rows() == 1);
    CHECK(t.dropped_rows == 2);
}

TEST_CASE("ragged rows are rejected") {
    CHECK_THROWS_AS(parse_csv("a,b,y\n1,0\n", "y", "b"), InputError);
}

TEST_CASE("missing columns are rejected") {
    CHECK_THROWS_AS(parse_csv("a,b\n1,2\n", "nope", "b"), InputError);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2\n", "a", "nope"), InputError);
    CHECK_THROWS_AS(parse_csv("a,b\n1,2\n", "a", "a"), InputError);
}

TEST_CASE("empty input and all-dropped input are rejected") {
    CHECK_THROWS_AS(parse_csv("", "y", "a"), InputError);
    CHECK_THROWS_AS(parse_csv("a,y\n,1\n", "y", "a"), InputError);
}

TEST_CASE("unterminated quote is rejected") {
    CHECK_THROWS_AS(parse_csv("a,y\n\"oops,1\n", "y", "a"), InputError);
}

TEST_CASE("binary mapping recognizes common truthy spellings") {
    const auto t = parse_csv("a,y\nYes,1\nNo,0\n", "y", "a");
    const auto m = binary_mapping(t, 0);
    CHECK(m.zero_value == "No");
    CHECK(m.one_value == "Yes");
    CHECK(m.to_bit("Yes"));
    CHECK_FALSE(m.to_bit("No"));

    const auto t2 = parse_csv("a,y\nTRUE,1\nfalse,0\n", "y", "a");
    const auto m2 = binary_mapping(t2, 0);
    CHECK(m2.zero_value == "false");
    CHECK(m2.one_value == "TRUE");
}

TEST_CASE("binary mapping falls back to lexicographic order") {
    const auto t = parse_csv("a,y\nmale,1\nfemale,0\n", "y", "a");
    const auto m = binary_mapping(t, 0);
    CHECK(m.zero_value == "female");
    CHECK(m.one_value == "male");
}

TEST_CASE("binary mapping rejects non-two-valued columns") {
    const auto t3 = parse_csv("a,y\nx,1\ny,0\nz,1\n", "y", "a");
    CHECK_THROWS_AS(binary_mapping(t3, 0), InputError);
    const auto t1 = parse_csv("a,y\nx,1\nx,0\n", "y", "a");
    CHECK_THROWS_AS(binary_mapping(t1, 0), InputError);
    CHECK_THROWS_AS(binary_mapping(t1, 0), InputError);
}

TEST_CASE("to_bit rejects unseen values") {
    const auto t = parse_csv("a,y\n0,1\n1,0\n", "y", "a");
    const auto m = binary_mapping(t, 0);
    CHECK_THROWS_AS(m.to_bit("2"), InputError);
}

TEST_CASE("csv_escape quotes only when needed") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("q\"q") == "\"q\"\"q\"");
    CHECK(csv_escape("(0.5,1]") == "\"(0.5,1]\"");
}

TEST_CASE("parse_csv_rows round-trips escaped fields") {
    const std::string text = "x," + csv_escape("a,b") + "," + csv_escape("q\"q") + "\n";
    const auto rows = parse_csv_rows(text);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == std::vector<std::string>{"x", "a,b", "q\"q"});
}
