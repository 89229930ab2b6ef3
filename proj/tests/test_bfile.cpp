#include <doctest.h>

#include <isobaric/bfile.hpp>

#include <sstream>

using namespace isobaric;

TEST_SUITE("bfile") {
    TEST_CASE("parses values with comments and an offset") {
        std::istringstream in("# Perrin\n# offset 1\n1 0\n2 2  # inline\n\n3 3\n4 2\n5 123456789012345678901234567890\n");
        auto b = parse_bfile(in);
        CHECK(b.offset == 1);
        REQUIRE(b.values.size() == 5);
        CHECK(b.values[1] == 2);
        CHECK(b.values[4].get_str() == "123456789012345678901234567890");
    }

    TEST_CASE("negative values and tabs") {
        std::istringstream in("0\t1\n1\t-2\n");
        auto b = parse_bfile(in);
        CHECK(b.offset == 0);
        CHECK(b.values[1] == -2);
    }

    TEST_CASE("malformed input") {
        std::istringstream gap("0 1\n2 3\n");
        CHECK_THROWS_AS(parse_bfile(gap), DomainError);
        std::istringstream missing("0 1\n1\n");
        CHECK_THROWS_AS(parse_bfile(missing), DomainError);
        std::istringstream extra("0 1 2\n");
        CHECK_THROWS_AS(parse_bfile(extra), DomainError);
        std::istringstream empty("# nothing\n");
        CHECK_THROWS_AS(parse_bfile(empty), DomainError);
        std::istringstream word("0 x\n");
        CHECK_THROWS_AS(parse_bfile(word), DomainError);
        CHECK_THROWS_AS(read_bfile("/nonexistent/b000000.txt"), DomainError);
    }
}
