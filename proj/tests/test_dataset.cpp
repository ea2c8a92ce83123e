#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "effortfit/dataset.hpp"

using namespace effortfit;

TEST_CASE("nasa dataset matches the published table") {
  Dataset d = nasa_dataset();
  REQUIRE(d.size() == 18);
  for (int i = 0; i < 18; ++i) CHECK(d.records[i].id == i + 1);

  CHECK(d.records[0].kloc == 90.2);
  CHECK(d.records[0].me == 30);
  CHECK(d.records[0].effort == 115.8);
  CHECK(d.records[9].kloc == 3.1);
  CHECK(d.records[9].me == 26);
  CHECK(d.records[9].effort == 7);
  CHECK(d.records[17].kloc == 100.8);
  CHECK(d.records[17].me == 34);
  CHECK(d.records[17].effort == 138.3);

  // constant across calls
  CHECK(nasa_dataset().records == d.records);
}

TEST_CASE("csv parsing") {
  SUBCASE("column order and case are free") {
    Dataset d = parse_csv("EFFORT,id,Kloc,me\n5,1,2.1,28\n", "t");
    REQUIRE(d.size() == 1);
    CHECK(d.records[0].id == 1);
    CHECK(d.records[0].kloc == 2.1);
    CHECK(d.records[0].me == 28);
    CHECK(d.records[0].effort == 5);
  }
  SUBCASE("missing column") {
    CHECK_THROWS_WITH_AS(parse_csv("id,kloc,me\n1,2,3\n", "t"),
                         doctest::Contains("missing column 'effort'"),
                         std::runtime_error);
  }
  SUBCASE("duplicate column") {
    CHECK_THROWS_WITH_AS(parse_csv("id,kloc,kloc,me,effort\n1,2,2,3,4\n", "t"),
                         doctest::Contains("duplicate column"), std::runtime_error);
  }
  SUBCASE("non-numeric cell names the row") {
    CHECK_THROWS_WITH_AS(
        parse_csv("id,kloc,me,effort\n1,2.1,28,5\n2,oops,28,5\n", "t"),
        doctest::Contains("row 3"), std::runtime_error);
  }
  SUBCASE("zero effort rejected with row number") {
    CHECK_THROWS_WITH_AS(parse_csv("id,kloc,me,effort\n1,2.1,28,0\n", "t"),
                         doctest::Contains("row 2"), std::runtime_error);
  }
  SUBCASE("non-positive kloc rejected") {
    CHECK_THROWS_AS(parse_csv("id,kloc,me,effort\n1,-1,28,5\n", "t"),
                    std::runtime_error);
  }
  SUBCASE("duplicate id rejected") {
    CHECK_THROWS_WITH_AS(
        parse_csv("id,kloc,me,effort\n1,2.1,28,5\n1,3,28,5\n", "t"),
        doctest::Contains("duplicate id"), std::runtime_error);
  }
  SUBCASE("empty body rejected") {
    CHECK_THROWS_AS(parse_csv("id,kloc,me,effort\n", "t"), std::runtime_error);
  }
}

TEST_CASE("csv round-trip") {
  Dataset d = nasa_dataset();
  Dataset back = parse_csv(write_csv(d), d.name);
  CHECK(back.records == d.records);
}

TEST_CASE("split_fixed") {
  Dataset d = nasa_dataset();

  SUBCASE("13/5 ordered split") {
    SplitDataset s = split_fixed(d, 13);
    REQUIRE(s.train.size() == 13);
    REQUIRE(s.test.size() == 5);
    for (int i = 0; i < 13; ++i) CHECK(s.train.records[i].id == i + 1);
    for (int i = 0; i < 5; ++i) CHECK(s.test.records[i].id == 14 + i);
  }
  SUBCASE("order and id multiset preserved") {
    for (std::size_t c : {1u, 7u, 17u}) {
      SplitDataset s = split_fixed(d, c);
      std::vector<ProjectRecord> merged = s.train.records;
      merged.insert(merged.end(), s.test.records.begin(), s.test.records.end());
      CHECK(merged == d.records);
    }
  }
  SUBCASE("tiny dataset") {
    Dataset two;
    two.records = {d.records[0], d.records[1]};
    SplitDataset s = split_fixed(two, 1);
    CHECK(s.train.records[0].id == 1);
    CHECK(s.test.records[0].id == 2);
  }
  SUBCASE("out-of-range train_count") {
    CHECK_THROWS_AS(split_fixed(d, 18), std::invalid_argument);
    CHECK_THROWS_AS(split_fixed(d, 0), std::invalid_argument);
  }
}
