#include <gtest/gtest.h>

#include <filesystem>

#include "odcode/families.hpp"
#include "odcode/graph_io.hpp"

using namespace odcode;

TEST(GraphIo, ParsesTextWithComments) {
  const auto g = parse_graph_text("# path\n4 3\n0 1\n\n1 2\n2 3\n");
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.adjacent(2, 3));
}

TEST(GraphIo, RoleCommentsBecomeLabels) {
  const auto g = parse_graph_text("2 1\n#role 0 w1_x1\n0 1\n");
  EXPECT_EQ(g.label_or_index(0), "w1_x1");
}

TEST(GraphIo, TextRoundTripIsByteExact) {
  const auto g = generate(FamilySpec::half_graph(3));
  const auto text = format_graph_text(g);
  const auto back = parse_graph_text(text);
  EXPECT_TRUE(back.same_structure(g));
  EXPECT_EQ(back.labels(), g.labels());
  EXPECT_EQ(format_graph_text(back), text);
}

TEST(GraphIo, JsonRoundTrip) {
  const auto g = generate(FamilySpec::thin_spider(3));
  const auto json = format_graph_json(g);
  const auto back = parse_graph(json);
  EXPECT_TRUE(back.same_structure(g));
  EXPECT_EQ(back.labels(), g.labels());
}

TEST(GraphIo, RejectsMalformedText) {
  EXPECT_THROW(parse_graph_text(""), ParseError);
  EXPECT_THROW(parse_graph_text("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_graph_text("3 0\n#role 7 a\n"), ParseError);
}

TEST(GraphIo, ParseErrorCarriesLine) {
  try {
    parse_graph_text("3 2\n0 1\n2 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(GraphIo, RejectsMalformedJson) {
  EXPECT_THROW(parse_graph_json("{"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n":2,"edges":[[0]]})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n":2,"edges":[[0,0]]})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"edges":[]})"), ParseError);
}

TEST(GraphIo, LoadsDataFile) {
  const auto g = load_graph(std::string(ODCODE_TEST_DATA_DIR) + "/p4.txt");
  EXPECT_TRUE(g.same_structure(generate(FamilySpec::path(4))));
  EXPECT_THROW(load_graph(std::string(ODCODE_TEST_DATA_DIR) + "/missing.txt"), std::runtime_error);
}

TEST(GraphIo, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "odcode_graph_io_test.txt";
  const auto g = generate(FamilySpec::double_star(2));
  write_file(path.string(), format_graph_text(g));
  EXPECT_TRUE(load_graph(path.string()).same_structure(g));
  std::filesystem::remove(path);
}
