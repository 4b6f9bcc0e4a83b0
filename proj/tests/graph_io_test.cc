#include "pebhub/graph_io.h"

#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

namespace pebhub {
namespace {

GraphError ParseError(const std::string& text) {
  try {
    ParseGraph(text);
  } catch (const GraphError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return GraphError(GraphError::Kind::kBadParameter, -1, "");
}

TEST(ParseGraph, PathOnThree) {
  const Graph g = ParseGraph("3\n0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.edges(), MakePath(3).edges());
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = ParseGraph("# a triangle\n\n3   # vertices\n0 1\n  1 2\t\n# closing edge\n0 2\n");
  EXPECT_TRUE(g.IsComplete());
}

TEST(ParseGraph, ReversedPairIsNormalized) {
  EXPECT_EQ(ParseGraph("2\n1 0\n").edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(ParseGraph, DuplicateEdgeReportsLine) {
  const GraphError e = ParseError("2\n0 1\n0 1");
  EXPECT_EQ(e.kind(), GraphError::Kind::kDuplicateEdge);
  EXPECT_EQ(e.line(), 3);
}

TEST(ParseGraph, DuplicateInOppositeOrder) {
  EXPECT_EQ(ParseError("2\n0 1\n1 0").kind(), GraphError::Kind::kDuplicateEdge);
}

TEST(ParseGraph, Disconnected) {
  EXPECT_EQ(ParseError("4\n0 1\n2 3").kind(), GraphError::Kind::kDisconnected);
}

TEST(ParseGraph, MalformedLineNumber) {
  const GraphError e = ParseError("3\n0 1\n\n1 two\n");
  EXPECT_EQ(e.kind(), GraphError::Kind::kMalformedLine);
  EXPECT_EQ(e.line(), 4);
  EXPECT_EQ(ParseError("3\n0 1 2\n").kind(), GraphError::Kind::kMalformedLine);
  EXPECT_EQ(ParseError("three\n").kind(), GraphError::Kind::kMalformedLine);
  EXPECT_EQ(ParseError("").kind(), GraphError::Kind::kMalformedLine);
}

TEST(ParseGraph, IndexOutOfRange) {
  const GraphError e = ParseError("3\n0 1\n1 3\n");
  EXPECT_EQ(e.kind(), GraphError::Kind::kIndexOutOfRange);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(ParseError("3\n-1 1\n").kind(), GraphError::Kind::kIndexOutOfRange);
}

TEST(ParseGraph, SelfLoop) {
  const GraphError e = ParseError("2\n0 1\n1 1\n");
  EXPECT_EQ(e.kind(), GraphError::Kind::kSelfLoop);
  EXPECT_EQ(e.line(), 3);
}

TEST(ParseGraph, BadVertexCount) {
  EXPECT_EQ(ParseError("0\n").kind(), GraphError::Kind::kBadVertexCount);
  EXPECT_EQ(ParseError("65\n").kind(), GraphError::Kind::kBadVertexCount);
}

TEST(ParseGraph, SingleVertexWithoutEdges) {
  const Graph g = ParseGraph("1\n");
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(RenderGraph, RoundTrips) {
  for (const Graph& g : {MakePath(1), MakePath(7), MakeStar(5), MakeBook(4), MakeCycle(9)}) {
    const Graph back = ParseGraph(RenderGraph(g));
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(back.edges(), g.edges()) << g.Describe();
  }
}

TEST(LoadGraph, FamilySpecs) {
  EXPECT_EQ(LoadGraph("path:4").tag(), (FamilyTag{GraphFamily::kPath, 4}));
  EXPECT_EQ(LoadGraph("star:3").tag(), (FamilyTag{GraphFamily::kStar, 3}));
  EXPECT_EQ(LoadGraph("book:2").tag(), (FamilyTag{GraphFamily::kBook, 2}));
  EXPECT_EQ(LoadGraph("cycle:5").tag(), (FamilyTag{GraphFamily::kCycle, 5}));
  EXPECT_THROW(LoadGraph("path:x"), GraphError);
  EXPECT_THROW(LoadGraph("path:0"), GraphError);
  EXPECT_THROW(LoadGraph("cycle:2"), GraphError);
  EXPECT_THROW(LoadGraph("/nonexistent/graph.txt"), GraphError);
}

TEST(LoadGraph, EdgeListFile) {
  const std::string path = ::testing::TempDir() + "pebhub_graph_io_test.txt";
  {
    std::ofstream out(path);
    out << "# claw\n4\n0 1\n0 2\n0 3\n";
  }
  const Graph g = LoadGraph(path);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.degree(0), 3);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace pebhub
