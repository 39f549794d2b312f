#include <gtest/gtest.h>

#include <random>

#include "bflow/blocks.hpp"
#include "bflow/error.hpp"
#include "bflow/generators.hpp"
#include "bflow/graph.hpp"
#include "test_util.hpp"

using namespace bflow;

TEST(ParseGraph, PathOnThreeVertices) {
  SimpleGraph g = parse_graph("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(ParseGraph, SingleIsolatedVertex) {
  SimpleGraph g = parse_graph("1 0");
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  SimpleGraph g = parse_graph("# a triangle\n\n3 3\n  # indented comment\n0 1\n1 2\n\n2 0\n");
  EXPECT_EQ(g.edge_count(), 3);
  auto nbrs = g.neighbors(0);
  ASSERT_EQ(nbrs.size(), 2u);
  EXPECT_EQ(nbrs[0], 1);
  EXPECT_EQ(nbrs[1], 2);
}

TEST(ParseGraph, RejectsSelfLoop) {
  try {
    parse_graph("2 1\n0 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ParseGraph, RejectsDuplicateEdgeWithLineNumber) {
  try {
    parse_graph("3 3\n0 1\n1 2\n# again\n1 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(ParseGraph, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("# nothing\n"), ParseError);
  EXPECT_THROW(parse_graph("-1 0\n"), ParseError);
}

TEST(ParseGraph, EdgeListRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    SimpleGraph g = line_graph_of_tree(random_tree(1 + static_cast<int>(rng() % 30), rng()));
    SimpleGraph h = parse_graph(to_edge_list(g));
    EXPECT_EQ(h.edges(), g.edges());
  }
}

TEST(TreeType, RejectsNonTrees) {
  EXPECT_THROW(Tree::from_graph(parse_graph("3 3\n0 1\n1 2\n2 0\n")), InvalidGraph);
  EXPECT_THROW(Tree::from_graph(parse_graph("4 2\n0 1\n2 3\n")), InvalidGraph);
  EXPECT_NO_THROW(Tree::from_graph(parse_graph("1 0\n")));
}

TEST(LineGraph, StarBecomesClique) {
  SimpleGraph g = line_graph_of_tree(star(3));
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(LineGraph, PathBecomesShorterPath) {
  SimpleGraph g = line_graph_of_tree(path(3));
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(LineGraph, DoubleStarIsBowtie) {
  SimpleGraph g = line_graph_of_tree(fixtures::double_star());
  ASSERT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(g.degree(0), 4);  // e0 = c1c2 touches everything
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(3, 4));
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(LineGraph, EmptyTreeRejected) {
  EXPECT_THROW(line_graph_of_tree(Tree::from_graph(parse_graph("1 0\n"))), InvalidGraph);
}

TEST(LineGraph, CountsAndValidityOverAllSmallTrees) {
  for (int e = 1; e <= 10; ++e) {
    for (const Tree& t : all_trees(e)) {
      SimpleGraph g = line_graph_of_tree(t);
      long expected_edges = 0;
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const long d = t.graph().degree(v);
        expected_edges += d * (d - 1) / 2;
      }
      EXPECT_EQ(g.vertex_count(), t.edge_count());
      EXPECT_EQ(g.edge_count(), expected_edges);
      EXPECT_NO_THROW(validate_claw_free_block(g));
    }
  }
}

TEST(LineGraph, RandomTreesValidate) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Tree t = random_tree(1 + static_cast<int>(rng() % 60), rng());
    EXPECT_NO_THROW(validate_claw_free_block(line_graph_of_tree(t)));
  }
}
