#include <doctest.h>

#include <rainbow/structure.hpp>

using namespace rainbow;

TEST_SUITE("structures") {

TEST_CASE("parse_dotbracket basics") {
  auto st = parse_dotbracket("(())");
  CHECK(st.length() == 4);
  REQUIRE(st.arcs().size() == 2);
  CHECK(st.arcs()[0] == Arc{1, 4});
  CHECK(st.arcs()[1] == Arc{2, 3});

  auto dots = parse_dotbracket("....");
  CHECK(dots.length() == 4);
  CHECK(dots.arcs().empty());

  CHECK(parse_dotbracket("").length() == 0);
}

TEST_CASE("parse_dotbracket errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_dotbracket("(()"), "unmatched '(' at position 1",
                       ParseError);
  try {
    parse_dotbracket("((");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_WITH_AS(parse_dotbracket("..)"), "unmatched ')' at position 3",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_dotbracket(".x.."),
                       "invalid character 'x' at position 2", ParseError);
}

TEST_CASE("parse_dotbracket strips folding-tool energy annotations") {
  auto st = parse_dotbracket("((...)).. (-12.30)");
  CHECK(st.length() == 9);
  CHECK(st.arcs().size() == 2);

  CHECK(parse_dotbracket("..(..) ( -3.4 )").length() == 6);
  CHECK_THROWS_AS(parse_dotbracket("..(..) junk"), ParseError);
  CHECK_THROWS_AS(parse_dotbracket("..(..) (abc)"), ParseError);
}

TEST_CASE("to_dotbracket round trips") {
  CHECK(to_dotbracket(SecondaryStructure(4, {{1, 4}, {2, 3}})) == "(())");
  CHECK(to_dotbracket(SecondaryStructure(3, {})) == "...");

  for (const char* text : {"(())", "....", "((..))..(..)", "", ".(...).."}) {
    CHECK(to_dotbracket(parse_dotbracket(text)) == text);
  }
}

TEST_CASE("construction rejects malformed arcs") {
  CHECK_THROWS_AS(SecondaryStructure(4, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SecondaryStructure(4, {{2, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(SecondaryStructure(4, {{3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SecondaryStructure(-1, {}), std::invalid_argument);
}

TEST_CASE("validate reports the diagram conditions") {
  Params loose{1, 1};

  auto short_arc = validate(SecondaryStructure(4, {{1, 2}}), Params{1, 2});
  CHECK(short_arc.has(ViolationKind::ArcTooShort));
  CHECK(short_arc.violations.size() == 1);

  auto stacked = validate(SecondaryStructure(5, {{1, 5}, {2, 4}}), Params{2, 2});
  CHECK(stacked.ok());

  auto split = validate(SecondaryStructure(6, {{1, 6}, {3, 5}}), Params{2, 1});
  CHECK(split.has(ViolationKind::StackTooShort));
  CHECK(split.violations.size() == 2);  // both maximal stacks have length 1

  auto crossing = validate(SecondaryStructure(4, {{1, 3}, {2, 4}}), loose);
  CHECK(crossing.has(ViolationKind::CrossingArcs));

  auto shared = validate(SecondaryStructure(5, {{1, 3}, {3, 5}}), loose);
  CHECK(shared.has(ViolationKind::SharedEndpoint));

  CHECK(validate(SecondaryStructure(6, {}), Params{4, 4}).ok());
}

TEST_CASE("maximal stack decomposition") {
  CHECK(maximal_stack_lengths(SecondaryStructure(6, {{1, 6}, {2, 5}, {3, 4}})) ==
        std::vector<int>{3});
  CHECK(maximal_stack_lengths(SecondaryStructure(6, {{1, 6}, {3, 5}})) ==
        std::vector<int>{1, 1});
  // A gap on one side only still splits the run.
  CHECK(maximal_stack_lengths(SecondaryStructure(8, {{1, 8}, {2, 7}, {4, 6}})) ==
        std::vector<int>{2, 1});
  CHECK(maximal_stack_lengths(SecondaryStructure(3, {})).empty());
}

TEST_CASE("rainbow_spectrum") {
  auto spec = rainbow_spectrum(parse_dotbracket("((..))..(..)"));
  CHECK(spec.rainbow_lengths == std::vector<int>{5, 3});
  CHECK(spec.external_unpaired == 2);
  CHECK(spec.five_three_distance == 4);
  CHECK(spec.longest(1) == 5);
  CHECK(spec.longest(2) == 3);
  CHECK(spec.longest(3) == 0);

  auto bare = rainbow_spectrum(parse_dotbracket("....."));
  CHECK(bare.rainbow_lengths.empty());
  CHECK(bare.five_three_distance == 5);

  // Nested arcs do not add rainbows.
  auto nested = rainbow_spectrum(parse_dotbracket("(((...)))"));
  CHECK(nested.rainbow_lengths == std::vector<int>{8});
  CHECK(nested.external_unpaired == 0);
}

TEST_CASE("partner map rejects shared endpoints") {
  CHECK_THROWS_AS(SecondaryStructure(5, {{1, 3}, {3, 5}}).partner_map(),
                  std::invalid_argument);
  CHECK_THROWS_AS(to_dotbracket(SecondaryStructure(5, {{1, 3}, {3, 5}})),
                  std::invalid_argument);
}

}  // TEST_SUITE
