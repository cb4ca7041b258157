#include <gtest/gtest.h>

#include "hwp/assembly.hpp"
#include "hwp/certificate.hpp"
#include "hwp/constructions.hpp"
#include "hwp/errors.hpp"

using namespace hwp;

namespace {

std::string drop_line_containing(const std::string& text, const std::string& needle) {
  const auto at = text.find(needle);
  const auto begin = text.rfind('\n', at) + 1;
  const auto end = text.find('\n', at) + 1;
  return text.substr(0, begin) + text.substr(end);
}

}  // namespace

TEST(HostText, RoundTripsEveryKind) {
  const std::vector<HostDescriptor> hosts{
      HostDescriptor::wreath(9, 16),
      HostDescriptor::blown(11, 16),
      HostDescriptor::cliques(9, 16),
      HostDescriptor::cayley(9, 16, {0, 2, 14}),
      HostDescriptor::cayley(9, 16, {1, 8, 15}),
      HostDescriptor::cayley(9, 16, {3}),
      HostDescriptor::table_matching(9, TableName::Iprime, 11),
      HostDescriptor::matching(9, 16, {{0, 1}, {2, 3}}),
      HostDescriptor::union_of(9, 16,
                               {HostDescriptor::cayley(9, 16, {6, 10}), HostDescriptor::table_matching(9, TableName::I, 3),
                                HostDescriptor::cliques(9, 16), HostDescriptor::matching(9, 16, {{4, 5}})}),
  };
  for (const auto& h : hosts) {
    const std::string text = format_host(h);
    EXPECT_EQ(parse_host(text), h) << text;
  }
  EXPECT_EQ(format_host(HostDescriptor::wreath(9, 16)), "wreath m=9 q=16");
  EXPECT_EQ(format_host(HostDescriptor::cayley(9, 16, {0, 2, 14})), "cayley m=9 n=16 conn=r:+-1;c:0,+-2");
}

TEST(HostText, RejectsMalformed) {
  for (const char* bad : {"", "torus m=9 n=16", "cayley m=9", "wreath m=nine q=16", "cayley m=9 n=16 conn=r:+-2;c:0",
                          "union m=9 n=16 parts=cayley{0"}) {
    EXPECT_THROW(parse_host(bad), ParseError) << bad;
  }
}

TEST(Certificate, RoundTripIsBitExact) {
  const Decomposition d = generate(9, 14);
  const std::string text = serialize_certificate(d);
  const Decomposition back = parse_certificate(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(serialize_certificate(back), text);
  EXPECT_EQ(text.rfind("HWP-CERT 1\nhost wreath m=9 q=16\nfactors c16=14 cm=9 matchings=1\n", 0), 0u);
  EXPECT_EQ(text.substr(text.size() - 4), "end\n");
}

TEST(Certificate, BlockRoundTrip) {
  const Decomposition d = lemma_6I(11);
  EXPECT_EQ(parse_certificate(serialize_certificate(d)), d);
}

TEST(Certificate, TruncationIsParseError) {
  const std::string text = serialize_certificate(lemma_quarter(9, 16));
  EXPECT_THROW(parse_certificate(text.substr(0, text.size() / 2)), ParseError);
  EXPECT_THROW(parse_certificate(text.substr(0, text.size() - 4)), ParseError);
  EXPECT_THROW(parse_certificate(""), ParseError);
}

TEST(Certificate, CensusMustMatch) {
  std::string text = serialize_certificate(lemma_quarter(9, 16));
  const auto at = text.find("cm=3");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 4, "cm=4");
  EXPECT_THROW(parse_certificate(text), ParseError);
}

TEST(Certificate, StructuralErrorsCarryLineNumbers) {
  std::string text = serialize_certificate(lemma_8_6(9));
  const auto at = text.find("factor 1 matching");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 8, "factor 7");
  try {
    parse_certificate(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
  std::string extra = serialize_certificate(lemma_8_6(9)) + "trailing\n";
  EXPECT_THROW(parse_certificate(extra), ParseError);
}

TEST(Certificate, DeletedEdgeIsVerificationFailure) {
  const std::string text = serialize_certificate(lemma_8_6(9));
  const Decomposition d = parse_certificate(drop_line_containing(text, "edge "));
  const Report r = verify_decomposition(d);
  EXPECT_FALSE(r);
}
