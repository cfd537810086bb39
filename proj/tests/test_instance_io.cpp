#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "smallcover/smallcover.hpp"

using namespace smallcover;

namespace {

std::string data_path(const std::string& name) { return std::string(SMALLCOVER_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string error_of(const std::string& text) {
    try {
        (void)parse_instance(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(InstanceIo, ReadsProjectiveThreeSpace) {
    const auto doc = read_instance_file(data_path("rp3.json"));
    EXPECT_EQ(doc.name, "rp3");
    EXPECT_EQ(doc.n, 3U);
    ASSERT_TRUE(doc.lambda.has_value());
    const auto ref = lambda_boundary_simplex(3);
    EXPECT_EQ(doc.complex, ref.complex);
    EXPECT_EQ(*doc.lambda, ref.lambda);
    EXPECT_EQ(emit_instance(doc.name, doc.pair()), slurp(data_path("rp3.json")));
}

TEST(InstanceIo, BundledFilesParse) {
    for (const auto& name : {"rp3.json", "join-notsimplex.json", "octahedron.json", "rp2-6.json", "bier-base.json"})
        EXPECT_NO_THROW(read_instance_file(data_path(name))) << name;
    EXPECT_FALSE(read_instance_file(data_path("rp2-6.json")).lambda.has_value());
    EXPECT_THROW(read_instance_file(data_path("rp2-6.json")).pair(), InputError);
}

TEST(InstanceIo, BadEntry) {
    const auto msg = error_of(slurp(data_path("bad-entry.json")));
    EXPECT_NE(msg.find("must be 0 or 1"), std::string::npos) << msg;
}

TEST(InstanceIo, DependentFacet) {
    const auto msg = error_of(slurp(data_path("dependent.json")));
    EXPECT_NE(msg.find("{1,3}"), std::string::npos) << msg;
}

TEST(InstanceIo, SyntaxErrorLocation) {
    const auto msg = error_of(slurp(data_path("syntax-error.json")));
    EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
    EXPECT_NE(msg.find("syntax error"), std::string::npos) << msg;
}

TEST(InstanceIo, MissingFieldsAndTypes) {
    EXPECT_NE(error_of(R"({"n": 1, "vertices": [1, 2]})").find("facets"), std::string::npos);
    EXPECT_FALSE(error_of(R"([1, 2])").empty());
    EXPECT_FALSE(error_of(R"({"n": "two", "vertices": [1, 2], "facets": [[1], [2]]})").empty());
    EXPECT_FALSE(error_of(R"({"n": 1, "vertices": [1, 2], "facets": [[1], [3]]})").empty());
    EXPECT_FALSE(error_of(R"({"n": 1, "vertices": [1, 2], "facets": [[1], [2]], "lambda": [[1]]})").empty());
    EXPECT_THROW(read_instance_file(data_path("missing.json")), InputError);
}

TEST(InstanceIo, UnsortedLabelsKeepColumnsWithTheirVertices) {
    // Vertex 3 is declared first; its column must stay with it.
    const auto doc = parse_instance(R"({"n": 2, "vertices": [3, 1, 2], "facets": [[1, 2], [1, 3], [2, 3]],
                                        "lambda": [[1, 1, 0], [1, 0, 1]]})");
    ASSERT_TRUE(doc.lambda.has_value());
    EXPECT_EQ(doc.complex.labels(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(doc.lambda->column(0), (gf2::BitVec{1, 0}));
    EXPECT_EQ(doc.lambda->column(1), (gf2::BitVec{0, 1}));
    EXPECT_EQ(doc.lambda->column(2), (gf2::BitVec{1, 1}));
}

TEST(FacetOrder, ArrayAndObjectForms) {
    const auto doc = read_instance_file(data_path("rp3.json"));
    const auto order = parse_facet_order(doc.complex, slurp(data_path("rp3-order.json")));
    ASSERT_EQ(order.size(), 4U);
    EXPECT_EQ(order[0], doc.complex.mask_of({2, 3, 4}));
    EXPECT_EQ(parse_facet_order(doc.complex, R"({"order": [[1, 2, 3]]})").size(), 1U);
    EXPECT_THROW(parse_facet_order(doc.complex, "[[1, 2, 9]]"), InputError);
    EXPECT_THROW(parse_facet_order(doc.complex, "{"), InputError);
}
