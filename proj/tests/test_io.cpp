#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "persista/datasets.hpp"
#include "persista/io.hpp"
#include "persista/persistence.hpp"
#include "persista/wrcf.hpp"

using namespace persista;
using namespace persista::io;

TEST_CASE("parse_graph: minimal valid file") {
    auto g = parse_graph("node 0 a\nnode 1 b\nedge a b 2.5\n");
    CHECK(g.node_count() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == 2.5);
}

TEST_CASE("parse_graph: comments and blank lines are ignored") {
    auto g = parse_graph("# header\n\nnode 0 a   # trailing\nnode 1 b\n");
    CHECK(g.node_count() == 2);
}

TEST_CASE("parse_graph errors name the line") {
    CHECK_THROWS_WITH_AS(parse_graph("node 0 a\nedge a ghost 1\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("node 0 a\nnode 1 a\n"),
                         doctest::Contains("duplicate label"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("node 0 a\nnode 5 b\n"), doctest::Contains("dense"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("vertex 0 a\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_AS(parse_graph("node 0 a\nnode 1 b\nedge a b x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("node 0 a\nnode 1 b\nedge a b 1\nedge b a 2\n"), ParseError);
}

TEST_CASE("bundled EU file parses to 28 nodes and matches the in-code fixture") {
    std::ifstream in(std::string(PERSISTA_DATA_DIR) + "/eu.graph");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    auto g = parse_graph(ss.str());
    CHECK(g.node_count() == 28);
    auto ref = datasets::eu_graph();
    REQUIRE(g.edges().size() == ref.edges().size());
    CHECK(g.labels() == ref.labels());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        CHECK(g.edges()[i].a == ref.edges()[i].a);
        CHECK(g.edges()[i].b == ref.edges()[i].b);
        CHECK(g.edges()[i].weight == ref.edges()[i].weight);
    }
}

TEST_CASE("parse_points: vote column splits the cloud") {
    auto d = parse_points("id,label,x,y,vote\n0,A,0,0,leave\n1,B,1,0,leave\n2,C,2,0,remain\n");
    CHECK(d.has_vote);
    CHECK(d.all.size() == 3);
    CHECK(d.leave.size() == 2);
    CHECK(d.remain.size() == 1);
}

TEST_CASE("parse_points: no vote column yields a single cloud") {
    auto d = parse_points("id,label,lat,lon\n0,London,51.5,-0.12\n");
    CHECK(!d.has_vote);
    CHECK(d.all.size() == 1);
    CHECK(d.all.kind() == CoordinateKind::Geographic);
}

TEST_CASE("parse_points errors name the row") {
    CHECK_THROWS_WITH_AS(parse_points("id,label,lat,lon\n0,A,200,0\n"),
                         doctest::Contains("row 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_points("id,label,x,y,vote\n0,A,0,0,maybe\n"),
                         doctest::Contains("vote"), ParseError);
    CHECK_THROWS_AS(parse_points("id,label\n"), ParseError);
    CHECK_THROWS_AS(parse_points(""), ParseError);
    CHECK_THROWS_WITH_AS(parse_points("id,label,x,y\n0,A,nope,0\n"),
                         doctest::Contains("row 2"), ParseError);
}

TEST_CASE("barcode document: infinite death encodes as null and round-trips") {
    auto g = datasets::eu_graph();
    auto K = build_wrcf(g, WeightOrder::Ascending, 1);
    auto R = reduce(boundary_matrix(K));
    auto b = barcode_from_reduction(R, 1);
    auto doc = make_document(b, "year", &R, &K);
    std::string bytes = write_barcode(doc);
    CHECK(bytes.find("\"death\": null") != std::string::npos);
    auto doc2 = read_barcode(bytes);
    CHECK(write_barcode(doc2) == bytes);  // write . read . write = write
    CHECK(doc2.bars.size() == doc.bars.size());
}

TEST_CASE("barcode serialization round-trips on random barcodes") {
    std::mt19937 rng(307);
    for (int trial = 0; trial < 25; ++trial) {
        auto K = build_wrcf(persista::testing::random_graph(rng, 8, 0.5),
                            WeightOrder::Ascending, 1);
        auto b = barcode(K, 1);
        auto bytes = write_barcode(make_document(b, "year"));
        CHECK(write_barcode(read_barcode(bytes)) == bytes);
    }
}

TEST_CASE("empty barcode document") {
    Barcode b;
    b.max_dim = 1;
    b.bars.resize(2);
    auto bytes = write_barcode(make_document(b, "euclidean"));
    CHECK(bytes.find("\"bars\": []") != std::string::npos);
    auto doc = read_barcode(bytes);
    CHECK(doc.bars.empty());
}

TEST_CASE("read_barcode schema violations name the JSON path") {
    CHECK_THROWS_WITH_AS(read_barcode("{\"max_dim\":1,\"value_kind\":\"year\"}"),
                         doctest::Contains("/bars"), ParseError);
    CHECK_THROWS_WITH_AS(
        read_barcode(
            "{\"max_dim\":1,\"value_kind\":\"year\",\"bars\":[{\"dim\":0,\"birth\":\"x\",\"death\":null}]}"),
        doctest::Contains("/bars/0/birth"), ParseError);
    CHECK_THROWS_WITH_AS(read_barcode("{\"max_dim\":1,\"value_kind\":\"bogus\",\"bars\":[]}"),
                         doctest::Contains("/value_kind"), ParseError);
    CHECK_THROWS_AS(read_barcode("{\"max_dim\":"), ParseError);
}

TEST_CASE("svg: one segment per finite bar, arrowhead for infinite bars") {
    BarcodeDocument doc;
    doc.max_dim = 1;
    doc.value_kind = "euclidean";
    doc.bars.push_back({0, 0.0, 1.5, std::nullopt});
    auto svg = render_barcode_svg(doc);
    CHECK(svg.find("<svg") == 0);
    std::size_t bars = 0, pos = 0;
    while ((pos = svg.find("class=\"bar\"", pos)) != std::string::npos) {
        ++bars;
        ++pos;
    }
    CHECK(bars == 1);
    CHECK(svg.find("class=\"arrow\"") == std::string::npos);

    doc.bars.push_back({1, 0.5, std::nullopt, std::nullopt});
    auto svg2 = render_barcode_svg(doc);
    CHECK(svg2.find("class=\"bar infinite\"") != std::string::npos);
    CHECK(svg2.find("class=\"arrow\"") != std::string::npos);
}

TEST_CASE("svg: EU barcode has exactly one dim-1 segment starting at 1995") {
    auto K = build_wrcf(datasets::eu_graph(), WeightOrder::Ascending, 1);
    auto doc = make_document(barcode(K, 1), "year");
    auto svg = render_barcode_svg(doc);
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("data-dim=\"1\" data-birth=\"1995.0\"", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 1);
}

TEST_CASE("svg: empty barcode still renders axes") {
    BarcodeDocument doc;
    doc.max_dim = 0;
    doc.value_kind = "year";
    auto svg = render_barcode_svg(doc);
    CHECK(svg.find("class=\"axis\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("serialization is deterministic") {
    auto K = build_wrcf(datasets::eu_graph(), WeightOrder::Ascending, 1);
    auto R = reduce(boundary_matrix(K));
    auto b = barcode_from_reduction(R, 1);
    auto doc = make_document(b, "year", &R, &K);
    CHECK(write_barcode(doc) == write_barcode(doc));
    CHECK(render_barcode_svg(doc) == render_barcode_svg(doc));
    CHECK(write_barcode_csv(doc) == write_barcode_csv(doc));
}

TEST_CASE("write_graph round-trips through parse_graph") {
    auto g = datasets::eu_graph();
    auto g2 = parse_graph(write_graph(g));
    CHECK(g2.labels() == g.labels());
    CHECK(g2.edges().size() == g.edges().size());
}
