#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "persista/graph.hpp"
#include "persista/persistence.hpp"
#include "persista/pointcloud.hpp"

namespace persista {
namespace io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text graph format: `node <id> <label>` and `edge <label_a> <label_b> <weight>`
// lines, `#` comments. Ids must be dense 0..n-1. Any malformed line throws
// ParseError naming the line number.
WeightedGraph parse_graph(std::string_view text);

std::string write_graph(const WeightedGraph& g);

// CSV with header `id,label` plus `x,y` or `lat,lon`, optional `vote` column
// with values leave|remain.
struct PointsData {
    PointCloud all;
    bool has_vote = false;
    PointCloud leave;
    PointCloud remain;
};

PointsData parse_points(std::string_view text);

// JSON-serializable barcode, one record per bar; null death encodes an
// infinite bar. Representatives are lists of vertex tuples.
struct BarRecord {
    int dim = 0;
    double birth = 0.0;
    std::optional<double> death;
    std::optional<std::vector<std::vector<VertexId>>> representative;
};

struct BarcodeDocument {
    int max_dim = 0;
    std::string value_kind;  // "year" | "distance_km" | "euclidean"
    std::vector<BarRecord> bars;
};

// Builds a document from a barcode; when reduction and complex are given,
// attaches a representative cycle to every bar.
BarcodeDocument make_document(const Barcode& b, const std::string& value_kind,
                              const ReducedBoundaryMatrix* reduction = nullptr,
                              const FilteredComplex* complex = nullptr);

// Deterministic, lossless JSON. Bars sorted by (dim, birth, death, null last).
std::string write_barcode(const BarcodeDocument& doc);
BarcodeDocument read_barcode(std::string_view json_text);  // ParseError names the JSON path

std::string write_barcode_csv(const BarcodeDocument& doc);

struct SvgOptions {
    int width = 800;
    int row_height = 14;
    int margin = 50;
};

// One horizontal segment per bar, grouped by dimension; infinite bars run to
// the right margin and end in an arrowhead.
std::string render_barcode_svg(const BarcodeDocument& doc, const SvgOptions& opt = {});

}  // namespace io
}  // namespace persista
