#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persista/datasets.hpp"
#include "persista/io.hpp"
#include "persista/persistence.hpp"
#include "persista/vr.hpp"
#include "persista/wrcf.hpp"

namespace {

using namespace persista;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io::ParseError("cannot open output file: " + path);
    out << bytes;
}

std::pair<std::string, std::string> split_pair(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == spec.size())
        throw io::ParseError("--remove-edge expects 'LabelA,LabelB', got '" + spec + "'");
    return {spec.substr(0, comma), spec.substr(comma + 1)};
}

struct OutputFlags {
    std::string output;
    std::string format = "json";
    bool reps = false;
    bool include_zero = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--output", f.output, "Output path (default stdout)");
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--reps", f.reps, "Emit representative cycles");
    cmd->add_flag("--include-zero", f.include_zero, "Keep zero-length bars");
}

std::string serialize(const FilteredComplex& K, int max_dim, const std::string& value_kind,
                      const OutputFlags& f) {
    auto R = reduce(boundary_matrix(K));
    Barcode b = barcode_from_reduction(R, max_dim, f.include_zero);
    io::BarcodeDocument doc =
        io::make_document(b, value_kind, f.reps ? &R : nullptr, f.reps ? &K : nullptr);
    return f.format == "csv" ? io::write_barcode_csv(doc) : io::write_barcode(doc);
}

int run_wrcf(const std::string& input, const std::string& order_name, int max_dim,
             const std::vector<std::string>& remove_specs, const OutputFlags& f) {
    WeightedGraph g = io::parse_graph(read_file(input));
    if (!remove_specs.empty()) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& s : remove_specs) pairs.push_back(split_pair(s));
        std::vector<std::string> warnings;
        g = g.remove_edges(pairs, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    }
    auto order = order_name == "desc" ? WeightOrder::Descending : WeightOrder::Ascending;
    FilteredComplex K = build_wrcf(g, order, max_dim);
    write_output(f.output, serialize(K, max_dim, "year", f));
    return 0;
}

int run_vr(const std::string& input, std::string metric_name, double eps_max, int max_dim,
           bool split_vote, const OutputFlags& f) {
    io::PointsData data = io::parse_points(read_file(input));
    if (metric_name.empty())
        metric_name = data.all.kind() == CoordinateKind::Geographic ? "haversine" : "euclidean";
    Metric m = metric_name == "haversine" ? Metric::HaversineKm : Metric::Euclidean;
    const std::string value_kind = m == Metric::HaversineKm ? "distance_km" : "euclidean";

    auto run_one = [&](const PointCloud& pc) {
        DistanceMatrix d = pairwise_distances(pc, m);
        double eps = eps_max > 0 ? eps_max : enclosing_radius(d);
        FilteredComplex K = build_vr(pc, m, eps, max_dim);
        return serialize(K, max_dim, value_kind, f);
    };

    if (!split_vote) {
        write_output(f.output, run_one(data.all));
        return 0;
    }
    if (!data.has_vote) throw io::ParseError("--split-vote requires a 'vote' column");
    std::string leave_doc = run_one(data.leave);
    std::string remain_doc = run_one(data.remain);
    if (f.output.empty() || f.output == "-") {
        std::cout << leave_doc << remain_doc;
    } else {
        auto dot = f.output.rfind('.');
        std::string stem = dot == std::string::npos ? f.output : f.output.substr(0, dot);
        std::string ext = dot == std::string::npos ? "" : f.output.substr(dot);
        write_output(stem + ".leave" + ext, leave_doc);
        write_output(stem + ".remain" + ext, remain_doc);
    }
    return 0;
}

int run_plot(const std::string& input, const std::string& output) {
    io::BarcodeDocument doc = io::read_barcode(read_file(input));
    write_output(output, io::render_barcode_svg(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistent homology of weighted networks and point clouds"};
    app.require_subcommand(1);

    std::string input, order = "asc", metric, plot_output;
    int max_dim = 1;
    double eps_max = 0.0;
    bool split_vote = false;
    std::vector<std::string> remove_specs;
    OutputFlags wrcf_flags, vr_flags;

    auto* wrcf_cmd =
        app.add_subcommand("wrcf", "Weight rank clique filtration of a weighted graph");
    wrcf_cmd->add_option("--input", input, "Graph file")->required();
    wrcf_cmd->add_option("--order", order, "Threshold order")
        ->check(CLI::IsMember({"asc", "desc"}));
    wrcf_cmd->add_option("--max-dim", max_dim, "Top homology dimension")
        ->check(CLI::NonNegativeNumber);
    wrcf_cmd->add_option("--remove-edge", remove_specs,
                         "Remove edge 'LabelA,LabelB' before filtering (repeatable)");
    add_output_flags(wrcf_cmd, wrcf_flags);

    auto* vr_cmd = app.add_subcommand("vr", "Vietoris-Rips filtration of a point cloud");
    vr_cmd->add_option("--input", input, "Points CSV file")->required();
    vr_cmd->add_option("--metric", metric, "Distance metric")
        ->check(CLI::IsMember({"euclidean", "haversine"}));
    vr_cmd->add_option("--eps-max", eps_max, "Largest scale (default: enclosing radius)");
    vr_cmd->add_option("--max-dim", max_dim, "Top homology dimension")
        ->check(CLI::NonNegativeNumber);
    vr_cmd->add_flag("--split-vote", split_vote, "Emit leave and remain documents");
    add_output_flags(vr_cmd, vr_flags);

    auto* plot_cmd = app.add_subcommand("plot", "Render a barcode document as SVG");
    plot_cmd->add_option("--input", input, "Barcode JSON file")->required();
    plot_cmd->add_option("--output", plot_output, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (wrcf_cmd->parsed()) return run_wrcf(input, order, max_dim, remove_specs, wrcf_flags);
        if (vr_cmd->parsed()) return run_vr(input, metric, eps_max, max_dim, split_vote, vr_flags);
        return run_plot(input, plot_output);
    } catch (const persista::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
