#include "persista/datasets.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace persista {
namespace datasets {

namespace {

struct Country {
    const char* label;
    int year;
};

// Node order is alphabetical; ids are positions in this table.
constexpr Country kCountries[] = {
    {"Austria", 1995},  {"Belgium", 1957},        {"Bulgaria", 2007},
    {"Croatia", 2013},  {"Cyprus", 2004},         {"Czech-Republic", 2004},
    {"Denmark", 1973},  {"Estonia", 2004},        {"Finland", 1995},
    {"France", 1957},   {"Germany", 1957},        {"Greece", 1981},
    {"Hungary", 2004},  {"Ireland", 1973},        {"Italy", 1957},
    {"Latvia", 2004},   {"Lithuania", 2004},      {"Luxembourg", 1957},
    {"Malta", 2004},    {"Netherlands", 1957},    {"Poland", 2004},
    {"Portugal", 1986}, {"Romania", 2007},        {"Slovakia", 2004},
    {"Slovenia", 2004}, {"Spain", 1986},          {"Sweden", 1995},
    {"UK", 1973},
};

constexpr std::pair<const char*, const char*> kBorders[] = {
    {"Belgium", "Netherlands"}, {"Belgium", "Germany"},      {"Belgium", "France"},
    {"Belgium", "Luxembourg"},  {"Netherlands", "Germany"},  {"Germany", "France"},
    {"Germany", "Luxembourg"},  {"France", "Luxembourg"},    {"France", "Italy"},
    {"Germany", "Denmark"},     {"France", "UK"},            {"UK", "Ireland"},
    {"France", "Spain"},        {"Spain", "Portugal"},       {"Germany", "Austria"},
    {"Italy", "Austria"},       {"Denmark", "Sweden"},       {"Sweden", "Finland"},
    {"Germany", "Poland"},      {"Germany", "Czech-Republic"},
    {"Austria", "Czech-Republic"}, {"Austria", "Slovakia"},  {"Austria", "Hungary"},
    {"Austria", "Slovenia"},    {"Italy", "Slovenia"},       {"Italy", "Malta"},
    {"Poland", "Czech-Republic"}, {"Poland", "Slovakia"},    {"Poland", "Lithuania"},
    {"Czech-Republic", "Slovakia"}, {"Slovakia", "Hungary"}, {"Hungary", "Slovenia"},
    {"Estonia", "Latvia"},      {"Latvia", "Lithuania"},     {"Greece", "Cyprus"},
    {"Greece", "Bulgaria"},     {"Bulgaria", "Romania"},     {"Romania", "Hungary"},
    {"Croatia", "Slovenia"},    {"Croatia", "Hungary"},
};

int accession_year(const WeightedGraph& g, VertexId v) {
    for (const Country& c : kCountries)
        if (g.label(v) == c.label) return c.year;
    throw std::logic_error("unknown country");
}

}  // namespace

WeightedGraph eu_graph() {
    WeightedGraph g;
    for (const Country& c : kCountries) g.add_node(c.label);
    for (const auto& [a, b] : kBorders) {
        VertexId ia = g.node_id(a), ib = g.node_id(b);
        g.add_edge(ia, ib, std::max(accession_year(g, ia), accession_year(g, ib)));
    }
    return g;
}

std::vector<double> eu_accession_years() {
    std::vector<double> years;
    for (const Country& c : kCountries) years.push_back(c.year);
    return years;
}

PointCloud synthetic_annulus(int n, double r_inner, double r_outer, unsigned long seed) {
    if (n < 8) throw std::invalid_argument("annulus needs at least 8 points");
    if (!(0.0 < r_inner && r_inner < r_outer))
        throw std::invalid_argument("need 0 < r_inner < r_outer");

    // mt19937_64 output is standard-specified, so identical across platforms;
    // distributions are not, hence the explicit bit-to-double conversion.
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    PointCloud pc(CoordinateKind::Planar);
    for (int i = 0; i < n; ++i) {
        // area-uniform radius
        double r = std::sqrt(r_inner * r_inner +
                             uniform() * (r_outer * r_outer - r_inner * r_inner));
        double theta = two_pi * uniform();
        pc.add_point(r * std::cos(theta), r * std::sin(theta), "p" + std::to_string(i));
    }
    return pc;
}

}  // namespace datasets
}  // namespace persista
