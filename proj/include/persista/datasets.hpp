#pragma once

#include "persista/graph.hpp"
#include "persista/pointcloud.hpp"

namespace persista {
namespace datasets {

// The 28-country EU accession network, pre-referendum: land borders plus the
// Denmark-Sweden bridge, the UK-France tunnel, and the Malta-Italy and
// Cyprus-Greece proximity links. Edge weight = later of the two accession
// years. Identical to the bundled data/eu.graph file.
WeightedGraph eu_graph();

// Accession year per node of eu_graph(), in node order.
std::vector<double> eu_accession_years();

// Deterministic planar sample from an annulus; same seed, same cloud on any
// platform.
PointCloud synthetic_annulus(int n, double r_inner, double r_outer, unsigned long seed);

}  // namespace datasets
}  // namespace persista
