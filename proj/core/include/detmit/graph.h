// Copyright 2026 The detmit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DETMIT_GRAPH_H
#define DETMIT_GRAPH_H

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "detmit/pauli.h"

namespace detmit {

using Edge = std::pair<std::size_t, std::size_t>;

/// Graph of a graph state together with a proper vertex coloring.
class GraphSpec {
   public:
    /// Edges are stored normalized (smaller vertex first) and sorted.
    /// Throws InputError on self-loops, duplicate or out-of-range edges, a
    /// coloring of the wrong length, or adjacent vertices sharing a color.
    GraphSpec(std::size_t num_vertices, std::vector<Edge> edges, std::vector<int> coloring);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &coloring() const { return coloring_; }
    const std::vector<std::size_t> &neighbors(std::size_t vertex) const { return neighbors_[vertex]; }

    /// Distinct colors in increasing order; color class l is color_classes()[l].
    const std::vector<int> &colors() const { return colors_; }
    std::size_t num_colors() const { return colors_.size(); }
    std::vector<std::size_t> color_class(std::size_t class_index) const;

    bool operator==(const GraphSpec &other) const {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_ && coloring_ == other.coloring_;
    }

   private:
    std::size_t num_vertices_;
    std::vector<Edge> edges_;
    std::vector<int> coloring_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<int> colors_;
};

enum class GraphKind { kGhz, kLinearCluster };

const char *graph_kind_name(GraphKind kind);

/// GHZ: star graph centered on vertex 0, center color 0, leaves color 1.
/// Linear cluster: path 0-1-...-(n-1), color = vertex parity.
/// Throws InputError for n < 2.
GraphSpec build_graph(GraphKind kind, std::size_t num_vertices);

/// S_k = X_k prod_{j in N(k)} Z_j, one per vertex.
std::vector<PauliString> stabilizers(const GraphSpec &graph);

/// Common eigenbasis of one color class: X on the class, Z elsewhere.
std::string color_class_setting(const GraphSpec &graph, std::size_t class_index);

/// Expansion of prod_{k in Q_l} (S_k + I) / 2 into 2^|Q_l| Pauli strings,
/// each carrying coefficient 2^-|Q_l| times its real phase.
std::vector<PauliString> color_class_projector_terms(const GraphSpec &graph, std::size_t class_index);

}  // namespace detmit

#endif
