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

#include "detmit/graph.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "detmit/errors.h"

namespace detmit {

namespace {

// Subset expansion is exponential in the class size.
constexpr std::size_t kMaxProjectorClassSize = 24;

}  // namespace

GraphSpec::GraphSpec(std::size_t num_vertices, std::vector<Edge> edges, std::vector<int> coloring)
    : num_vertices_(num_vertices), edges_(std::move(edges)), coloring_(std::move(coloring)) {
    if (num_vertices_ == 0) {
        throw InputError("Graph needs at least one vertex");
    }
    if (coloring_.size() != num_vertices_) {
        throw InputError("Coloring has " + std::to_string(coloring_.size()) + " entries for " +
                         std::to_string(num_vertices_) + " vertices");
    }
    for (auto &e : edges_) {
        if (e.first == e.second) {
            throw InputError("Self-loop at vertex " + std::to_string(e.first));
        }
        if (e.first >= num_vertices_ || e.second >= num_vertices_) {
            throw InputError("Edge endpoint out of range");
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InputError("Duplicate edge in graph");
    }
    neighbors_.assign(num_vertices_, {});
    for (const auto &[a, b] : edges_) {
        if (coloring_[a] == coloring_[b]) {
            throw InputError("Coloring invalid: adjacent vertices " + std::to_string(a) + " and " +
                             std::to_string(b) + " share color " + std::to_string(coloring_[a]));
        }
        neighbors_[a].push_back(b);
        neighbors_[b].push_back(a);
    }
    for (auto &nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
    }
    std::set<int> distinct(coloring_.begin(), coloring_.end());
    colors_.assign(distinct.begin(), distinct.end());
}

std::vector<std::size_t> GraphSpec::color_class(std::size_t class_index) const {
    if (class_index >= colors_.size()) {
        throw InputError("Color class " + std::to_string(class_index) + " out of range");
    }
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < num_vertices_; v++) {
        if (coloring_[v] == colors_[class_index]) {
            members.push_back(v);
        }
    }
    return members;
}

const char *graph_kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::kGhz:
            return "GHZ";
        case GraphKind::kLinearCluster:
            return "LC";
    }
    return "?";
}

GraphSpec build_graph(GraphKind kind, std::size_t num_vertices) {
    if (num_vertices < 2) {
        throw InputError("Graph states need n >= 2");
    }
    std::vector<Edge> edges;
    std::vector<int> coloring(num_vertices);
    if (kind == GraphKind::kGhz) {
        for (std::size_t v = 1; v < num_vertices; v++) {
            edges.emplace_back(0, v);
            coloring[v] = 1;
        }
        coloring[0] = 0;
    } else {
        for (std::size_t v = 0; v + 1 < num_vertices; v++) {
            edges.emplace_back(v, v + 1);
        }
        for (std::size_t v = 0; v < num_vertices; v++) {
            coloring[v] = static_cast<int>(v % 2);
        }
    }
    return GraphSpec(num_vertices, std::move(edges), std::move(coloring));
}

std::vector<PauliString> stabilizers(const GraphSpec &graph) {
    std::vector<PauliString> result;
    result.reserve(graph.num_vertices());
    for (std::size_t k = 0; k < graph.num_vertices(); k++) {
        std::vector<Pauli> factors(graph.num_vertices(), Pauli::I);
        factors[k] = Pauli::X;
        for (std::size_t j : graph.neighbors(k)) {
            factors[j] = Pauli::Z;
        }
        result.emplace_back(std::move(factors));
    }
    return result;
}

std::string color_class_setting(const GraphSpec &graph, std::size_t class_index) {
    std::string setting(graph.num_vertices(), 'Z');
    for (std::size_t v : graph.color_class(class_index)) {
        setting[v] = 'X';
    }
    return setting;
}

std::vector<PauliString> color_class_projector_terms(const GraphSpec &graph, std::size_t class_index) {
    std::vector<std::size_t> members = graph.color_class(class_index);
    if (members.size() > kMaxProjectorClassSize) {
        throw ResourceLimitError("Color class of size " + std::to_string(members.size()) +
                                 " is too large to expand into stabilizer products");
    }
    std::vector<PauliString> gens = stabilizers(graph);
    const double weight = std::ldexp(1.0, -static_cast<int>(members.size()));
    const std::size_t num_terms = std::size_t{1} << members.size();

    // Gray-code walk: each step multiplies in or out a single generator.
    std::vector<PauliString> terms;
    terms.reserve(num_terms);
    PauliString current = PauliString::identity(graph.num_vertices());
    terms.push_back(current.scaled(weight));
    for (std::size_t step = 1; step < num_terms; step++) {
        std::size_t flipped = static_cast<std::size_t>(std::countr_zero(step));
        current = multiply_real(current, gens[members[flipped]]);
        terms.push_back(current.scaled(weight));
    }
    return terms;
}

}  // namespace detmit
