#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "oscnet/errors.hpp"
#include "oscnet/types.hpp"

namespace oscnet {

/// Network wiring. Two flavours are supported:
///   - flat:    one layer, all-to-all coupling, the first `n_inputs` oscillators
///              act as inputs and the rest as outputs (the 2x2 four-oscillator
///              network is flat(4, 2));
///   - layered: bipartite coupling between adjacent layers only, no intra-layer
///              synapses (the 2-4-2 architecture is layered({2, 4, 2})).
/// The mask is symmetric with an all-false diagonal.
struct NetworkTopology {
    int n = 0;
    std::vector<int> layer_sizes;
    int n_inputs = 0;  // flat topologies only; layered uses the first layer
    MaskMatrix coupling_mask;

    static NetworkTopology flat(int n, int n_inputs = -1) {
        if (n < 2) {
            throw ConfigError("flat topology needs at least 2 oscillators");
        }
        if (n_inputs < 0) {
            n_inputs = n / 2;
        }
        if (n_inputs < 1 || n_inputs >= n) {
            throw ConfigError("flat topology: n_inputs must be in [1, n)");
        }
        NetworkTopology t;
        t.n = n;
        t.layer_sizes = {n};
        t.n_inputs = n_inputs;
        t.coupling_mask = MaskMatrix::Constant(n, n, true);
        t.coupling_mask.diagonal().setConstant(false);
        return t;
    }

    static NetworkTopology layered(std::vector<int> sizes) {
        if (sizes.size() < 2) {
            throw ConfigError("layered topology needs at least 2 layers");
        }
        for (int s : sizes) {
            if (s < 1) {
                throw ConfigError("layer sizes must be positive");
            }
        }
        NetworkTopology t;
        t.n = std::accumulate(sizes.begin(), sizes.end(), 0);
        t.layer_sizes = std::move(sizes);
        t.n_inputs = t.layer_sizes.front();
        t.coupling_mask = MaskMatrix::Constant(t.n, t.n, false);
        int offset = 0;
        for (std::size_t l = 0; l + 1 < t.layer_sizes.size(); ++l) {
            const int a = t.layer_sizes[l];
            const int b = t.layer_sizes[l + 1];
            for (int i = offset; i < offset + a; ++i) {
                for (int j = offset + a; j < offset + a + b; ++j) {
                    t.coupling_mask(i, j) = true;
                    t.coupling_mask(j, i) = true;
                }
            }
            offset += a;
        }
        return t;
    }

    bool is_layered() const { return layer_sizes.size() > 1; }

    std::vector<int> input_indices() const {
        std::vector<int> idx(static_cast<std::size_t>(is_layered() ? layer_sizes.front() : n_inputs));
        std::iota(idx.begin(), idx.end(), 0);
        return idx;
    }

    std::vector<int> output_indices() const {
        std::vector<int> idx;
        const int m = is_layered() ? layer_sizes.back() : n - n_inputs;
        for (int i = n - m; i < n; ++i) {
            idx.push_back(i);
        }
        return idx;
    }

    std::vector<int> hidden_indices() const {
        std::vector<int> idx;
        if (is_layered()) {
            int lo = layer_sizes.front();
            int hi = n - layer_sizes.back();
            for (int i = lo; i < hi; ++i) {
                idx.push_back(i);
            }
        }
        return idx;
    }

    /// Inputs followed by outputs; the order used for visible patterns.
    std::vector<int> visible_indices() const {
        std::vector<int> idx = input_indices();
        for (int i : output_indices()) {
            idx.push_back(i);
        }
        return idx;
    }

    int n_visible() const { return static_cast<int>(visible_indices().size()); }

    /// Mask-true pairs with i < j, lexicographic. This is the canonical
    /// ordering of the learnable synapses in traces and weight files.
    std::vector<std::pair<int, int>> masked_pairs() const {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (coupling_mask(i, j)) {
                    pairs.emplace_back(i, j);
                }
            }
        }
        return pairs;
    }

    void validate() const {
        if (n < 1) {
            throw ConfigError("topology: n must be positive");
        }
        if (std::accumulate(layer_sizes.begin(), layer_sizes.end(), 0) != n) {
            throw ConfigError("topology: layer sizes must sum to n");
        }
        if (coupling_mask.rows() != n || coupling_mask.cols() != n) {
            throw ConfigError("topology: mask shape mismatch");
        }
        for (int i = 0; i < n; ++i) {
            if (coupling_mask(i, i)) {
                throw ConfigError("topology: mask diagonal must be false");
            }
            for (int j = 0; j < n; ++j) {
                if (coupling_mask(i, j) != coupling_mask(j, i)) {
                    throw ConfigError("topology: mask must be symmetric");
                }
            }
        }
    }
};

}  // namespace oscnet
