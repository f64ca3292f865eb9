#pragma once

// Bilingual equivalence graph and the multi-hop re-parameterized embedding
// table:
//   g(i, j)  = c(i, j) / sum_k c(i, k)                      (rows with no links stay zero)
//   E^{h+1}  = act(E^h W1^h + G E^h W2^h + B^h),  E^0 = E
// with exact reverse-mode gradients for E and every layer parameter.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "forge/align.hpp"
#include "forge/kernels.hpp"
#include "forge/matrix.hpp"

namespace forge::graph {

using linalg::CsrMatrix;
using linalg::Matrix;

class AlignmentGraph {
 public:
  AlignmentGraph() = default;
  explicit AlignmentGraph(CsrMatrix g);

  size_t vocab_size() const { return g_.rows; }
  const CsrMatrix& matrix() const { return g_; }
  double at(size_t i, size_t j) const { return g_.at(i, j); }
  double row_sum(size_t i) const;

  /// JSON header line {"vocab_size","nnz","checksum"} then "i \t j \t g" rows;
  /// the checksum is the SHA-256 of the rows.
  std::string serialize() const;
  static AlignmentGraph parse(std::string_view text);
  void save(const std::filesystem::path& path) const;
  static AlignmentGraph load(const std::filesystem::path& path);

 private:
  CsrMatrix g_;
};

/// Row-normalizes the link counts over a vocabulary of vocab_size pieces.
AlignmentGraph build_graph(const align::LinkCounts& counts, size_t vocab_size);

enum class Activation : uint32_t { Identity = 0, Tanh = 1, Relu = 2 };
enum class BiasMode : uint32_t { Row = 0, Full = 1 };

Activation parse_activation(std::string_view name);
std::string_view to_string(Activation a);

struct GraphLayer {
  Matrix w1;    // d x d
  Matrix w2;    // d x d
  Matrix bias;  // 1 x d broadcast over rows, or |V| x d
  Activation activation = Activation::Tanh;

  BiasMode bias_mode() const { return bias.rows() == 1 ? BiasMode::Row : BiasMode::Full; }
};

struct EmbeddingStack {
  Matrix embeddings;
  std::vector<GraphLayer> layers;

  size_t hops() const { return layers.size(); }
};

/// Activations kept by the forward pass for the backward pass.
struct ForwardCache {
  std::vector<Matrix> inputs;      // E^h
  std::vector<Matrix> propagated;  // G E^h
  std::vector<Matrix> pre;         // pre-activation
  std::vector<Matrix> outputs;     // E^{h+1}

  bool matches(const EmbeddingStack& stack) const;
};

Matrix gnn_forward(const EmbeddingStack& stack, const AlignmentGraph& graph, ForwardCache* cache = nullptr,
                   const kernels::KernelTable& k = kernels::active());

struct LayerGradients {
  Matrix w1;
  Matrix w2;
  Matrix bias;
};

struct Gradients {
  Matrix embeddings;
  std::vector<LayerGradients> layers;
};

/// Gradients of sum(upstream ⊙ E^H). Throws MissingForwardCache unless
/// `cache` was filled by gnn_forward on the same stack.
Gradients gnn_backward(const EmbeddingStack& stack, const AlignmentGraph& graph, const ForwardCache& cache,
                       const Matrix& upstream, const kernels::KernelTable& k = kernels::active());

/// Glorot-style uniform(-sqrt(6/(2d)), +sqrt(6/(2d))) weights, zero bias.
std::vector<GraphLayer> init_layers(size_t d, size_t hops, uint64_t seed, Activation activation = Activation::Tanh,
                                    BiasMode bias_mode = BiasMode::Row, size_t vocab_size = 0);

/// uniform(-sqrt(3/d), +sqrt(3/d)) entries, unit variance per row.
Matrix init_embeddings(size_t vocab_size, size_t d, uint64_t seed);

void save_embeddings(const std::filesystem::path& path, const Matrix& e);
Matrix load_embeddings(const std::filesystem::path& path);

/// Little-endian: "FRGL", u32 version, u64 hops, then per layer u32
/// activation, W1, W2, B each as an embedded matrix record.
void save_layers(const std::filesystem::path& path, const std::vector<GraphLayer>& layers);
std::vector<GraphLayer> load_layers(const std::filesystem::path& path);

struct GradCheckReport {
  size_t parameters_checked = 0;
  double max_relative_error = 0.0;
  bool passed = false;
};

/// Central-difference check of gnn_backward against gnn_forward for the
/// loss sum(upstream ⊙ E^H).
GradCheckReport gradient_check(const EmbeddingStack& stack, const AlignmentGraph& graph, const Matrix& upstream,
                               double step = 1e-5, double tolerance = 1e-4);

/// |a - n| / max(|a|, |n|), falling back to the absolute error below 1e-8.
double relative_error(double analytic, double numeric);

}  // namespace forge::graph
