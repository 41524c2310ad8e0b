#pragma once

#include <string>
#include <vector>

#include "simon/align.hpp"
#include "simon/embedding.hpp"

namespace simon {
namespace retrieval {

enum class Metric { cosine, hyperbolic };

Metric parse_metric(const std::string& name);

struct RetrievalReport {
    std::vector<std::size_t> ks;
    std::vector<double> accuracy_at_k;
    std::vector<std::size_t> per_query_rank;  // 1-based rank of the true item
};

// Gallery indices by descending similarity, ties to the smaller index.
// Under the hyperbolic metric the query is lifted through the brain branch
// (alpha_b, identity) and gallery rows through the visual branch
// (alpha_v, w_v); without params both branches default to alpha 1, identity.
std::vector<std::size_t> rank(const std::vector<double>& query, const EmbeddingMatrix& gallery,
                              Metric metric, const align::AlignParams* params = nullptr,
                              double curvature_c = 1.0);

RetrievalReport topk_accuracy(const EmbeddingMatrix& queries, const EmbeddingMatrix& gallery,
                              const std::vector<std::size_t>& truth,
                              const std::vector<std::size_t>& ks, Metric metric,
                              const align::AlignParams* params = nullptr,
                              double curvature_c = 1.0);

// Truth CSV rows "query_index,gallery_index" (header optional).
std::vector<std::size_t> load_truth_csv(const std::string& path, std::size_t query_count);
void save_report_csv(const std::string& path, const RetrievalReport& report);

}  // namespace retrieval
}  // namespace simon
