#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "agtd/tweet.hpp"

namespace agtd {

enum class AttrKind : std::uint8_t { Numeric, Nominal, Binary };

struct Attribute {
    std::string name;
    AttrKind kind = AttrKind::Numeric;
    std::vector<std::string> levels;  // nominal only

    bool operator==(const Attribute&) const = default;
};

/// Ordered attribute list shared by training data and trained models.
/// Class labels are always {AGT, HGT} with AGT the positive class.
struct FeatureSchema {
    std::vector<Attribute> attributes;

    std::size_t size() const { return attributes.size(); }
    void validate() const;  // distinct names, distinct nominal levels

    bool operator==(const FeatureSchema&) const = default;
};

/// Values aligned to a schema. Numerics are stored as-is, binary as 0/1,
/// nominal as the level index. Must be complete and finite; the learners
/// do not handle missing values.
using FeatureVector = std::vector<double>;

void validate_vector(const FeatureSchema& schema, const FeatureVector& x);

struct Instance {
    FeatureVector x;
    Label y = Label::HGT;
};

// ---------------------------------------------------------------------------
// Naive Bayes: class priors from relative frequencies, Laplace alpha=1 on
// binary/nominal likelihoods, per-class Gaussians on numerics with a
// variance floor for constant attributes.

inline constexpr double kNbVarianceFloor = 1e-9;
inline constexpr double kNbAlpha = 1.0;

struct NbAttrParams {
    // Binary: level_prob = {P(x=0|c), P(x=1|c)} per class.
    // Nominal: level_prob = per-class level probabilities.
    // Numeric: mean/variance per class.
    std::vector<std::vector<double>> level_prob;  // [class][level]
    std::vector<double> mean;                     // [class]
    std::vector<double> variance;                 // [class]
};

struct NbModel {
    std::vector<double> prior;  // [class], index 0 = AGT, 1 = HGT
    std::vector<NbAttrParams> attrs;
};

// ---------------------------------------------------------------------------
// Random forest: CART-style trees on bootstrap samples, Gini impurity,
// max_features attributes sampled without replacement per node, leaves
// keep class counts. Fully deterministic for a given seed: instances are
// put in a canonical order (stable sort by content, then a seeded shuffle)
// before any index-based sampling, so instance order at the call site
// cannot change the model.

struct RfConfig {
    std::size_t n_trees = 100;
    std::size_t max_features = 0;  // 0 = ceil(sqrt(#attributes))
    std::uint64_t seed = 0;
    bool bootstrap = true;  // off = every tree sees the full sample once
};

struct TreeNode {
    // Internal node: attr >= 0; numeric/binary compare x[attr] <= split,
    // nominal compare x[attr] == split. Leaf: attr == -1, counts valid.
    std::int32_t attr = -1;
    double split = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint32_t count_agt = 0;
    std::uint32_t count_hgt = 0;
};

struct Tree {
    std::vector<TreeNode> nodes;  // node 0 is the root
};

struct RfModel {
    RfConfig config;
    std::vector<Tree> trees;
};

// ---------------------------------------------------------------------------

enum class LearnerKind : std::uint8_t { NaiveBayes, RandomForest };

struct TrainedModel {
    LearnerKind kind = LearnerKind::NaiveBayes;
    FeatureSchema schema;
    std::uint64_t seed = 0;
    std::variant<NbModel, RfModel> params;
};

/// Requires at least one instance per class.
TrainedModel fit_nb(const std::vector<Instance>& data, const FeatureSchema& schema);

/// Requires >= 2 instances with both classes present.
TrainedModel fit_rf(const std::vector<Instance>& data, const FeatureSchema& schema,
                    const RfConfig& config);

/// Probability that x belongs to class AGT, in [0, 1].
double predict_proba(const TrainedModel& model, const FeatureVector& x);

/// AGT iff predict_proba is strictly above the threshold.
Label classify(const TrainedModel& model, const FeatureVector& x, double threshold = 0.5);

}  // namespace agtd
