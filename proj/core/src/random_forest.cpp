#include <algorithm>
#include <cmath>
#include <numeric>

#include "agtd/errors.hpp"
#include "agtd/learners.hpp"
#include "agtd/rng.hpp"
#include "learners_internal.hpp"

namespace agtd {
namespace {

std::size_t class_index(Label y) { return y == Label::AGT ? 0 : 1; }

double gini(double n_agt, double n_hgt) {
    double n = n_agt + n_hgt;
    if (n <= 0.0) return 0.0;
    double pa = n_agt / n, ph = n_hgt / n;
    return 1.0 - pa * pa - ph * ph;
}

struct SplitCandidate {
    bool found = false;
    std::int32_t attr = -1;
    double split = 0.0;
    double gain = -1.0;

    // Deterministic preference: larger gain, then lower attribute index,
    // then lower split value.
    bool better_than(const SplitCandidate& o) const {
        if (!found) return false;
        if (!o.found) return true;
        if (gain != o.gain) return gain > o.gain;
        if (attr != o.attr) return attr < o.attr;
        return split < o.split;
    }
};

class TreeGrower {
public:
    TreeGrower(const std::vector<Instance>& data, const FeatureSchema& schema,
               std::size_t max_features, std::mt19937_64& rng)
        : data_(data), schema_(schema), max_features_(max_features), rng_(rng) {}

    Tree grow(std::vector<std::uint32_t> root_indices) {
        Tree tree;
        struct Work {
            std::int32_t node;
            std::vector<std::uint32_t> idx;
        };
        std::vector<Work> stack;
        tree.nodes.emplace_back();
        stack.push_back({0, std::move(root_indices)});

        while (!stack.empty()) {
            Work w = std::move(stack.back());
            stack.pop_back();
            TreeNode& node = tree.nodes[static_cast<std::size_t>(w.node)];

            std::size_t counts[2] = {0, 0};
            for (std::uint32_t i : w.idx) ++counts[class_index(data_[i].y)];
            node.count_agt = static_cast<std::uint32_t>(counts[0]);
            node.count_hgt = static_cast<std::uint32_t>(counts[1]);
            if (counts[0] == 0 || counts[1] == 0) continue;  // pure leaf

            SplitCandidate best = find_split(w.idx, counts);
            if (!best.found) continue;  // nothing separates the instances

            std::vector<std::uint32_t> left_idx, right_idx;
            const Attribute& a = schema_.attributes[static_cast<std::size_t>(best.attr)];
            for (std::uint32_t i : w.idx) {
                double v = data_[i].x[static_cast<std::size_t>(best.attr)];
                bool goes_left = a.kind == AttrKind::Nominal ? v == best.split
                                                             : v <= best.split;
                (goes_left ? left_idx : right_idx).push_back(i);
            }

            std::int32_t li = static_cast<std::int32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            std::int32_t ri = static_cast<std::int32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            TreeNode& parent = tree.nodes[static_cast<std::size_t>(w.node)];  // re-fetch
            parent.attr = best.attr;
            parent.split = best.split;
            parent.left = li;
            parent.right = ri;
            stack.push_back({ri, std::move(right_idx)});
            stack.push_back({li, std::move(left_idx)});
        }
        return tree;
    }

private:
    // Scans attributes in a random order until max_features splittable ones
    // have been evaluated. Attributes that are constant within the node do
    // not count against the budget, so an impure node becomes a leaf only
    // when no attribute separates it at all.
    SplitCandidate find_split(const std::vector<std::uint32_t>& idx,
                              const std::size_t counts[2]) {
        std::vector<std::uint32_t> order(schema_.size());
        std::iota(order.begin(), order.end(), 0u);
        std::shuffle(order.begin(), order.end(), rng_);

        const double parent_gini =
            gini(static_cast<double>(counts[0]), static_cast<double>(counts[1]));
        const double n = static_cast<double>(idx.size());

        SplitCandidate best;
        std::size_t evaluated = 0;
        for (std::uint32_t attr : order) {
            if (evaluated >= max_features_) break;
            SplitCandidate cand = scan_attribute(attr, idx, parent_gini, n);
            if (!cand.found) continue;  // constant here, keep looking
            ++evaluated;
            if (cand.better_than(best)) best = cand;
        }
        return best;
    }

    SplitCandidate scan_attribute(std::uint32_t attr,
                                  const std::vector<std::uint32_t>& idx,
                                  double parent_gini, double n) {
        const Attribute& a = schema_.attributes[attr];
        SplitCandidate best;
        best.attr = static_cast<std::int32_t>(attr);

        if (a.kind == AttrKind::Binary) {
            double left_agt = 0, left_hgt = 0, right_agt = 0, right_hgt = 0;
            for (std::uint32_t i : idx) {
                bool left = data_[i].x[attr] <= 0.5;
                bool agt = data_[i].y == Label::AGT;
                if (left) (agt ? left_agt : left_hgt) += 1;
                else (agt ? right_agt : right_hgt) += 1;
            }
            double nl = left_agt + left_hgt, nr = right_agt + right_hgt;
            if (nl == 0 || nr == 0) return {};
            double g = parent_gini - (nl / n) * gini(left_agt, left_hgt) -
                       (nr / n) * gini(right_agt, right_hgt);
            best.found = true;
            best.split = 0.5;
            best.gain = g;
            return best;
        }

        if (a.kind == AttrKind::Nominal) {
            const std::size_t levels = a.levels.size();
            std::vector<double> agt(levels, 0), hgt(levels, 0);
            double tot_agt = 0, tot_hgt = 0;
            for (std::uint32_t i : idx) {
                auto l = static_cast<std::size_t>(data_[i].x[attr]);
                if (data_[i].y == Label::AGT) { agt[l] += 1; tot_agt += 1; }
                else { hgt[l] += 1; tot_hgt += 1; }
            }
            // one-vs-rest per level
            for (std::size_t l = 0; l < levels; ++l) {
                double nl = agt[l] + hgt[l];
                double nr = n - nl;
                if (nl == 0 || nr == 0) continue;
                double g = parent_gini - (nl / n) * gini(agt[l], hgt[l]) -
                           (nr / n) * gini(tot_agt - agt[l], tot_hgt - hgt[l]);
                SplitCandidate cand;
                cand.found = true;
                cand.attr = static_cast<std::int32_t>(attr);
                cand.split = static_cast<double>(l);
                cand.gain = g;
                if (cand.better_than(best)) best = cand;
            }
            return best.found ? best : SplitCandidate{};
        }

        // Numeric: thresholds at midpoints of consecutive distinct values.
        scratch_.clear();
        scratch_.reserve(idx.size());
        for (std::uint32_t i : idx)
            scratch_.emplace_back(data_[i].x[attr], data_[i].y == Label::AGT);
        std::sort(scratch_.begin(), scratch_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (scratch_.front().first == scratch_.back().first) return {};

        double left_agt = 0, left_hgt = 0;
        double tot_agt = 0, tot_hgt = 0;
        for (const auto& [v, agt] : scratch_) (agt ? tot_agt : tot_hgt) += 1;
        for (std::size_t k = 0; k + 1 < scratch_.size(); ++k) {
            (scratch_[k].second ? left_agt : left_hgt) += 1;
            if (scratch_[k].first == scratch_[k + 1].first) continue;
            double nl = left_agt + left_hgt, nr = n - nl;
            double g = parent_gini - (nl / n) * gini(left_agt, left_hgt) -
                       (nr / n) * gini(tot_agt - left_agt, tot_hgt - left_hgt);
            SplitCandidate cand;
            cand.found = true;
            cand.attr = static_cast<std::int32_t>(attr);
            cand.split = scratch_[k].first + (scratch_[k + 1].first - scratch_[k].first) / 2.0;
            cand.gain = g;
            if (cand.better_than(best)) best = cand;
        }
        return best.found ? best : SplitCandidate{};
    }

    const std::vector<Instance>& data_;
    const FeatureSchema& schema_;
    std::size_t max_features_;
    std::mt19937_64& rng_;
    std::vector<std::pair<double, bool>> scratch_;
};

// Canonical instance order: stable content sort, then one seeded shuffle.
// Everything downstream works through these indices, which is what makes
// fit_rf invariant under permutation of the caller's instance order.
std::vector<Instance> canonical_order(std::vector<Instance> data, std::uint64_t seed) {
    std::stable_sort(data.begin(), data.end(), [](const Instance& a, const Instance& b) {
        if (a.x != b.x) return a.x < b.x;
        return class_index(a.y) < class_index(b.y);
    });
    auto rng = make_engine(sub_seed(seed, 0xC0DE));
    std::shuffle(data.begin(), data.end(), rng);
    return data;
}

}  // namespace

TrainedModel fit_rf(const std::vector<Instance>& data, const FeatureSchema& schema,
                    const RfConfig& config) {
    schema.validate();
    if (data.size() < 2) throw TrainError("random forest: need at least two instances");
    if (config.n_trees == 0) throw TrainError("random forest: n_trees must be positive");
    std::size_t n_per_class[2] = {0, 0};
    for (const auto& inst : data) {
        validate_vector(schema, inst.x);
        ++n_per_class[class_index(inst.y)];
    }
    if (n_per_class[0] == 0 || n_per_class[1] == 0)
        throw TrainError("random forest: both classes must be present");

    std::vector<Instance> ordered = canonical_order(data, config.seed);

    RfConfig cfg = config;
    if (cfg.max_features == 0)
        cfg.max_features = static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(schema.size()))));
    cfg.max_features = std::min(cfg.max_features, schema.size());

    RfModel rf;
    rf.config = cfg;
    rf.trees.reserve(cfg.n_trees);
    const auto n = static_cast<std::uint32_t>(ordered.size());

    for (std::size_t t = 0; t < cfg.n_trees; ++t) {
        auto rng = make_engine(sub_seed(cfg.seed, t));
        std::vector<std::uint32_t> indices;
        indices.reserve(n);
        if (cfg.bootstrap) {
            std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
            for (std::uint32_t k = 0; k < n; ++k) indices.push_back(pick(rng));
        } else {
            indices.resize(n);
            std::iota(indices.begin(), indices.end(), 0u);
        }
        TreeGrower grower(ordered, schema, cfg.max_features, rng);
        rf.trees.push_back(grower.grow(std::move(indices)));
    }

    TrainedModel model;
    model.kind = LearnerKind::RandomForest;
    model.schema = schema;
    model.seed = cfg.seed;
    model.params = std::move(rf);
    return model;
}

namespace detail {

double rf_predict(const RfModel& rf, const FeatureSchema& schema, const FeatureVector& x) {
    double sum = 0.0;
    for (const Tree& tree : rf.trees) {
        std::int32_t at = 0;
        while (true) {
            const TreeNode& node = tree.nodes[static_cast<std::size_t>(at)];
            if (node.attr < 0) {
                // Laplace-smoothed leaf class frequency
                sum += (static_cast<double>(node.count_agt) + 1.0) /
                       (static_cast<double>(node.count_agt + node.count_hgt) + 2.0);
                break;
            }
            const Attribute& a = schema.attributes[static_cast<std::size_t>(node.attr)];
            double v = x[static_cast<std::size_t>(node.attr)];
            bool left = a.kind == AttrKind::Nominal ? v == node.split : v <= node.split;
            at = left ? node.left : node.right;
        }
    }
    return sum / static_cast<double>(rf.trees.size());
}

}  // namespace detail

double predict_proba(const TrainedModel& model, const FeatureVector& x) {
    validate_vector(model.schema, x);
    if (model.kind == LearnerKind::NaiveBayes)
        return detail::nb_predict(std::get<NbModel>(model.params), model.schema, x);
    return detail::rf_predict(std::get<RfModel>(model.params), model.schema, x);
}

Label classify(const TrainedModel& model, const FeatureVector& x, double threshold) {
    return predict_proba(model, x) > threshold ? Label::AGT : Label::HGT;
}

}  // namespace agtd
