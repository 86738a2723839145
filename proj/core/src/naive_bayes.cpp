#include <cmath>
#include <numbers>
#include <set>
#include <unordered_set>

#include "agtd/errors.hpp"
#include "agtd/learners.hpp"
#include "learners_internal.hpp"

namespace agtd {

void FeatureSchema::validate() const {
    std::unordered_set<std::string> names;
    for (const auto& a : attributes) {
        if (a.name.empty()) throw ConfigError("schema: empty attribute name");
        if (!names.insert(a.name).second)
            throw ConfigError("schema: duplicate attribute name \"" + a.name + "\"");
        if (a.kind == AttrKind::Nominal) {
            if (a.levels.size() < 2)
                throw ConfigError("schema: nominal attribute \"" + a.name +
                                  "\" needs at least two levels");
            std::set<std::string> lv(a.levels.begin(), a.levels.end());
            if (lv.size() != a.levels.size())
                throw ConfigError("schema: duplicate level in \"" + a.name + "\"");
        } else if (!a.levels.empty()) {
            throw ConfigError("schema: non-nominal attribute \"" + a.name +
                              "\" must not declare levels");
        }
    }
}

void validate_vector(const FeatureSchema& schema, const FeatureVector& x) {
    if (x.size() != schema.size())
        throw PredictError("feature vector length " + std::to_string(x.size()) +
                           " does not match schema length " + std::to_string(schema.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Attribute& a = schema.attributes[i];
        if (!std::isfinite(x[i]))
            throw PredictError("attribute \"" + a.name + "\": non-finite value");
        if (a.kind == AttrKind::Binary && x[i] != 0.0 && x[i] != 1.0)
            throw PredictError("attribute \"" + a.name + "\": binary value must be 0 or 1");
        if (a.kind == AttrKind::Nominal) {
            double v = x[i];
            if (v != std::floor(v) || v < 0.0 ||
                v >= static_cast<double>(a.levels.size()))
                throw PredictError("attribute \"" + a.name + "\": level index out of range");
        }
    }
}

namespace {

std::size_t class_index(Label y) { return y == Label::AGT ? 0 : 1; }

}  // namespace

TrainedModel fit_nb(const std::vector<Instance>& data, const FeatureSchema& schema) {
    schema.validate();
    if (data.empty()) throw TrainError("naive bayes: no training data");
    std::size_t n[2] = {0, 0};
    for (const auto& inst : data) {
        validate_vector(schema, inst.x);
        ++n[class_index(inst.y)];
    }
    if (n[0] == 0 || n[1] == 0)
        throw TrainError(std::string("naive bayes: class ") +
                         (n[0] == 0 ? "AGT" : "HGT") + " absent from training data");

    NbModel nb;
    const double total = static_cast<double>(data.size());
    nb.prior = {static_cast<double>(n[0]) / total, static_cast<double>(n[1]) / total};
    nb.attrs.resize(schema.size());

    for (std::size_t i = 0; i < schema.size(); ++i) {
        const Attribute& a = schema.attributes[i];
        NbAttrParams& p = nb.attrs[i];
        if (a.kind == AttrKind::Numeric) {
            p.mean.assign(2, 0.0);
            p.variance.assign(2, kNbVarianceFloor);
            double sum[2] = {0, 0};
            for (const auto& inst : data) sum[class_index(inst.y)] += inst.x[i];
            for (int c = 0; c < 2; ++c) p.mean[c] = sum[c] / static_cast<double>(n[c]);
            double ss[2] = {0, 0};
            for (const auto& inst : data) {
                std::size_t c = class_index(inst.y);
                double d = inst.x[i] - p.mean[c];
                ss[c] += d * d;
            }
            for (int c = 0; c < 2; ++c) {
                // unbiased estimator; floor covers constant attributes and
                // single-instance classes
                double var = n[c] > 1 ? ss[c] / static_cast<double>(n[c] - 1) : 0.0;
                p.variance[c] = var > kNbVarianceFloor ? var : kNbVarianceFloor;
            }
        } else {
            const std::size_t levels = a.kind == AttrKind::Binary ? 2 : a.levels.size();
            p.level_prob.assign(2, std::vector<double>(levels, 0.0));
            std::vector<std::size_t> counts[2];
            counts[0].assign(levels, 0);
            counts[1].assign(levels, 0);
            for (const auto& inst : data)
                ++counts[class_index(inst.y)][static_cast<std::size_t>(inst.x[i])];
            for (int c = 0; c < 2; ++c)
                for (std::size_t l = 0; l < levels; ++l)
                    p.level_prob[c][l] =
                        (static_cast<double>(counts[c][l]) + kNbAlpha) /
                        (static_cast<double>(n[c]) + kNbAlpha * static_cast<double>(levels));
        }
    }

    TrainedModel model;
    model.kind = LearnerKind::NaiveBayes;
    model.schema = schema;
    model.params = std::move(nb);
    return model;
}

namespace detail {

double nb_log_posterior_unnormalized(const NbModel& nb, const FeatureSchema& schema,
                                     const FeatureVector& x, std::size_t c) {
    double lp = std::log(nb.prior[c]);
    for (std::size_t i = 0; i < schema.size(); ++i) {
        const NbAttrParams& p = nb.attrs[i];
        if (schema.attributes[i].kind == AttrKind::Numeric) {
            double var = p.variance[c];
            double d = x[i] - p.mean[c];
            lp += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
        } else {
            lp += std::log(p.level_prob[c][static_cast<std::size_t>(x[i])]);
        }
    }
    return lp;
}

double nb_predict(const NbModel& nb, const FeatureSchema& schema, const FeatureVector& x) {
    double la = nb_log_posterior_unnormalized(nb, schema, x, 0);
    double lh = nb_log_posterior_unnormalized(nb, schema, x, 1);
    // P(AGT | x) = 1 / (1 + exp(lh - la))
    double d = lh - la;
    if (d > 700.0) return 0.0;
    if (d < -700.0) return 1.0;
    return 1.0 / (1.0 + std::exp(d));
}

}  // namespace detail

}  // namespace agtd
