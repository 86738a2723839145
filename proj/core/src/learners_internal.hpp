#pragma once

#include "agtd/learners.hpp"

namespace agtd::detail {

double nb_log_posterior_unnormalized(const NbModel& nb, const FeatureSchema& schema,
                                     const FeatureVector& x, std::size_t c);
double nb_predict(const NbModel& nb, const FeatureSchema& schema, const FeatureVector& x);

double rf_predict(const RfModel& rf, const FeatureSchema& schema, const FeatureVector& x);

}  // namespace agtd::detail
