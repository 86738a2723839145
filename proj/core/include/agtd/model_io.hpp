#pragma once

#include <iosfwd>
#include <string>

#include "agtd/learners.hpp"

namespace agtd {

// Versioned, self-describing model files (JSON). The schema and the seed
// are embedded so train and classify can run as separate invocations.

void save_model(std::ostream& out, const TrainedModel& model);
void save_model_file(const std::string& path, const TrainedModel& model);

TrainedModel load_model(std::istream& in);
TrainedModel load_model_file(const std::string& path);

}  // namespace agtd
