#pragma once

#include <string_view>

namespace semhash {

struct LabeledUtterance;

// Instrumentation hook for leakage auditing: tests install a monitor and
// every sample flowing into a training-only stage ("augment",
// "vectorizer_fit", "grid_search") is reported to it. With no monitor
// installed the hooks are no-ops. Single-threaded by design, matching the
// serial benchmark loop.
class DataFlowMonitor {
 public:
  virtual ~DataFlowMonitor() = default;
  virtual void observe(std::string_view stage,
                       const LabeledUtterance& sample) = 0;
};

// Not owned; pass nullptr to clear.
void set_dataflow_monitor(DataFlowMonitor* monitor);
void observe_dataflow(std::string_view stage, const LabeledUtterance& sample);

}  // namespace semhash
