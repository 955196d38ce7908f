#include "semhash/dataflow.hpp"

namespace semhash {

namespace {
DataFlowMonitor* g_monitor = nullptr;
}

void set_dataflow_monitor(DataFlowMonitor* monitor) { g_monitor = monitor; }

void observe_dataflow(std::string_view stage, const LabeledUtterance& sample) {
  if (g_monitor) g_monitor->observe(stage, sample);
}

}  // namespace semhash
