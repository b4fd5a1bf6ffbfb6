#ifndef VGIBBS_EVENTS_HPP
#define VGIBBS_EVENTS_HPP

#include <string>

#include "vgibbs/configuration.hpp"
#include "vgibbs/geometry.hpp"

namespace vgibbs {

// Threshold event on the mass a configuration places on a fixed cube set.
// Events are evaluated on glued configurations, so the probe region may
// reach outside the resampled volume.
struct MassEvent {
    enum class Stat { count, tv, vnorm };
    enum class Op { gt, ge, lt, le };

    Region cubes;
    Stat stat = Stat::tv;
    Op op = Op::gt;
    double threshold = 0.0;

    double statistic(const Configuration& cfg, const PartitionSpec& ps) const;
    bool holds(const Configuration& cfg, const PartitionSpec& ps) const;
};

MassEvent::Stat parse_event_stat(const std::string& s);
MassEvent::Op parse_event_op(const std::string& s);
std::string to_string(MassEvent::Stat s);
std::string to_string(MassEvent::Op o);

}  // namespace vgibbs

#endif
