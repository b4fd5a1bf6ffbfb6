#include "vgibbs/events.hpp"

#include <stdexcept>

namespace vgibbs {

double MassEvent::statistic(const Configuration& cfg, const PartitionSpec& ps) const {
    switch (stat) {
        case Stat::count: {
            long n = 0;
            for (const auto& a : cfg.atoms())
                if (cubes.contains(cube_index(a.x, ps))) ++n;
            return static_cast<double>(n);
        }
        case Stat::tv: return tv_mass(cfg, cubes, ps);
        case Stat::vnorm: return norm(vector_mass(cfg, cubes, ps), ps.dim);
    }
    throw std::logic_error("bad event stat");
}

bool MassEvent::holds(const Configuration& cfg, const PartitionSpec& ps) const {
    double s = statistic(cfg, ps);
    switch (op) {
        case Op::gt: return s > threshold;
        case Op::ge: return s >= threshold;
        case Op::lt: return s < threshold;
        case Op::le: return s <= threshold;
    }
    throw std::logic_error("bad event op");
}

MassEvent::Stat parse_event_stat(const std::string& s) {
    if (s == "count") return MassEvent::Stat::count;
    if (s == "tv") return MassEvent::Stat::tv;
    if (s == "vnorm") return MassEvent::Stat::vnorm;
    throw std::invalid_argument("unknown event statistic: " + s);
}

MassEvent::Op parse_event_op(const std::string& s) {
    if (s == "gt") return MassEvent::Op::gt;
    if (s == "ge") return MassEvent::Op::ge;
    if (s == "lt") return MassEvent::Op::lt;
    if (s == "le") return MassEvent::Op::le;
    throw std::invalid_argument("unknown event op: " + s);
}

std::string to_string(MassEvent::Stat s) {
    switch (s) {
        case MassEvent::Stat::count: return "count";
        case MassEvent::Stat::tv: return "tv";
        case MassEvent::Stat::vnorm: return "vnorm";
    }
    throw std::logic_error("bad event stat");
}

std::string to_string(MassEvent::Op o) {
    switch (o) {
        case MassEvent::Op::gt: return "gt";
        case MassEvent::Op::ge: return "ge";
        case MassEvent::Op::lt: return "lt";
        case MassEvent::Op::le: return "le";
    }
    throw std::logic_error("bad event op");
}

}  // namespace vgibbs
