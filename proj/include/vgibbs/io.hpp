#ifndef VGIBBS_IO_HPP
#define VGIBBS_IO_HPP

#include <iosfwd>
#include <string>

#include "vgibbs/configuration.hpp"
#include "vgibbs/geometry.hpp"

namespace vgibbs {

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double x);

// Plain text configuration format:
//   dim <d>
//   window <n_cubes>
//   <d ints per line>
//   atoms <n_atoms>
//   <2d floats per line: position then mark>
void write_configuration(const Configuration& cfg, const PartitionSpec& ps, std::ostream& os);
Configuration read_configuration(std::istream& is, const PartitionSpec& ps);

void write_configuration_file(const Configuration& cfg, const PartitionSpec& ps,
                              const std::string& path);
Configuration read_configuration_file(const std::string& path, const PartitionSpec& ps);

}  // namespace vgibbs

#endif
