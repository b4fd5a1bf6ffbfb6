#include "vgibbs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace vgibbs {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

namespace {

double parse_double_tok(const std::string& tok, const char* what) {
  double v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::runtime_error(std::string("configuration file: bad ") + what + " '" + tok + "'");
  return v;
}

long parse_long_tok(const std::string& tok, const char* what) {
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::runtime_error(std::string("configuration file: bad ") + what + " '" + tok + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

// Next line that is neither blank nor a comment.
bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<std::string> expect_line(std::istream& is, const char* what) {
  std::string line;
  if (!next_line(is, line))
    throw std::runtime_error(std::string("configuration file: truncated, expected ") + what);
  return split_ws(line);
}

}  // namespace

void write_configuration(const Configuration& cfg, const PartitionSpec& ps, std::ostream& os) {
  const int d = cfg.dim();
  os << "dim " << d << "\n";
  os << "window " << cfg.window().size() << "\n";
  for (const auto& k : cfg.window()) {
    for (int i = 0; i < d; ++i) os << (i ? " " : "") << k.k[i];
    os << "\n";
  }
  os << "atoms " << cfg.atoms().size() << "\n";
  for (const auto& a : cfg.atoms()) {
    for (int i = 0; i < d; ++i) os << (i ? " " : "") << format_double(a.x[i]);
    for (int i = 0; i < d; ++i) os << " " << format_double(a.v[i]);
    os << "\n";
  }
  (void)ps;
}

Configuration read_configuration(std::istream& is, const PartitionSpec& ps) {
  auto hdr = expect_line(is, "dim header");
  if (hdr.size() != 2 || hdr[0] != "dim")
    throw std::runtime_error("configuration file: expected 'dim <d>' header");
  const int d = static_cast<int>(parse_long_tok(hdr[1], "dimension"));
  if (d != ps.dim)
    throw std::runtime_error("configuration file: dimension " + std::to_string(d) +
                             " does not match partition dimension " + std::to_string(ps.dim));

  auto win_hdr = expect_line(is, "window header");
  if (win_hdr.size() != 2 || win_hdr[0] != "window")
    throw std::runtime_error("configuration file: expected 'window <count>' header");
  const long n_cubes = parse_long_tok(win_hdr[1], "window count");
  if (n_cubes < 0) throw std::runtime_error("configuration file: negative window count");

  std::vector<CubeIndex> cubes;
  cubes.reserve(static_cast<std::size_t>(n_cubes));
  for (long c = 0; c < n_cubes; ++c) {
    auto toks = expect_line(is, "window cube");
    if (static_cast<int>(toks.size()) != d)
      throw std::runtime_error("configuration file: window cube needs " + std::to_string(d) +
                               " coordinates");
    CubeIndex k{};
    for (int i = 0; i < d; ++i) k.k[i] = static_cast<int>(parse_long_tok(toks[i], "cube index"));
    cubes.push_back(k);
  }

  auto atom_hdr = expect_line(is, "atoms header");
  if (atom_hdr.size() != 2 || atom_hdr[0] != "atoms")
    throw std::runtime_error("configuration file: expected 'atoms <count>' header");
  const long n_atoms = parse_long_tok(atom_hdr[1], "atom count");
  if (n_atoms < 0) throw std::runtime_error("configuration file: negative atom count");

  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n_atoms));
  for (long a = 0; a < n_atoms; ++a) {
    auto toks = expect_line(is, "atom row");
    if (static_cast<int>(toks.size()) != 2 * d)
      throw std::runtime_error("configuration file: atom row needs " + std::to_string(2 * d) +
                               " numbers");
    Atom at{};
    for (int i = 0; i < d; ++i) at.x[i] = parse_double_tok(toks[i], "position");
    for (int i = 0; i < d; ++i) at.v[i] = parse_double_tok(toks[d + i], "mark");
    atoms.push_back(at);
  }

  return Configuration::checked(ps, Region(std::move(cubes)), std::move(atoms));
}

void write_configuration_file(const Configuration& cfg, const PartitionSpec& ps,
                              const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_configuration(cfg, ps, os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

Configuration read_configuration_file(const std::string& path, const PartitionSpec& ps) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_configuration(is, ps);
}

}  // namespace vgibbs
