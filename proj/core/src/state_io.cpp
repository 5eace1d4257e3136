// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/state_io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>

#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

constexpr char kMagic[4] = {'R', 'T', 'N', 'S'};

template <typename T>
void put_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw InvalidArgument("state stream truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

void put_matrix(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      put_le(out, m(i, j).real());
      put_le(out, m(i, j).imag());
    }
  }
}

Matrix get_matrix(std::istream& in, Eigen::Index n) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = get_le<double>(in);
      const double im = get_le<double>(in);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

void write_state(std::ostream& out, const TNState& state) {
  const LatticeSpec& s = state.spec();
  nlohmann::json header;
  header["format"] = "rtnlab-state";
  header["version"] = kStateFormatVersion;
  header["spec"] = {{"rows", s.rows}, {"cols", s.cols}, {"bond_dim", s.bond_dim}, {"phys_dim", s.phys_dim}};
  header["seed"] = state.seed();
  std::vector<double> theta;
  for (const auto& site : state.sites()) theta.push_back(site.theta);
  header["theta"] = theta;
  const std::string text = header.dump();

  out.write(kMagic, 4);
  put_le<std::uint32_t>(out, kStateFormatVersion);
  put_le<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto& site : state.sites()) {
    put_matrix(out, site.u_minus.matrix());
    put_matrix(out, site.u_plus.matrix());
    put_matrix(out, site.generator);
  }
}

TNState read_state(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw InvalidArgument("not a state file");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kStateFormatVersion) {
    throw InvalidArgument("unsupported state format version " + std::to_string(version));
  }
  const auto length = get_le<std::uint64_t>(in);
  if (length > (1u << 24)) throw InvalidArgument("state header too large");
  std::string text(length, '\0');
  if (!in.read(text.data(), static_cast<std::streamsize>(length))) throw InvalidArgument("state stream truncated");

  LatticeSpec spec;
  std::uint64_t seed = 0;
  std::vector<double> theta;
  try {
    const auto header = nlohmann::json::parse(text);
    const auto& js = header.at("spec");
    spec.rows = js.at("rows").get<std::size_t>();
    spec.cols = js.at("cols").get<std::size_t>();
    spec.bond_dim = js.at("bond_dim").get<std::size_t>();
    spec.phys_dim = js.at("phys_dim").get<std::size_t>();
    seed = header.at("seed").get<std::uint64_t>();
    theta = header.at("theta").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad state header: ") + e.what());
  }
  spec.validate(std::numeric_limits<std::uint64_t>::max());
  if (theta.size() != spec.sites()) throw InvalidArgument("theta count does not match the lattice");

  const auto n = static_cast<Eigen::Index>(spec.unitary_dim());
  std::vector<SiteParameterization> sites(spec.sites());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    sites[k].u_minus = UnitaryMatrix::from_matrix(get_matrix(in, n));
    sites[k].u_plus = UnitaryMatrix::from_matrix(get_matrix(in, n));
    sites[k].generator = get_matrix(in, n);
    sites[k].theta = theta[k];
  }
  return TNState(spec, std::move(sites), seed);
}

void save_state(const std::filesystem::path& path, const TNState& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open " + path.string() + " for writing");
  write_state(out, state);
  if (!out) throw InvalidArgument("write to " + path.string() + " failed");
}

TNState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return read_state(in);
}

}  // namespace rtnlab
