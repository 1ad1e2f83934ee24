#include "qsvt/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsvt {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'M', 'X'};
constexpr std::uint32_t kVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& is, const std::string& path) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) fail(path, "truncated snapshot");
  return v;
}

}  // namespace

std::string sidecar_path(const std::string& csv_path) {
  return csv_path + ".json";
}

void save_csv(const SampledMatrix& M, const std::string& csv_path) {
  std::ofstream out(csv_path);
  if (!out) fail(csv_path, "cannot open for writing");
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "i,j,re,im\n";
  for (const auto& t : M.entries())
    out << t.i << ',' << t.j << ',' << t.value.real() << ',' << t.value.imag()
        << '\n';
  if (!out) fail(csv_path, "write failed");

  std::ofstream side(sidecar_path(csv_path));
  if (!side) fail(sidecar_path(csv_path), "cannot open for writing");
  side << nlohmann::json{{"m", M.rows()}, {"n", M.cols()}} << '\n';
}

SampledMatrix load_csv(const std::string& csv_path) {
  std::ifstream side(sidecar_path(csv_path));
  if (!side) fail(sidecar_path(csv_path), "missing dimension sidecar");
  nlohmann::json dims;
  try {
    side >> dims;
  } catch (const nlohmann::json::exception& e) {
    fail(sidecar_path(csv_path), e.what());
  }
  if (!dims.contains("m") || !dims.contains("n"))
    fail(sidecar_path(csv_path), "sidecar must declare \"m\" and \"n\"");
  const auto m = dims["m"].get<std::size_t>();
  const auto n = dims["n"].get<std::size_t>();

  std::ifstream in(csv_path);
  if (!in) fail(csv_path, "cannot open");
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "i,j,re,im")
    fail(csv_path, "expected header \"i,j,re,im\"");

  std::vector<SampledMatrix::Triplet> entries;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    SampledMatrix::Triplet t;
    double re, im;
    char c1, c2, c3;
    if (!(row >> t.i >> c1 >> t.j >> c2 >> re >> c3 >> im) || c1 != ',' ||
        c2 != ',' || c3 != ',')
      fail(csv_path, "malformed row at line " + std::to_string(lineno));
    t.value = Complex{re, im};
    entries.push_back(t);
  }
  return SampledMatrix::build(m, n, entries);
}

void save_snapshot(const SampledMatrix& M, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out.write(kMagic, sizeof kMagic);
  put(out, kVersion);
  put(out, static_cast<std::uint64_t>(M.rows()));
  put(out, static_cast<std::uint64_t>(M.cols()));
  put(out, M.nnz());
  for (const auto& t : M.entries()) {
    put(out, static_cast<std::uint64_t>(t.i));
    put(out, static_cast<std::uint64_t>(t.j));
    put(out, t.value.real());
    put(out, t.value.imag());
  }
  if (!out) fail(path, "write failed");
}

SampledMatrix load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  char magic[4];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    fail(path, "not a matrix snapshot (bad magic)");
  const auto version = get<std::uint32_t>(in, path);
  if (version != kVersion)
    fail(path, "unsupported snapshot version " + std::to_string(version));
  const auto m = get<std::uint64_t>(in, path);
  const auto n = get<std::uint64_t>(in, path);
  const auto nnz = get<std::uint64_t>(in, path);
  std::vector<SampledMatrix::Triplet> entries;
  entries.reserve(nnz);
  for (std::uint64_t k = 0; k < nnz; ++k) {
    SampledMatrix::Triplet t;
    t.i = static_cast<std::size_t>(get<std::uint64_t>(in, path));
    t.j = static_cast<std::size_t>(get<std::uint64_t>(in, path));
    const double re = get<double>(in, path);
    const double im = get<double>(in, path);
    t.value = Complex{re, im};
    entries.push_back(t);
  }
  return SampledMatrix::build(static_cast<std::size_t>(m),
                              static_cast<std::size_t>(n), entries);
}

}  // namespace qsvt
