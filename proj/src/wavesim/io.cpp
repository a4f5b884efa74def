#include "romdtb/wavesim/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "romdtb/errors.hpp"

namespace romdtb {

namespace {

template <typename T>
T byteswap_if_big(T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
  }
  return v;
}

template <typename T>
void put(std::ostream& out, T v) {
  v = byteswap_if_big(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in, const char* what) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError(std::string("truncated input while reading ") + what);
  return byteswap_if_big(v);
}

void put_doubles(std::ostream& out, const double* p, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(p), std::streamsize(n * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < n; ++i) put(out, p[i]);
  }
}

void get_doubles(std::istream& in, double* p, std::size_t n, const char* what) {
  in.read(reinterpret_cast<char*>(p), std::streamsize(n * sizeof(double)));
  if (!in) throw IoError(std::string("truncated input while reading ") + what);
  if constexpr (std::endian::native != std::endian::little)
    for (std::size_t i = 0; i < n; ++i) p[i] = byteswap_if_big(p[i]);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  return f;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  return f;
}

}  // namespace

void write_adf1(std::ostream& out, const ArrayDataSet& d) {
  out.write("ADF1", 4);
  put<std::uint32_t>(out, std::uint32_t(d.m()));
  put<std::uint32_t>(out, std::uint32_t(d.count()));
  put<double>(out, d.tau());
  put<std::uint8_t>(out, std::uint8_t(d.physics()));
  for (std::size_t k = 0; k < d.count(); ++k) put_doubles(out, d[k].data(), d[k].size());
  if (!out) throw IoError("failed writing ADF1 data");
}

ArrayDataSet read_adf1(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "ADF1", 4) != 0) throw IoError("not an ADF1 file (bad magic)");
  const auto m = get<std::uint32_t>(in, "m");
  const auto twice_n = get<std::uint32_t>(in, "twice_n");
  const auto tau = get<double>(in, "tau");
  const auto phys = get<std::uint8_t>(in, "physics tag");
  if (phys > 1) throw IoError("unknown physics tag " + std::to_string(int(phys)));
  if (m == 0 || twice_n == 0 || twice_n % 2 != 0) throw IoError("ADF1 header has invalid shape");
  std::vector<Matrix> d(twice_n, Matrix(m, m));
  for (auto& dk : d) get_doubles(in, dk.data(), dk.size(), "ADF1 payload");
  try {
    return ArrayDataSet(tau, Physics(phys), std::move(d));
  } catch (const ValidationError& e) {
    throw IoError(std::string("invalid ADF1 contents: ") + e.what());
  }
}

void write_adf1(const std::filesystem::path& path, const ArrayDataSet& d) {
  auto f = open_out(path);
  write_adf1(f, d);
}

ArrayDataSet read_adf1(const std::filesystem::path& path) {
  auto f = open_in(path);
  try {
    return read_adf1(f);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_medium(std::ostream& out, const Medium& m) {
  const Grid& g = grid_of(m);
  out << "ROMDTB-MEDIUM 1\n";
  out << "physics " << to_string(physics_of(m)) << "\n";
  out << "nx " << g.nx << "\nnz " << g.nz << "\n";
  out << std::setprecision(17) << "hx " << g.hx << "\nhz " << g.hz << "\n";
  if (const auto* a = std::get_if<AcousticMedium>(&m)) {
    out << "sigma_ref " << a->sigma_ref << "\nfields c sigma\nend_header\n";
    put_doubles(out, a->c.data(), a->c.size());
    put_doubles(out, a->sigma.data(), a->sigma.size());
  } else {
    const auto& e = std::get<ElasticMedium>(m);
    out << "sigma_ref " << e.sigma_ref << "\nfields cp cs sigma_p\nend_header\n";
    put_doubles(out, e.cp.data(), e.cp.size());
    put_doubles(out, e.cs.data(), e.cs.size());
    put_doubles(out, e.sigma_p.data(), e.sigma_p.size());
  }
  if (!out) throw IoError("failed writing medium");
}

Medium read_medium(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("ROMDTB-MEDIUM", 0) != 0) throw IoError("not a medium file (bad header)");
  std::map<std::string, std::string> kv;
  std::vector<std::string> fields;
  bool done = false;
  while (std::getline(in, line)) {
    if (line == "end_header") {
      done = true;
      break;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "fields") {
      std::string f;
      while (ls >> f) fields.push_back(f);
    } else {
      std::string value;
      ls >> value;
      kv[key] = value;
    }
  }
  if (!done) throw IoError("medium header is missing end_header");
  auto need = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw IoError("medium header is missing '" + key + "'");
    return it->second;
  };
  Grid g;
  try {
    g.nx = std::stoul(need("nx"));
    g.nz = std::stoul(need("nz"));
    g.hx = std::stod(need("hx"));
    g.hz = std::stod(need("hz"));
  } catch (const std::logic_error&) {
    throw IoError("medium header has a malformed number");
  }
  const double sigma_ref = kv.count("sigma_ref") ? std::stod(kv["sigma_ref"]) : 1.0;
  const Physics phys = physics_from_string(need("physics"));
  std::map<std::string, std::vector<double>> data;
  for (const auto& f : fields) {
    std::vector<double> v(g.size());
    get_doubles(in, v.data(), v.size(), ("field " + f).c_str());
    data[f] = std::move(v);
  }
  auto field = [&](const std::string& name) {
    auto it = data.find(name);
    if (it == data.end()) throw IoError("medium file lacks field '" + name + "'");
    return it->second;
  };
  Medium m;
  if (phys == Physics::kAcoustic) {
    m = AcousticMedium{g, field("c"), field("sigma"), sigma_ref};
  } else {
    m = ElasticMedium{g, field("cp"), field("cs"), field("sigma_p"), sigma_ref};
  }
  validate(m);
  return m;
}

void write_medium(const std::filesystem::path& path, const Medium& m) {
  auto f = open_out(path);
  write_medium(f, m);
}

Medium read_medium(const std::filesystem::path& path) {
  auto f = open_in(path);
  try {
    return read_medium(f);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_gather_csv(std::ostream& out, const ArrayDataSet& d, std::size_t source, const std::vector<double>& scale) {
  if (source >= d.m()) throw ValidationError("source index " + std::to_string(source) + " out of range");
  if (!scale.empty() && scale.size() != d.m()) throw ValidationError("channel scale list has the wrong length");
  out << "k";
  for (std::size_t r = 0; r < d.m(); ++r) out << ",r" << r;
  out << "\n" << std::setprecision(17);
  for (std::size_t k = 0; k < d.count(); ++k) {
    out << k;
    for (std::size_t r = 0; r < d.m(); ++r) out << "," << d[k](r, source) * (scale.empty() ? 1.0 : scale[r]);
    out << "\n";
  }
}

void write_spectrum_csv(std::ostream& out, const std::vector<double>& eigenvalues) {
  out << "index,sigma2\n" << std::setprecision(17);
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) out << j + 1 << "," << eigenvalues[j] << "\n";
}

}  // namespace romdtb
