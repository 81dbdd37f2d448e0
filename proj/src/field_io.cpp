#include "mnv/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

static_assert(std::endian::native == std::endian::little,
              "field I/O assumes a little-endian host");

namespace mnv {

namespace {
constexpr char kMagic[4] = {'M', 'N', 'V', 'F'};
}

void write_field(const ComplexField& f, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("write_field: cannot open " + tmp);
    os.write(kMagic, 4);
    const std::uint32_t n = static_cast<std::uint32_t>(f.grid.N);
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(&f.grid.L), sizeof(double));
    std::vector<double> row(2 * f.grid.N);
    for (int r = 0; r < f.grid.N; ++r) {
      for (int c = 0; c < f.grid.N; ++c) {
        row[2 * c] = f.v(r, c).real();
        row[2 * c + 1] = f.v(r, c).imag();
      }
      os.write(reinterpret_cast<const char*>(row.data()),
               static_cast<std::streamsize>(row.size() * sizeof(double)));
    }
    if (!os) throw IoError("write_field: write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("write_field: rename to " + path + " failed");
}

ComplexField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("read_field: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("read_field: bad magic in " + path);
  std::uint32_t n = 0;
  double L = 0;
  is.read(reinterpret_cast<char*>(&n), sizeof n);
  is.read(reinterpret_cast<char*>(&L), sizeof L);
  if (!is || n < 2 || n > 1u << 16 || !(L > 0) || !std::isfinite(L))
    throw IoError("read_field: malformed header in " + path);
  Grid g{L, static_cast<int>(n), 2.0 * L / n};
  ComplexField f(g);
  std::vector<double> row(2 * g.N);
  for (int r = 0; r < g.N; ++r) {
    is.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(double)));
    if (!is) throw IoError("read_field: truncated payload in " + path);
    for (int c = 0; c < g.N; ++c) f.v(r, c) = {row[2 * c], row[2 * c + 1]};
  }
  is.peek();
  if (!is.eof()) throw IoError("read_field: trailing bytes in " + path);
  if (!all_finite(f)) throw IoError("read_field: non-finite payload in " + path);
  return f;
}

void write_field_csv(const ComplexField& f, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::FILE* fp = std::fopen(tmp.c_str(), "w");
    if (!fp) throw IoError("write_field_csv: cannot open " + tmp);
    std::fputs("x,y,re,im\n", fp);
    for (int r = 0; r < f.grid.N; ++r)
      for (int c = 0; c < f.grid.N; ++c)
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g\n", f.grid.x_at(c),
                     f.grid.y_at(r), f.v(r, c).real(), f.v(r, c).imag());
    if (std::fclose(fp) != 0) throw IoError("write_field_csv: close failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("write_field_csv: rename to " + path + " failed");
}

}  // namespace mnv
