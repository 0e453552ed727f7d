#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "zerosum/zeros.hpp"

namespace zerosum {

namespace {

constexpr std::array<char, 5> kMagic{'Z', 'T', 'B', 'L', '1'};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(fmt::format("read error on '{}'", path.string()));
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw IoError(fmt::format("write error on '{}'", path.string()));
}

template <class T>
void put_le(std::string& buf, T v) {
  auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  buf.append(reinterpret_cast<const char*>(bits.data()), bits.size());
}

template <class T>
T get_le(const char* p) {
  std::array<unsigned char, sizeof(T)> bits;
  std::memcpy(bits.data(), p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  return std::bit_cast<T>(bits);
}

bool has_magic(std::string_view data) {
  return data.size() >= kMagic.size() &&
         std::memcmp(data.data(), kMagic.data(), kMagic.size()) == 0;
}

ZeroTable parse_cache(std::string_view data) {
  if (!has_magic(data)) throw FormatError("zero cache: bad magic");
  constexpr std::size_t header = kMagic.size() + sizeof(std::uint64_t);
  if (data.size() < header) throw FormatError("zero cache: truncated header");
  const auto count = get_le<std::uint64_t>(data.data() + kMagic.size());
  if (count > (data.size() - header) / sizeof(double) ||
      data.size() != header + (count + 1) * sizeof(double))
    throw FormatError(fmt::format("zero cache: size {} does not match count {}", data.size(), count));
  std::vector<double> g(count);
  const char* p = data.data() + header;
  for (auto& v : g) {
    v = get_le<double>(p);
    p += sizeof(double);
  }
  const double max_height = get_le<double>(p);
  if (g.empty()) throw EmptyTableError("zero cache holds no ordinates");
  return ZeroTable(std::move(g), max_height, ZeroTable::Source::imported);
}

}  // namespace

ZeroTable parse_zeros_text(std::string_view text) {
  std::vector<double> g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || end != line.data() + line.size() || !std::isfinite(v))
      throw FormatError(fmt::format("line {}: '{}' is not a number", line_no, line), line_no);
    if (!(v > kMinOrdinate))
      throw FormatError(fmt::format("line {}: ordinate {} is not above {}", line_no, v, kMinOrdinate),
                        line_no);
    if (!g.empty() && !(v > g.back()))
      throw FormatError(fmt::format("line {}: ordinate {} is not ascending (previous {})", line_no,
                                    v, g.back()),
                        line_no);
    g.push_back(v);
  }
  if (g.empty()) throw EmptyTableError("zero file holds no ordinates");
  const double top = g.back();
  return ZeroTable(std::move(g), top, ZeroTable::Source::imported);
}

ZeroTable import_zeros(const std::filesystem::path& path) {
  return parse_zeros_text(read_file(path));
}

void write_zeros_text(const ZeroTable& table, const std::filesystem::path& path) {
  std::string out = fmt::format("# zero ordinates, max_height {:.17g}\n", table.max_height());
  for (double g : table.ordinates()) out += fmt::format("{:.17g}\n", g);
  write_file(path, out);
}

void write_zeros_cache(const ZeroTable& table, const std::filesystem::path& path) {
  std::string buf(kMagic.begin(), kMagic.end());
  put_le<std::uint64_t>(buf, table.size());
  for (double g : table.ordinates()) put_le<double>(buf, g);
  put_le<double>(buf, table.max_height());
  write_file(path, buf);
}

ZeroTable read_zeros_cache(const std::filesystem::path& path) { return parse_cache(read_file(path)); }

ZeroTable load_zeros(const std::filesystem::path& path) {
  const std::string data = read_file(path);
  return has_magic(data) ? parse_cache(data) : parse_zeros_text(data);
}

void save_zeros(const ZeroTable& table, const std::filesystem::path& path) {
  if (path.extension() == ".bin")
    write_zeros_cache(table, path);
  else
    write_zeros_text(table, path);
}

}  // namespace zerosum
