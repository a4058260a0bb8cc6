#include "lipbound/tensor_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "lipbound/errors.hpp"
#include <json.hpp>

namespace lipbound {

namespace {

constexpr char kMagic[16] = {'L', 'I', 'P', 'B', 'O', 'U', 'N', 'D',
                             '-', 'K', 'E', 'R', 'N', 'E', 'L', '1'};

void put_u32_le(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_f64_le(std::string& out, double d) {
  const auto bits = std::bit_cast<std::uint64_t>(d);
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
}

std::uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

double get_f64_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int b = 7; b >= 0; --b) bits = (bits << 8) | p[b];
  return std::bit_cast<double>(bits);
}

Kernel4 parse_json(const std::string& text, const std::string& where) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": not valid JSON (" + e.what() + ")");
  }
  auto get_dim = [&](const char* field) -> int {
    if (!j.contains(field) || !j[field].is_number_integer())
      throw ParseError(where + ": missing or non-integer field \"" + field + "\"");
    return j[field].get<int>();
  };
  const int cout = get_dim("cout");
  const int cin = get_dim("cin");
  const int s = get_dim("s");
  if (!j.contains("data") || !j["data"].is_array())
    throw ParseError(where + ": missing or non-array field \"data\"");
  std::vector<double> data;
  data.reserve(j["data"].size());
  for (const auto& v : j["data"]) {
    if (!v.is_number()) throw ParseError(where + ": non-numeric entry in \"data\"");
    data.push_back(v.get<double>());
  }
  return Kernel4(cout, cin, s, std::move(data));
}

Kernel4 parse_raw(const std::string& bytes, const std::string& where) {
  if (bytes.size() < 16 + 12) throw ParseError(where + ": truncated header");
  if (std::memcmp(bytes.data(), kMagic, 16) != 0)
    throw ParseError(where + ": bad magic (not a raw kernel file)");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data()) + 16;
  const std::uint32_t cout = get_u32_le(p), cin = get_u32_le(p + 4), s = get_u32_le(p + 8);
  if (cout == 0 || cin == 0 || s == 0 || cout > (1u << 20) || cin > (1u << 20) || s > (1u << 16))
    throw ParseError(where + ": unreasonable dims in header");
  const std::size_t count = static_cast<std::size_t>(cout) * cin * s * s;
  const std::size_t want = 16 + 12 + 8 * count;
  if (bytes.size() != want)
    throw ParseError(where + ": payload length " + std::to_string(bytes.size() - 28) +
                     " bytes does not match dims (expected " + std::to_string(8 * count) + ")");
  std::vector<double> data(count);
  const auto* q = reinterpret_cast<const unsigned char*>(bytes.data()) + 28;
  for (std::size_t i = 0; i < count; ++i) data[i] = get_f64_le(q + 8 * i);
  return Kernel4(static_cast<int>(cout), static_cast<int>(cin), static_cast<int>(s),
                 std::move(data));
}

}  // namespace

Kernel4 load_kernel(const std::filesystem::path& path, KernelFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on " + path.string());
  return format == KernelFormat::json ? parse_json(bytes, path.string())
                                      : parse_raw(bytes, path.string());
}

void save_kernel(const Kernel4& kernel, const std::filesystem::path& path, KernelFormat format) {
  std::string out;
  if (format == KernelFormat::json) {
    nlohmann::json j;
    j["cout"] = kernel.cout;
    j["cin"] = kernel.cin;
    j["s"] = kernel.s;
    j["data"] = kernel.data;
    out = j.dump();
    out.push_back('\n');
  } else {
    out.append(kMagic, 16);
    put_u32_le(out, static_cast<std::uint32_t>(kernel.cout));
    put_u32_le(out, static_cast<std::uint32_t>(kernel.cin));
    put_u32_le(out, static_cast<std::uint32_t>(kernel.s));
    for (double v : kernel.data) put_f64_le(out, v);
  }
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  os.flush();
  if (!os) throw IoError("write failure on " + path.string());
}

std::string to_string(BenchRecord::Method m) {
  switch (m) {
    case BenchRecord::Method::lipbound: return "lipbound";
    case BenchRecord::Method::power_method: return "power_method";
    case BenchRecord::Method::sedghi: return "sedghi";
    case BenchRecord::Method::frobenius: return "frobenius";
    case BenchRecord::Method::dense_oracle: return "dense_oracle";
  }
  return "?";
}

}  // namespace lipbound
