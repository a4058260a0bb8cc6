#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "lipbound/kernel.hpp"

namespace lipbound {

enum class KernelFormat { json, raw };

/// Reads and validates a kernel.
///   json: {"cout":int,"cin":int,"s":int,"data":[float...]}
///   raw:  16-byte magic "LIPBOUND-KERNEL1", three little-endian u32 dims
///         (cout, cin, s), then cout*cin*s*s little-endian float64 values,
///         row-major.
/// Throws ParseError (naming the offending field), ValidationError,
/// UnsupportedShapeError or IoError.
Kernel4 load_kernel(const std::filesystem::path& path, KernelFormat format);

/// Writes a kernel. Raw round-trips bit-exactly; json round-trips exactly as
/// well (shortest-representation doubles).
void save_kernel(const Kernel4& kernel, const std::filesystem::path& path, KernelFormat format);

/// One benchmark measurement, as emitted by the compare/bench commands.
struct BenchRecord {
  enum class Method { lipbound, power_method, sedghi, frobenius, dense_oracle };
  Method method{};
  double value = 0.0;     // estimate, >= 0
  double wall_time_ms = 0.0;
  std::map<std::string, std::string> params;  // S, iterations, n, seed, ...
};

std::string to_string(BenchRecord::Method m);

}  // namespace lipbound
