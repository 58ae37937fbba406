#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace spg::util {

inline std::uint32_t fnv1a32(std::string_view data) {
  std::uint32_t hash = 2166136261u;
  for (char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 16777619u;
  }
  return hash;
}

inline std::string fnv1a32Hex(std::string_view data) {
  char buf[9];
  std::snprintf(buf, sizeof(buf), "%08x", fnv1a32(data));
  return buf;
}

}  // namespace spg::util
