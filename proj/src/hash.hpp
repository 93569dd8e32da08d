// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_HASH_HPP
#define AMBTAG_HASH_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace ambtag {

// FNV-1a, used to fingerprint scene files in run manifests.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

}  // namespace ambtag

#endif
