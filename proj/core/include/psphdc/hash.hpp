#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>

namespace psphdc {

// FNV-1a 64-bit. Used for input provenance and the basis fingerprint;
// not cryptographic.
class Fnv1a64 {
 public:
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= static_cast<std::uint64_t>(p[i]);
      hash_ *= 0x100000001B3ull;
    }
  }

  void update_double(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    update(&bits, sizeof(bits));
  }

  void update_u64(std::uint64_t v) { update(&v, sizeof(v)); }

  std::uint64_t digest() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xCBF29CE484222325ull;
};

std::uint64_t hash_file(const std::string& path);
std::string hash_to_hex(std::uint64_t h);

}  // namespace psphdc
