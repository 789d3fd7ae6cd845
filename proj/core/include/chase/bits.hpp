#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chase {

/// Smallest w >= 1 with 2^w >= count.
unsigned bits_for(std::uint64_t count) noexcept;

/// Append-only bit string with a read cursor; the unit in which streaming
/// state and protocol messages are measured.
class BitBuffer {
 public:
  void write(std::uint64_t value, unsigned width);
  void write_bit(bool bit) { write(bit ? 1 : 0, 1); }

  std::uint64_t read(unsigned width);
  bool read_bit() { return read(1) != 0; }

  std::size_t size_bits() const noexcept { return size_bits_; }
  void rewind() noexcept { cursor_ = 0; }

  friend bool operator==(const BitBuffer& a, const BitBuffer& b) {
    return a.size_bits_ == b.size_bits_ && a.bytes_ == b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_bits_ = 0;
  std::size_t cursor_ = 0;
};

}  // namespace chase
