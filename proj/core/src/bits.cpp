#include "chase/bits.hpp"

#include "chase/errors.hpp"

namespace chase {

unsigned bits_for(std::uint64_t count) noexcept {
  unsigned width = 1;
  while (width < 64 && (std::uint64_t{1} << width) < count) {
    ++width;
  }
  return width;
}

void BitBuffer::write(std::uint64_t value, unsigned width) {
  for (unsigned i = 0; i < width; ++i) {
    if (size_bits_ % 8 == 0) {
      bytes_.push_back(0);
    }
    if ((value >> i) & 1U) {
      bytes_.back() |= static_cast<std::uint8_t>(1U << (size_bits_ % 8));
    }
    ++size_bits_;
  }
}

std::uint64_t BitBuffer::read(unsigned width) {
  if (cursor_ + width > size_bits_) {
    throw DomainError("BitBuffer::read past end of buffer");
  }
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) {
    const bool bit = (bytes_[cursor_ / 8] >> (cursor_ % 8)) & 1U;
    value |= static_cast<std::uint64_t>(bit) << i;
    ++cursor_;
  }
  return value;
}

}  // namespace chase
