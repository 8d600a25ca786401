#include "bvnoise/hidden_string.hpp"

#include <stdexcept>

#include "bvnoise/rng.hpp"

namespace bvnoise {

HiddenString::HiddenString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("hidden string must have at least one bit");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("hidden string bits must be 0 or 1");
  }
}

HiddenString HiddenString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("hidden string must contain only '0' and '1', got '" +
                                  std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return HiddenString(std::move(bits));
}

HiddenString HiddenString::all_ones(std::size_t n) {
  return HiddenString(std::vector<std::uint8_t>(n, 1));
}

HiddenString HiddenString::zeros(std::size_t n) {
  return HiddenString(std::vector<std::uint8_t>(n, 0));
}

HiddenString HiddenString::random(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_u64() >> 63);
  return HiddenString(std::move(bits));
}

HiddenString HiddenString::from_basis_index(std::uint64_t index, std::size_t n) {
  if (n == 0 || n > 63) throw std::invalid_argument("from_basis_index supports 1 <= n <= 63");
  if (index >> n) throw std::invalid_argument("basis index out of range for n qubits");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
  return HiddenString(std::move(bits));
}

std::uint64_t HiddenString::basis_index() const {
  if (bits_.size() > 63) throw std::length_error("basis_index needs n <= 63");
  std::uint64_t index = 0;
  for (auto b : bits_) index = (index << 1) | b;
  return index;
}

std::string HiddenString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

}  // namespace bvnoise
