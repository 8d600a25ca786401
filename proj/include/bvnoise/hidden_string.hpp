#ifndef BVNOISE_HIDDEN_STRING_HPP_
#define BVNOISE_HIDDEN_STRING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bvnoise {

/// Secret bit string s = s_1 s_2 ... s_n. Qubit i (1-based) carries bit s_i,
/// and qubit 1 is the most significant bit of a computational-basis index.
class HiddenString {
 public:
  /// Parses a string of '0'/'1' characters, leftmost character is s_1.
  static HiddenString parse(std::string_view text);
  static HiddenString all_ones(std::size_t n);
  static HiddenString zeros(std::size_t n);
  /// Uniformly random string, reproducible from seed.
  static HiddenString random(std::size_t n, std::uint64_t seed);
  /// Inverse of basis_index for n qubits.
  static HiddenString from_basis_index(std::uint64_t index, std::size_t n);

  explicit HiddenString(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  /// Bit of qubit i, 1-based.
  int bit(std::size_t qubit) const { return bits_.at(qubit - 1); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// sum_i s_i * 2^(n - i). Requires n <= 63.
  std::uint64_t basis_index() const;
  std::string to_string() const;

  friend bool operator==(const HiddenString&, const HiddenString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace bvnoise

#endif  // BVNOISE_HIDDEN_STRING_HPP_
