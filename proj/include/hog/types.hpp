#ifndef HOG_TYPES_HPP
#define HOG_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hog {

using Symbol = unsigned char;
using WordIndex = std::uint32_t;
using NodeId = std::uint32_t;
using Length = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr WordIndex kNoWord = std::numeric_limits<WordIndex>::max();

// Malformed input bytes (lines / FASTA decoding).
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain contract.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hog

#endif  // HOG_TYPES_HPP
