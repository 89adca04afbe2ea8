#ifndef HOG_INSTANCE_GEN_HPP
#define HOG_INSTANCE_GEN_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hog/word_set.hpp"

namespace hog {

// Non-negative fraction kept in lowest terms.
class Rational {
 public:
  Rational(std::uint64_t num = 0, std::uint64_t den = 1);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num_) * b.den_ <
           static_cast<unsigned __int128>(b.num_) * a.den_;
  }

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// w = sigma repeated z times, followed by its successive one-symbol left
// rotations w1 .. w_{|sigma|-1}. Throws validation_error when sigma has fewer
// than two symbols or repeats one, or when z is zero.
StringSet generate_pz(std::string_view sigma, std::size_t z);

struct SizeReport {
  std::size_t ehog_nodes_total = 0;
  std::size_t hog_nodes_total = 0;
  std::size_t ehog_nodes_noroot = 0;
  std::size_t hog_nodes_noroot = 0;
  // ehog_nodes_noroot / hog_nodes_noroot
  Rational ratio;
};

// Throws validation_error on an empty word set.
SizeReport size_report(const StringSet& words);

// Closed form z / (1 + 1/|P|) for the cyclic-shift family.
Rational predicted_pz_ratio(std::size_t word_count, std::size_t z);

struct SweepRow {
  std::size_t z = 0;
  std::size_t words = 0;
  std::size_t norm = 0;
  SizeReport report;
  Rational predicted;
};

// z = 1, 2, 4, ... up to z_max.
std::vector<SweepRow> sweep_pz(std::string_view sigma, std::size_t z_max);

}  // namespace hog

#endif  // HOG_INSTANCE_GEN_HPP
