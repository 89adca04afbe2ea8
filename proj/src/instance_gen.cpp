#include "hog/instance_gen.hpp"

#include <array>
#include <numeric>

#include "hog/ehog.hpp"
#include "hog/hog.hpp"

namespace hog {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_)
                   : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

StringSet generate_pz(std::string_view sigma, std::size_t z) {
  if (sigma.size() < 2)
    throw validation_error("generate_pz: alphabet needs at least two symbols");
  if (z == 0) throw validation_error("generate_pz: z must be positive");
  std::array<bool, 256> seen{};
  for (unsigned char c : sigma) {
    if (seen[c])
      throw validation_error(std::string("generate_pz: repeated symbol '") +
                             static_cast<char>(c) + "'");
    seen[c] = true;
  }

  std::string w;
  w.reserve(sigma.size() * z);
  for (std::size_t k = 0; k < z; ++k) w.append(sigma);

  std::vector<std::string> words;
  words.reserve(sigma.size());
  words.push_back(w);
  for (std::size_t k = 1; k < sigma.size(); ++k) {
    w = w.substr(1) + w.front();
    words.push_back(w);
  }
  return StringSet(std::move(words));
}

SizeReport size_report(const StringSet& words) {
  if (words.empty()) throw validation_error("size_report: empty word set");
  HogBuild build = build_hog_detailed(words);
  SizeReport r;
  r.ehog_nodes_total = build.ehog.tree.size();
  r.hog_nodes_total = build.hog.tree.size();
  r.ehog_nodes_noroot = r.ehog_nodes_total - 1;
  r.hog_nodes_noroot = r.hog_nodes_total - 1;
  r.ratio = Rational(r.ehog_nodes_noroot, r.hog_nodes_noroot);
  return r;
}

Rational predicted_pz_ratio(std::size_t word_count, std::size_t z) {
  // z / (1 + 1/n) = z n / (n + 1)
  return Rational(z * word_count, word_count + 1);
}

std::vector<SweepRow> sweep_pz(std::string_view sigma, std::size_t z_max) {
  std::vector<SweepRow> rows;
  for (std::size_t z = 1; z <= z_max; z *= 2) {
    StringSet p = generate_pz(sigma, z);
    SweepRow row;
    row.z = z;
    row.words = p.size();
    row.norm = p.norm();
    row.report = size_report(p);
    row.predicted = predicted_pz_ratio(p.size(), z);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hog
