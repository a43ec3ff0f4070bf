#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phd {

/// Partition nu = 1^{a_1} 2^{a_2} ... n^{a_n} stored by multiplicities.
/// weight = sum m*a_m, length = sum a_m, codim = weight - length.
class Partition {
 public:
  explicit Partition(std::vector<int> mult) : mult_(std::move(mult)) {
    for (std::size_t m = 0; m < mult_.size(); ++m) {
      if (mult_[m] < 0)
        throw std::invalid_argument("Partition: negative multiplicity");
      weight_ += static_cast<int>(m + 1) * mult_[m];
      length_ += mult_[m];
    }
  }

  int weight() const { return weight_; }
  int length() const { return length_; }
  int codim() const { return weight_ - length_; }

  /// Multiplicity of the part m (1-based).
  int mult(int m) const {
    return (m >= 1 && m <= static_cast<int>(mult_.size())) ? mult_[m - 1] : 0;
  }
  const std::vector<int>& multiplicities() const { return mult_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t m = 0; m < mult_.size(); ++m) {
      if (mult_[m] == 0) continue;
      if (!s.empty()) s += " ";
      s += std::to_string(m + 1) + "^" + std::to_string(mult_[m]);
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> mult_;
  int weight_ = 0;
  int length_ = 0;
};

/// All partitions of n, each once, in descending lexicographic order of
/// the multiplicity vector (a_1, ..., a_n). partitions(3) yields
/// 1^3, 1^1 2^1, 3^1.
inline std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> mult(n, 0);
  auto fill = [&](auto&& self, int part, int remaining) -> void {
    if (part > n) {
      if (remaining == 0) out.emplace_back(mult);
      return;
    }
    for (int a = remaining / part; a >= 0; --a) {
      mult[part - 1] = a;
      self(self, part + 1, remaining - part * a);
    }
    mult[part - 1] = 0;
  };
  fill(fill, 1, n);
  return out;
}

}  // namespace phd
