#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace ncpart {

using BigCount = boost::multiprecision::cpp_int;
using BigSigned = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Pascal-triangle memo. Rows are extended lazily; binomials with a lower
/// index outside [0, n] (or negative n) are zero.
class Binomials {
 public:
  const BigCount& operator()(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return zero_;
    extend(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  void extend(std::int64_t n) {
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      std::vector<BigCount> row(rows_.size() + 1);
      row.front() = 1;
      row.back() = 1;
      if (!rows_.empty()) {
        const auto& prev = rows_.back();
        for (std::size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
      }
      rows_.push_back(std::move(row));
    }
  }

  std::vector<std::vector<BigCount>> rows_;
  BigCount zero_ = 0;
};

}  // namespace ncpart
