#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "zerosum/parallel.hpp"
#include "zerosum/types.hpp"

namespace zerosum {

/// Neumaier's variant of Kahan summation for one real component.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

/// Block length for deterministic parallel reduction.
inline constexpr std::size_t kSumBlock = std::size_t{1} << 16;

/// Sum of term(i) for i in [begin, end). Blocks of kSumBlock indices are
/// summed independently and then combined in index order, so the result is
/// bitwise independent of the number of workers.
template <class Term>
cplx blocked_sum(std::size_t begin, std::size_t end, Term&& term, unsigned workers = worker_count()) {
  if (end <= begin) return cplx(0.0, 0.0);
  const std::size_t n = end - begin;
  const std::size_t blocks = (n + kSumBlock - 1) / kSumBlock;
  std::vector<cplx> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    CompensatedComplexSum acc;
    const std::size_t lo = begin + b * kSumBlock;
    const std::size_t hi = std::min(end, lo + kSumBlock);
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[b] = acc.value();
  }, workers);
  CompensatedComplexSum total;
  for (const cplx& p : partial) total.add(p);
  return total.value();
}

}  // namespace zerosum
