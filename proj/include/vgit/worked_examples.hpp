#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vgit/flips.hpp"
#include "vgit/quotients.hpp"

namespace vgit {

/// c1 * d_1 + c2 * d_2.
struct LinearForm {
  std::int64_t c1;
  std::int64_t c2;

  std::int64_t at(std::int64_t d1, std::int64_t d2) const { return c1 * d1 + c2 * d2; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& form);

/// Binary cubics plus a linear form under SL_2 x C*, with C* acting by z^{d_1}
/// on S^3 C^2 and z^{d_2} on C^2. Only degree and weight data is recorded.
struct FlipsExData {
  struct Generator {
    std::string name;
    std::int64_t degree;  // total degree in W
    LinearForm bidegree;  // degree in the cubic and linear coordinates
  };
  struct Monomial {
    std::array<std::int64_t, 4> exponents;  // powers of I, J, D, R
  };

  std::array<LinearForm, 2> base_weights;
  std::array<std::int64_t, 2> base_dims;
  std::array<Generator, 4> generators;
  std::vector<Monomial> degree12_monomials;
  std::vector<LinearForm> induced_weights;
  std::vector<LinearForm> attainable_extremes;
};

const FlipsExData& flipsex_data();

/// C*-weight of a degree-12 monomial in I, J, D, R, as a form in (d_1, d_2).
LinearForm monomial_weight(const FlipsExData::Monomial& monomial);

struct NotionCounts {
  std::size_t on_quotient;
  std::size_t on_projective_space;
};

/// Counts on Q = Proj C[I,J,D,R] and on P(W). Requires d1 != d2.
NotionCounts flipsex_notion_counts(std::int64_t d1, std::int64_t d2);

/// The two-block example: weights d1 < d2, both blocks of dimension 2.
struct TwoBlockReport {
  WeightDecomposition decomp;
  std::vector<Chamber> chambers;
  std::vector<std::vector<SupportPattern>> semistable;
  std::vector<QuotientDescriptor> quotients;
  Linearization sample_linearization;  // (k, d) = (2, d1 + d2)
  Bidegree sample_bidegree;
  std::vector<std::pair<Bidegree, BidegreeRealization>> realizations;  // targets (1,1) and (2,3)
};

TwoBlockReport example124_report(std::int64_t d1, std::int64_t d2);

}  // namespace vgit
