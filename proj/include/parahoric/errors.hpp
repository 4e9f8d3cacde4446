#pragma once

#include <stdexcept>
#include <string>

namespace parahoric {

// Malformed or unsupported root system description ("Q9", rank out of range,
// empty component list, total rank past the 64-bit subset mask).
struct InvalidSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 0-based index outside [0, rank) or outside the root list.
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Full group enumeration refused; `order` carries the exact order when the
// classical formula applies, or a lower bound for ad hoc generating sets.
struct GroupTooLarge : std::runtime_error {
  std::string order;
  std::size_t cap;
  GroupTooLarge(std::string order_text, std::size_t cap_limit)
      : std::runtime_error("group of order " + order_text +
                           " exceeds enumeration cap " + std::to_string(cap_limit)),
        order(std::move(order_text)),
        cap(cap_limit) {}
};

// Subset sweeps are bitmask-based and refuse rank > 24.
struct RankTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Translation conjugation is only defined on the coweight lattice.
struct NonIntegralCoweight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative index of two level vectors requires pointwise containment.
struct NotNested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Presentation data exists only for admissible subsets.
struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace parahoric
