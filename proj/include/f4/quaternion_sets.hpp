#pragma once

#include "f4/quaternion.hpp"

#include <array>
#include <string>
#include <vector>

namespace f4 {

enum class SubsetName { V0, Vplus, Vminus, V1, V2, V3, T, Tprime, O };

std::string to_string(SubsetName name);

/// Sorted, duplicate-free set of unit quaternions.
struct QuaternionSet {
  SubsetName name;
  std::vector<Quat> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Quat& q) const;
};

/// The eight-element blocks and their unions T, T' and O (sizes 8 and 24, 24, 48).
const QuaternionSet& subset(SubsetName name);

/// Builds all nine sets from scratch; throws std::logic_error if a size is wrong.
std::vector<QuaternionSet> build_subsets();

inline constexpr std::array<SubsetName, 6> kBlocks = {SubsetName::V0, SubsetName::Vplus,
                                                      SubsetName::Vminus, SubsetName::V1,
                                                      SubsetName::V2, SubsetName::V3};

using ProductTable = std::array<std::array<SubsetName, 6>, 6>;

/// Entry [i][j] names the block containing every product of kBlocks[i] by kBlocks[j].
/// Throws std::logic_error if some block product is not a single block.
ProductTable subset_product_table();

/// Names the block that contains q, or throws std::invalid_argument.
SubsetName block_of(const Quat& q);

}  // namespace f4
