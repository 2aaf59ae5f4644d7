#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldc/graph.hpp"
#include "ldc/rng.hpp"

namespace ldc {

/// Two-colouring (L, R) of the vertex set. Stored as one side flag per vertex,
/// so L and R are disjoint and cover V by construction.
class PartitionLR {
 public:
  PartitionLR() = default;
  explicit PartitionLR(VertexMask in_left) : in_left_(std::move(in_left)) {}

  std::size_t num_vertices() const noexcept { return in_left_.size(); }
  bool is_left(Vertex v) const noexcept { return in_left_[v] != 0; }
  const VertexMask& left_mask() const noexcept { return in_left_; }

  std::vector<Vertex> left() const;
  std::vector<Vertex> right() const;

  /// True iff every `left_block` vertex is in L and every `right_block`
  /// vertex is in R.
  bool realizes(std::span<const Vertex> left_block, std::span<const Vertex> right_block) const;

  friend bool operator==(const PartitionLR&, const PartitionLR&) = default;

 private:
  VertexMask in_left_;
};

/// Each vertex independently goes to L with probability 1/2.
PartitionLR random_partition(std::size_t n, Rng& rng);

inline constexpr std::size_t kDefaultUniversalTCap = 12;
inline constexpr std::uint64_t kDefaultConstraintBudget = std::uint64_t{1} << 24;

/// A family of functions f: {0..n-1} -> {0,1}, one 0/1 row per member.
struct UniversalSetFamily {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<std::vector<std::uint8_t>> functions;
  /// Set when the builder's coverage bookkeeping confirmed every constraint.
  bool certified = false;

  std::size_t size() const noexcept { return functions.size(); }
};

struct UniversalSetOptions {
  std::size_t t_cap = kDefaultUniversalTCap;
  /// Upper bound on C(n,t) * 2^t constraints tracked during construction.
  std::uint64_t constraint_budget = kDefaultConstraintBudget;
};

/// Greedy set-cover construction of an (n,t)-universal set. Deterministic for
/// fixed (n, t). Throws CapacityError when t > t_cap or the constraint count
/// exceeds the budget, ConfigError unless 1 <= t <= n.
UniversalSetFamily build_universal_set(std::size_t n, std::size_t t,
                                       const UniversalSetOptions& options = {});

/// Process-wide memoized build_universal_set. Thread-safe.
std::shared_ptr<const UniversalSetFamily> cached_universal_set(
    std::size_t n, std::size_t t, const UniversalSetOptions& options = {});

/// An index subset I (0-based, ascending) and the assignment on I that no
/// family member matches.
struct UniversalityViolation {
  std::vector<std::size_t> indices;
  std::vector<std::uint8_t> pattern;
};

struct UniversalityCheck {
  bool universal = false;
  std::optional<UniversalityViolation> violation;
};

/// Brute force over every t-subset and every assignment on it. Reports the
/// lexicographically first violation. Throws BudgetError when
/// C(n,t) * 2^t exceeds `budget`.
UniversalityCheck verify_universal(const UniversalSetFamily& fam,
                                   std::uint64_t budget = kDefaultConstraintBudget);

/// One partition per member, in family order: L_f = {v_i : f(i) = 0}.
std::vector<PartitionLR> partitions_from_family(const UniversalSetFamily& fam, std::size_t n);

/// Partition for the member at `index` without materializing the sequence.
PartitionLR partition_from_member(const UniversalSetFamily& fam, std::size_t index);

/// Text form: '#' comment lines, then one row of '0'/'1' characters per member.
void write_family(std::ostream& out, const UniversalSetFamily& fam);
UniversalSetFamily read_family(std::string_view text, std::size_t t);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace ldc
