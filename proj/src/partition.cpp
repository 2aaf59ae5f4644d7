#include "ldc/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "ldc/errors.hpp"

namespace ldc {

std::vector<Vertex> PartitionLR::left() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in_left_.size(); ++v) {
    if (in_left_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> PartitionLR::right() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in_left_.size(); ++v) {
    if (!in_left_[v]) out.push_back(v);
  }
  return out;
}

bool PartitionLR::realizes(std::span<const Vertex> left_block,
                           std::span<const Vertex> right_block) const {
  return std::all_of(left_block.begin(), left_block.end(), [&](Vertex v) { return is_left(v); }) &&
         std::none_of(right_block.begin(), right_block.end(),
                      [&](Vertex v) { return is_left(v); });
}

PartitionLR random_partition(std::size_t n, Rng& rng) {
  VertexMask in_left(n, 0);
  std::uint64_t bits = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v % 64 == 0) bits = rng();
    in_left[v] = static_cast<char>(bits & 1);
    bits >>= 1;
  }
  return PartitionLR(std::move(in_left));
}

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// Advances `idx` (ascending, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t t = idx.size();
  for (std::size_t i = t; i-- > 0;) {
    if (idx[i] < n - t + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t t) {
  std::vector<std::size_t> idx(t);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

// Pattern of f on I read as a t-bit number, I[0] most significant, so numeric
// order equals lexicographic order of the assignment tuples.
template <typename Indices>
std::size_t pattern_of(const std::vector<std::uint8_t>& f, const Indices& idx, std::size_t t) {
  std::size_t p = 0;
  for (std::size_t j = 0; j < t; ++j) p = (p << 1) | f[idx[j]];
  return p;
}

std::uint64_t constraint_count(std::size_t n, std::size_t t) {
  const auto subsets = binomial(n, t);
  if (t >= 63 || subsets > (UINT64_MAX >> t)) return UINT64_MAX;
  return subsets << t;
}

UniversalSetFamily all_functions(std::size_t n, std::size_t t) {
  UniversalSetFamily fam{n, t, {}, true};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::vector<std::uint8_t> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1);
    fam.functions.push_back(std::move(f));
  }
  return fam;
}

// Greedy cover of all (I, f') constraints. Each round seeds candidates from the
// first uncovered constraint (so every round makes progress), fills the other
// coordinates at random and keeps the candidate that covers the most
// uncovered constraints.
UniversalSetFamily greedy_universal_set(std::size_t n, std::size_t t) {
  const std::size_t patterns = std::size_t{1} << t;
  const std::size_t words = std::max<std::size_t>(1, patterns / 64);

  std::vector<std::uint32_t> subsets;  // flattened, t entries per subset
  for (auto idx = first_combination(t);;) {
    subsets.insert(subsets.end(), idx.begin(), idx.end());
    if (!next_combination(idx, n)) break;
  }
  const std::size_t num_subsets = subsets.size() / t;

  std::vector<std::uint64_t> covered(num_subsets * words, 0);
  std::uint64_t uncovered = static_cast<std::uint64_t>(num_subsets) * patterns;
  auto is_covered = [&](std::size_t s, std::size_t p) {
    return (covered[s * words + p / 64] >> (p % 64)) & 1;
  };

  const std::uint64_t work = static_cast<std::uint64_t>(num_subsets) * t;
  const std::size_t candidates_per_round =
      static_cast<std::size_t>(std::clamp<std::uint64_t>((std::uint64_t{1} << 22) / work, 1, 32));

  Rng rng(stream_seed(0x756e6976657273ULL, n, t));
  UniversalSetFamily fam{n, t, {}, false};
  std::size_t cursor = 0;  // first subset that may still have uncovered patterns
  std::vector<std::uint8_t> candidate(n), best(n);

  while (uncovered > 0) {
    std::size_t seed_pattern = patterns;
    for (; cursor < num_subsets; ++cursor) {
      for (std::size_t p = 0; p < patterns; ++p) {
        if (!is_covered(cursor, p)) {
          seed_pattern = p;
          break;
        }
      }
      if (seed_pattern != patterns) break;
    }
    const std::uint32_t* seed_idx = &subsets[cursor * t];

    std::uint64_t best_score = 0;
    for (std::size_t c = 0; c < candidates_per_round; ++c) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = rng();
        candidate[i] = static_cast<std::uint8_t>(bits & 1);
        bits >>= 1;
      }
      for (std::size_t j = 0; j < t; ++j) {
        candidate[seed_idx[j]] = static_cast<std::uint8_t>((seed_pattern >> (t - 1 - j)) & 1);
      }
      std::uint64_t score = 0;
      for (std::size_t s = cursor; s < num_subsets; ++s) {
        if (!is_covered(s, pattern_of(candidate, &subsets[s * t], t))) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = candidate;
      }
    }
    for (std::size_t s = cursor; s < num_subsets; ++s) {
      const std::size_t p = pattern_of(best, &subsets[s * t], t);
      if (!is_covered(s, p)) {
        covered[s * words + p / 64] |= std::uint64_t{1} << (p % 64);
        --uncovered;
      }
    }
    fam.functions.push_back(best);
  }
  fam.certified = true;
  return fam;
}

}  // namespace

UniversalSetFamily build_universal_set(std::size_t n, std::size_t t,
                                       const UniversalSetOptions& options) {
  if (t < 1 || t > n) {
    throw ConfigError("universal set needs 1 <= t <= n, got n = " + std::to_string(n) +
                      ", t = " + std::to_string(t));
  }
  if (t > options.t_cap) {
    throw CapacityError("universal set parameter t = " + std::to_string(t) +
                        " exceeds the configured cap " + std::to_string(options.t_cap));
  }
  if (t == n) return all_functions(n, t);
  if (t == 1) {
    return UniversalSetFamily{
        n, t, {std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 1)}, true};
  }
  if (constraint_count(n, t) > options.constraint_budget) {
    throw CapacityError("universal set (n = " + std::to_string(n) + ", t = " + std::to_string(t) +
                        ") has more than " + std::to_string(options.constraint_budget) +
                        " constraints to cover");
  }
  return greedy_universal_set(n, t);
}

std::shared_ptr<const UniversalSetFamily> cached_universal_set(
    std::size_t n, std::size_t t, const UniversalSetOptions& options) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const UniversalSetFamily>>
      cache;
  // Cap checks run on every call; the result itself does not depend on them.
  if (t > options.t_cap || (t > 1 && t < n && constraint_count(n, t) > options.constraint_budget)) {
    return std::make_shared<const UniversalSetFamily>(build_universal_set(n, t, options));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, t}];
  if (!slot) slot = std::make_shared<const UniversalSetFamily>(build_universal_set(n, t, options));
  return slot;
}

UniversalityCheck verify_universal(const UniversalSetFamily& fam, std::uint64_t budget) {
  const std::size_t n = fam.n, t = fam.t;
  if (t < 1 || t > n) throw ContractError("universal set with invalid (n, t)");
  for (const auto& f : fam.functions) {
    if (f.size() != n) throw ContractError("family member has the wrong length");
  }
  if (constraint_count(n, t) > budget) {
    throw BudgetError("verifying (n = " + std::to_string(n) + ", t = " + std::to_string(t) +
                      ") needs more than " + std::to_string(budget) + " constraint checks");
  }
  const std::size_t patterns = std::size_t{1} << t;
  std::vector<char> seen(patterns);
  for (auto idx = first_combination(t);;) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const auto& f : fam.functions) seen[pattern_of(f, idx, t)] = 1;
    for (std::size_t p = 0; p < patterns; ++p) {
      if (seen[p]) continue;
      UniversalityViolation violation{idx, std::vector<std::uint8_t>(t)};
      for (std::size_t j = 0; j < t; ++j) {
        violation.pattern[j] = static_cast<std::uint8_t>((p >> (t - 1 - j)) & 1);
      }
      return {false, std::move(violation)};
    }
    if (!next_combination(idx, n)) break;
  }
  return {true, std::nullopt};
}

PartitionLR partition_from_member(const UniversalSetFamily& fam, std::size_t index) {
  const auto& f = fam.functions.at(index);
  VertexMask in_left(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) in_left[i] = f[i] == 0;
  return PartitionLR(std::move(in_left));
}

std::vector<PartitionLR> partitions_from_family(const UniversalSetFamily& fam, std::size_t n) {
  if (fam.n != n) {
    throw ContractError("family is over " + std::to_string(fam.n) + " indices but the graph has " +
                        std::to_string(n) + " vertices");
  }
  std::vector<PartitionLR> out;
  out.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) out.push_back(partition_from_member(fam, i));
  return out;
}

void write_family(std::ostream& out, const UniversalSetFamily& fam) {
  out << "# universal set n=" << fam.n << " t=" << fam.t << " size=" << fam.size() << '\n';
  for (const auto& f : fam.functions) {
    for (auto bit : f) out << static_cast<char>('0' + bit);
    out << '\n';
  }
}

UniversalSetFamily read_family(std::string_view text, std::size_t t) {
  UniversalSetFamily fam;
  fam.t = t;
  std::optional<std::size_t> width;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::uint8_t> f;
    f.reserve(line.size());
    for (char c : line) {
      if (c != '0' && c != '1') throw ParseError(lineno, "family rows may only contain 0 and 1");
      f.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (width && *width != f.size()) {
      throw ParseError(lineno, "row has " + std::to_string(f.size()) + " entries, expected " +
                                   std::to_string(*width));
    }
    width = f.size();
    fam.functions.push_back(std::move(f));
  }
  if (!width) throw ParseError(lineno, "family has no rows");
  fam.n = *width;
  return fam;
}

}  // namespace ldc
