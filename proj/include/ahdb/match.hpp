#pragma once

// Window -> position lookup. Every length-n window of a valid sequence is
// unique, so a window identifies its start position directly.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "ahdb/core.hpp"
#include "ahdb/error.hpp"

namespace ahdb {

class DuplicateWindowError : public Error {
 public:
  DuplicateWindowError(std::vector<Code> window, std::size_t first, std::size_t second);

  const std::vector<Code>& window() const noexcept { return window_; }

 private:
  std::vector<Code> window_;
};

class LookupTable {
 public:
  const Parameters& params() const noexcept { return params_; }
  std::size_t source_length() const noexcept { return source_length_; }
  bool cyclic() const noexcept { return cyclic_; }
  std::size_t size() const noexcept;

  /// Start position of `w`, or nullopt.
  std::optional<std::size_t> find(std::span<const Code> w) const;

 private:
  friend LookupTable build_table(const CyclicSequence&, Parameters);
  friend LookupTable build_table(const LinearSequence&, Parameters);

  LookupTable(Parameters params, std::size_t source_length, bool cyclic);
  void insert(std::vector<Code> w, std::size_t position);

  Parameters params_;
  std::size_t source_length_;
  bool cyclic_;
  // Radix-k packed keys when k^n fits in 64 bits, code lists otherwise.
  bool packed_keys_;
  std::unordered_map<std::uint64_t, std::size_t> packed_;
  std::map<std::vector<Code>, std::size_t> general_;
};

/// Table over all q cyclic windows. The sequence should already validate;
/// uniqueness is re-checked and a repeat throws DuplicateWindowError.
LookupTable build_table(const CyclicSequence& s, Parameters params);

/// Table over the L-n+1 linear windows of a truncated sequence. Throws
/// InvalidLength if L < n, DuplicateWindowError on a repeat.
LookupTable build_table(const LinearSequence& s, Parameters params);

/// Start position of `w`. Throws InvalidLength if |w| != n, WindowNotFound
/// if `w` does not occur (including words with out-of-range codes).
std::size_t decode(const LookupTable& table, std::span<const Code> w);

}  // namespace ahdb
