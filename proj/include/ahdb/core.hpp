#pragma once

// Foundational value types: codes, parameters, alphabets and cyclic /
// linear sequences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ahdb {

/// A symbol of the code set, always an integer in 0..k-1.
using Code = std::uint32_t;

/// Code-set size k and order n of an adjacency-hopping de Bruijn sequence.
///
/// Any k, n >= 1 is representable. The pair (k = 1, n > 1) is valid as a
/// value but infeasible: no such sequence exists.
class Parameters {
 public:
  Parameters(std::uint32_t k, std::uint32_t n);

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t n() const noexcept { return n_; }

  bool feasible() const noexcept { return !(k_ == 1 && n_ > 1); }

  /// Throws NonexistentSequence when !feasible().
  void require_feasible() const;

  /// k(k-1)^{n-1}: the sequence length, the number of distinct length-n
  /// adjacency-hopping words and the edge count of the corresponding graph.
  /// Zero when infeasible. Throws SizeLimit if it does not fit in 64 bits.
  std::uint64_t sequence_length() const;

  /// k(k-1)^{n-2}: vertex count of the corresponding graph (n >= 2).
  std::uint64_t vertex_count() const;

  friend bool operator==(const Parameters&, const Parameters&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t n_;
};

/// Overflow-checked integer power; nullopt when the result exceeds 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

/// True if no two consecutive codes of `word` are equal (linear reading).
bool is_adjacency_hopping_word(std::span<const Code> word);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

using Label = std::variant<char, Rgb>;

/// Presentation mapping from codes 0..k-1 to distinct display labels.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Label> labels);

  /// Default character labels: "rgb" for k = 3, otherwise a, b, c, ...
  /// followed by A..Z and 0..9. At most 62 labels.
  static Alphabet default_chars(std::uint32_t k);

  /// One label per character of `labels`.
  static Alphabet from_chars(std::string_view labels);

  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(labels_.size());
  }
  const Label& label(Code c) const { return labels_.at(c); }
  bool is_char() const noexcept;
  bool is_rgb() const noexcept;

  /// Character rendering with no separators. Throws CodeOutOfRange.
  std::string encode(std::span<const Code> codes) const;

  /// Inverse of encode. Throws CodeOutOfRange for an unknown character.
  std::vector<Code> decode(std::string_view text) const;

  /// Code whose RGB label is `color`, if any.
  std::optional<Code> code_of(const Rgb& color) const;

 private:
  std::vector<Label> labels_;
};

/// Comma-separated decimal rendering, e.g. "0,2,1".
std::string format_numeric(std::span<const Code> codes);

/// Inverse of format_numeric. Throws ParseError on malformed input.
std::vector<Code> parse_numeric(std::string_view text);

/// Cyclic sequence of codes: index arithmetic wraps modulo the length.
class CyclicSequence {
 public:
  /// Throws InvalidLength if `codes` is empty.
  explicit CyclicSequence(std::vector<Code> codes);

  std::size_t size() const noexcept { return codes_.size(); }
  std::span<const Code> codes() const noexcept { return codes_; }

  /// Cyclic access: i is reduced modulo size().
  Code operator[](std::size_t i) const noexcept {
    return codes_[i % codes_.size()];
  }

  /// The sequence starting at position j (mod size()).
  CyclicSequence rotated(std::size_t j) const;

  /// Exact element-wise equality; see equivalent() for rotation equality.
  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<Code> codes_;
};

/// Non-cyclic sequence, e.g. a truncated pattern. No wraparound windows.
class LinearSequence {
 public:
  explicit LinearSequence(std::vector<Code> codes) : codes_(std::move(codes)) {}

  std::size_t size() const noexcept { return codes_.size(); }
  std::span<const Code> codes() const noexcept { return codes_; }
  Code operator[](std::size_t i) const { return codes_.at(i); }

  friend bool operator==(const LinearSequence&, const LinearSequence&) = default;

 private:
  std::vector<Code> codes_;
};

/// Lexicographically least rotation (Booth-style two-pointer scan, O(q)).
CyclicSequence canonical_rotation(const CyclicSequence& s);

/// True iff `a` is a rotation of `b`.
bool equivalent(const CyclicSequence& a, const CyclicSequence& b);

/// Codes s[i], s[i+1], ..., s[i+n-1], indices modulo q.
std::vector<Code> window(const CyclicSequence& s, std::size_t i, std::size_t n);

/// Radix-k packing sum(w[j] * k^j), or nullopt if k^|w| exceeds 64 bits.
/// Codes must already be < k.
std::optional<std::uint64_t> pack_word(std::span<const Code> word, std::uint32_t k);

}  // namespace ahdb
