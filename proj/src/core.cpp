#include "ahdb/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ahdb/error.hpp"

namespace ahdb {

Parameters::Parameters(std::uint32_t k, std::uint32_t n) : k_(k), n_(n) {
  if (k == 0 || n == 0) {
    std::ostringstream msg;
    msg << "parameters must satisfy k >= 1 and n >= 1 (got k=" << k << ", n=" << n << ")";
    throw Error(ErrorKind::InvalidParameters, msg.str());
  }
}

void Parameters::require_feasible() const {
  if (!feasible()) {
    std::ostringstream msg;
    msg << "no adjacency-hopping de Bruijn sequence exists for k=1, n=" << n_
        << ": a single code cannot differ from its neighbours";
    throw Error(ErrorKind::NonexistentSequence, msg.str());
  }
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

namespace {

std::uint64_t times_power(std::uint64_t k, std::uint32_t exp) {
  auto p = checked_pow(k - 1, exp);
  if (!p || (k != 0 && *p > UINT64_MAX / k)) {
    throw Error(ErrorKind::SizeLimit, "sequence length does not fit in 64 bits");
  }
  return k * *p;
}

}  // namespace

std::uint64_t Parameters::sequence_length() const {
  if (!feasible()) return 0;
  return times_power(k_, n_ - 1);
}

std::uint64_t Parameters::vertex_count() const {
  if (n_ < 2) {
    throw Error(ErrorKind::InfeasibleParameters, "vertex count requires n >= 2");
  }
  return times_power(k_, n_ - 2);
}

bool is_adjacency_hopping_word(std::span<const Code> word) {
  return std::adjacent_find(word.begin(), word.end()) == word.end();
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(ErrorKind::InvalidParameters, "alphabet must have at least one label");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(ErrorKind::InvalidParameters, "alphabet labels must be distinct");
      }
    }
  }
  if (!is_char() && !is_rgb()) {
    throw Error(ErrorKind::InvalidParameters, "alphabet mixes character and color labels");
  }
}

Alphabet Alphabet::default_chars(std::uint32_t k) {
  static constexpr std::string_view kPool =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (k == 3) return from_chars("rgb");
  if (k == 0 || k > kPool.size()) {
    throw Error(ErrorKind::SizeLimit,
                "character alphabets support 1..62 codes; use numeric encoding");
  }
  return from_chars(kPool.substr(0, k));
}

Alphabet Alphabet::from_chars(std::string_view labels) {
  std::vector<Label> out;
  out.reserve(labels.size());
  for (char c : labels) {
    if (c == ',' || c == ' ') {
      throw Error(ErrorKind::InvalidParameters, "',' and ' ' cannot be alphabet labels");
    }
    out.emplace_back(c);
  }
  return Alphabet(std::move(out));
}

bool Alphabet::is_char() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const Label& l) { return std::holds_alternative<char>(l); });
}

bool Alphabet::is_rgb() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const Label& l) { return std::holds_alternative<Rgb>(l); });
}

std::string Alphabet::encode(std::span<const Code> codes) const {
  if (!is_char()) {
    throw Error(ErrorKind::InvalidParameters, "text encoding needs a character alphabet");
  }
  std::string out;
  out.reserve(codes.size());
  for (Code c : codes) {
    if (c >= size()) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "code " + std::to_string(c) + " is outside the alphabet");
    }
    out.push_back(std::get<char>(labels_[c]));
  }
  return out;
}

std::vector<Code> Alphabet::decode(std::string_view text) const {
  if (!is_char()) {
    throw Error(ErrorKind::InvalidParameters, "text decoding needs a character alphabet");
  }
  std::vector<Code> out;
  out.reserve(text.size());
  for (char ch : text) {
    auto it = std::find(labels_.begin(), labels_.end(), Label{ch});
    if (it == labels_.end()) {
      throw Error(ErrorKind::CodeOutOfRange,
                  std::string("character '") + ch + "' is not in the alphabet");
    }
    out.push_back(static_cast<Code>(it - labels_.begin()));
  }
  return out;
}

std::optional<Code> Alphabet::code_of(const Rgb& color) const {
  auto it = std::find(labels_.begin(), labels_.end(), Label{color});
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Code>(it - labels_.begin());
}

std::string format_numeric(std::span<const Code> codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(codes[i]);
  }
  return out;
}

std::vector<Code> parse_numeric(std::string_view text) {
  std::vector<Code> out;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty numeric sequence");
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view field = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    Code value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::ParseError,
                  "malformed numeric code '" + std::string(field) + "'");
    }
    out.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------- sequences

CyclicSequence::CyclicSequence(std::vector<Code> codes) : codes_(std::move(codes)) {
  if (codes_.empty()) {
    throw Error(ErrorKind::InvalidLength, "a cyclic sequence must be non-empty");
  }
}

CyclicSequence CyclicSequence::rotated(std::size_t j) const {
  std::vector<Code> out(codes_.size());
  const std::size_t offset = j % codes_.size();
  std::rotate_copy(codes_.begin(), codes_.begin() + static_cast<std::ptrdiff_t>(offset),
                   codes_.end(), out.begin());
  return CyclicSequence(std::move(out));
}

namespace {

std::size_t least_rotation_start(std::span<const Code> s) {
  const std::size_t q = s.size();
  std::size_t i = 0, j = 1, len = 0;
  while (i < q && j < q && len < q) {
    const Code a = s[(i + len) % q];
    const Code b = s[(j + len) % q];
    if (a == b) {
      ++len;
      continue;
    }
    if (a > b) {
      i += len + 1;
    } else {
      j += len + 1;
    }
    if (i == j) ++j;
    len = 0;
  }
  return std::min(i, j);
}

}  // namespace

CyclicSequence canonical_rotation(const CyclicSequence& s) {
  return s.rotated(least_rotation_start(s.codes()));
}

bool equivalent(const CyclicSequence& a, const CyclicSequence& b) {
  return a.size() == b.size() && canonical_rotation(a) == canonical_rotation(b);
}

std::vector<Code> window(const CyclicSequence& s, std::size_t i, std::size_t n) {
  std::vector<Code> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(s[(i % s.size()) + t]);
  return out;
}

std::optional<std::uint64_t> pack_word(std::span<const Code> word, std::uint32_t k) {
  if (!checked_pow(k, static_cast<std::uint32_t>(word.size()))) return std::nullopt;
  std::uint64_t value = 0;
  for (std::size_t j = word.size(); j-- > 0;) value = value * k + word[j];
  return value;
}

}  // namespace ahdb
