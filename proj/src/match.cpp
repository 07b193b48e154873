#include "ahdb/match.hpp"

#include <algorithm>

namespace ahdb {

DuplicateWindowError::DuplicateWindowError(std::vector<Code> window, std::size_t first,
                                           std::size_t second)
    : Error(ErrorKind::DuplicateWindow, "window [" + format_numeric(window) +
                                            "] occurs at positions " + std::to_string(first) +
                                            " and " + std::to_string(second)),
      window_(std::move(window)) {}

LookupTable::LookupTable(Parameters params, std::size_t source_length, bool cyclic)
    : params_(params),
      source_length_(source_length),
      cyclic_(cyclic),
      packed_keys_(checked_pow(params.k(), params.n()).has_value()) {}

std::size_t LookupTable::size() const noexcept {
  return packed_keys_ ? packed_.size() : general_.size();
}

void LookupTable::insert(std::vector<Code> w, std::size_t position) {
  if (packed_keys_) {
    auto [it, fresh] = packed_.emplace(*pack_word(w, params_.k()), position);
    if (!fresh) throw DuplicateWindowError(std::move(w), it->second, position);
  } else {
    auto [it, fresh] = general_.emplace(w, position);
    if (!fresh) throw DuplicateWindowError(std::move(w), it->second, position);
  }
}

std::optional<std::size_t> LookupTable::find(std::span<const Code> w) const {
  if (w.size() != params_.n()) return std::nullopt;
  if (std::any_of(w.begin(), w.end(), [this](Code c) { return c >= params_.k(); })) {
    return std::nullopt;
  }
  if (packed_keys_) {
    auto it = packed_.find(*pack_word(w, params_.k()));
    if (it == packed_.end()) return std::nullopt;
    return it->second;
  }
  auto it = general_.find(std::vector<Code>(w.begin(), w.end()));
  if (it == general_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_codes(std::span<const Code> codes, std::uint32_t k) {
  for (Code c : codes) {
    if (c >= k) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "code " + std::to_string(c) + " is not below k=" + std::to_string(k));
    }
  }
}

}  // namespace

LookupTable build_table(const CyclicSequence& s, Parameters params) {
  check_codes(s.codes(), params.k());
  LookupTable table(params, s.size(), true);
  for (std::size_t i = 0; i < s.size(); ++i) table.insert(window(s, i, params.n()), i);
  return table;
}

LookupTable build_table(const LinearSequence& s, Parameters params) {
  check_codes(s.codes(), params.k());
  const std::size_t n = params.n();
  if (s.size() < n) {
    throw Error(ErrorKind::InvalidLength, "linear sequence shorter than the window length");
  }
  LookupTable table(params, s.size(), false);
  const auto codes = s.codes();
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    table.insert(std::vector<Code>(codes.begin() + static_cast<std::ptrdiff_t>(i),
                                   codes.begin() + static_cast<std::ptrdiff_t>(i + n)),
                 i);
  }
  return table;
}

std::size_t decode(const LookupTable& table, std::span<const Code> w) {
  if (w.size() != table.params().n()) {
    throw Error(ErrorKind::InvalidLength, "query window has length " + std::to_string(w.size()) +
                                              ", expected " +
                                              std::to_string(table.params().n()));
  }
  if (auto pos = table.find(w)) return *pos;
  throw Error(ErrorKind::WindowNotFound, "window [" + format_numeric(w) + "] does not occur");
}

}  // namespace ahdb
