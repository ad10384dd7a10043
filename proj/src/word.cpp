#include "subwords/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace subwords {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BinaryWord: letter outside {0,1}");
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      bits.push_back(0);
    } else if (c == '1') {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("BinaryWord::parse: expected only '0'/'1', got '" +
                                  std::string(1, c) + "'");
    }
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_mask(int length, std::uint64_t mask) {
  if (length < 0 || length > 63) {
    throw std::invalid_argument("BinaryWord::from_mask: length must be in [0,63]");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    bits[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((mask >> (length - 1 - i)) & 1u);
  }
  return BinaryWord(std::move(bits));
}

int BinaryWord::at(Position i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("BinaryWord::at: position " + std::to_string(i) +
                            " outside [1," + std::to_string(size()) + "]");
  }
  return bits_[static_cast<std::size_t>(i - 1)];
}

BinaryWord BinaryWord::reversed() const {
  std::vector<std::uint8_t> rev(bits_.rbegin(), bits_.rend());
  return BinaryWord(std::move(rev));
}

std::string BinaryWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& other) const {
  if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (auto c = bits_[i] <=> other.bits_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

const Run& RunDecomposition::run(RunId i) const {
  if (i < 1 || i > run_count()) {
    throw std::out_of_range("RunDecomposition::run: index " + std::to_string(i) +
                            " outside [1," + std::to_string(run_count()) + "]");
  }
  return runs_[static_cast<std::size_t>(i - 1)];
}

RunId RunDecomposition::run_index(Position k) const {
  if (k < 1 || k > word_.size()) {
    throw std::out_of_range("RunDecomposition::run_index: position " +
                            std::to_string(k) + " outside word");
  }
  return run_of_[static_cast<std::size_t>(k - 1)];
}

RunDecomposition decompose(const BinaryWord& w) {
  RunDecomposition d;
  d.word_ = w;
  d.run_of_.resize(static_cast<std::size_t>(w.size()));
  for (Position i = 1; i <= w.size(); ++i) {
    if (d.runs_.empty() || d.runs_.back().letter != w.at(i)) {
      d.runs_.push_back(Run{w.at(i), i, i});
    } else {
      d.runs_.back().last = i;
    }
    d.run_of_[static_cast<std::size_t>(i - 1)] =
        static_cast<RunId>(d.runs_.size());
  }
  return d;
}

int same_parity_distance(const BinaryWord& w, Position l1, Position l2) {
  if (l1 > l2) throw std::invalid_argument("same_parity_distance: l1 > l2");
  if (w.at(l1) != w.at(l2)) {
    throw std::invalid_argument("same_parity_distance: letters differ");
  }
  int count = 0;
  for (Position i = l1; i <= l2; ++i) {
    if (w.at(i) == w.at(l1)) ++count;
  }
  return count;
}

std::optional<Position> nth_same_parity_left(const BinaryWord& w, Position j,
                                             int k) {
  if (k < 1) throw std::invalid_argument("nth_same_parity_left: k must be >= 1");
  const int letter = w.at(j);
  int seen = 0;
  for (Position i = j; i >= 1; --i) {
    if (w.at(i) == letter) {
      ++seen;
      if (seen == k) return i;
    }
  }
  return std::nullopt;
}

std::optional<Position> nth_same_parity_right(const BinaryWord& w, Position j,
                                              int k) {
  if (k < 1) throw std::invalid_argument("nth_same_parity_right: k must be >= 1");
  const int letter = w.at(j);
  int seen = 0;
  for (Position i = j; i <= w.size(); ++i) {
    if (w.at(i) == letter) {
      ++seen;
      if (seen == k) return i;
    }
  }
  return std::nullopt;
}

BinaryWord tail(const BinaryWord& w, Position j) {
  if (j < 1 || j > w.size() + 1) {
    throw std::out_of_range("tail: start position outside [1,size+1]");
  }
  std::vector<std::uint8_t> bits(w.bits().begin() + (j - 1), w.bits().end());
  return BinaryWord(std::move(bits));
}

}  // namespace subwords
