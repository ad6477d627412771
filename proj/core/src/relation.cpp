#include "cequiv/relation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <utility>

namespace cequiv {
namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::size_t hash_words(std::span<const std::uint64_t> words,
                       std::size_t seed) noexcept {
  std::size_t h = seed;
  for (auto w : words) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

void require_same(const BooleanRelation& a, const BooleanRelation& b,
                  const char* op) {
  if (!same_actors(a.actors(), b.actors())) {
    std::ostringstream msg;
    msg << op << ": relations are defined over different actor sets ("
        << a.size() << " and " << b.size() << " actors)";
    throw InputError(msg.str());
  }
}

}  // namespace

ActorSet::ActorSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("actor set must not be empty");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate actor label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> ActorSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ActorSet::index_of(std::string_view label) const {
  if (auto idx = find(label)) return *idx;
  throw InputError("unknown actor '" + std::string(label) + "'");
}

ActorSetPtr make_actor_set(std::vector<std::string> labels) {
  return std::make_shared<const ActorSet>(std::move(labels));
}

bool same_actors(const ActorSetPtr& a, const ActorSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---- BitVector --------------------------------------------------------------

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::subset_of(const BitVector& other) const {
  if (size_ != other.size_) throw InputError("bit vectors differ in length");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::size_t BitVector::hash() const noexcept { return hash_words(words_, size_); }

// ---- BooleanRelation --------------------------------------------------------

BooleanRelation::BooleanRelation(ActorSetPtr actors, std::string label)
    : actors_(std::move(actors)), label_(std::move(label)) {
  if (!actors_) throw InputError("relation requires an actor set");
  n_ = actors_->size();
  stride_ = words_for(n_);
  bits_.assign(n_ * stride_, 0);
}

BooleanRelation BooleanRelation::null(ActorSetPtr actors, std::string label) {
  return BooleanRelation(std::move(actors), std::move(label));
}

BooleanRelation BooleanRelation::identity(ActorSetPtr actors, std::string label) {
  BooleanRelation r(std::move(actors), std::move(label));
  for (std::size_t i = 0; i < r.n_; ++i) r.set(i, i);
  return r;
}

BooleanRelation BooleanRelation::universal(ActorSetPtr actors, std::string label) {
  BooleanRelation r(std::move(actors), std::move(label));
  for (std::size_t i = 0; i < r.n_; ++i) {
    for (std::size_t j = 0; j < r.n_; ++j) r.set(i, j);
  }
  return r;
}

BooleanRelation BooleanRelation::from_rows(
    ActorSetPtr actors, std::initializer_list<std::initializer_list<int>> rows,
    std::string label) {
  std::vector<std::vector<int>> copy;
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(std::move(actors), copy, std::move(label));
}

BooleanRelation BooleanRelation::from_rows(
    ActorSetPtr actors, const std::vector<std::vector<int>>& rows,
    std::string label) {
  BooleanRelation r(std::move(actors), std::move(label));
  if (rows.size() != r.n_) {
    throw InputError("matrix has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(r.n_));
  }
  for (std::size_t i = 0; i < r.n_; ++i) {
    if (rows[i].size() != r.n_) {
      throw InputError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " cells, expected " +
                       std::to_string(r.n_));
    }
    for (std::size_t j = 0; j < r.n_; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw InputError("matrix cells must be 0 or 1");
      if (v) r.set(i, j);
    }
  }
  return r;
}

BooleanRelation BooleanRelation::with_label(std::string label) const {
  BooleanRelation copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

void BooleanRelation::set(std::size_t i, std::size_t j, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  auto& word = bits_[i * stride_ + j / 64];
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

BitVector BooleanRelation::row(std::size_t i) const {
  BitVector v(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (get(i, j)) v.set(j);
  }
  return v;
}

BitVector BooleanRelation::column(std::size_t j) const {
  BitVector v(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i, j)) v.set(i);
  }
  return v;
}

bool BooleanRelation::row_empty(std::size_t i) const {
  auto words = row_words(i);
  return std::all_of(words.begin(), words.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t BooleanRelation::count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BooleanRelation::hash() const noexcept { return hash_words(bits_, n_); }

bool operator==(const BooleanRelation& a, const BooleanRelation& b) {
  return a.n_ == b.n_ && a.bits_ == b.bits_ && same_actors(a.actors_, b.actors_);
}

AttributeVector::AttributeVector(ActorSetPtr actor_set, std::vector<bool> vals,
                                 std::string name)
    : actors(std::move(actor_set)), values(std::move(vals)), label(std::move(name)) {
  if (!actors) throw InputError("attribute vector requires an actor set");
  if (values.size() != actors->size()) {
    throw InputError("attribute '" + label + "' has " +
                     std::to_string(values.size()) + " values, expected " +
                     std::to_string(actors->size()));
  }
}

// ---- operations -------------------------------------------------------------

BooleanRelation compose(const BooleanRelation& a, const BooleanRelation& b) {
  require_same(a, b, "compose");
  BooleanRelation out(a.actors());
  const std::size_t stride = a.stride();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto dst = out.row_words(i);
    auto src = a.row_words(i);
    for (std::size_t w = 0; w < stride; ++w) {
      std::uint64_t bits = src[w];
      while (bits) {
        const std::size_t m = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto brow = b.row_words(m);
        for (std::size_t k = 0; k < stride; ++k) dst[k] |= brow[k];
      }
    }
  }
  return out;
}

BooleanRelation unite(const BooleanRelation& a, const BooleanRelation& b) {
  require_same(a, b, "union");
  BooleanRelation out = a.with_label({});
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto dst = out.row_words(i);
    auto src = b.row_words(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
  }
  return out;
}

BooleanRelation intersect(const BooleanRelation& a, const BooleanRelation& b) {
  require_same(a, b, "intersect");
  BooleanRelation out = a.with_label({});
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto dst = out.row_words(i);
    auto src = b.row_words(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= src[w];
  }
  return out;
}

BooleanRelation transpose(const BooleanRelation& a) {
  BooleanRelation out(a.actors());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.get(i, j)) out.set(j, i);
    }
  }
  return out;
}

bool includes(const BooleanRelation& a, const BooleanRelation& b) {
  require_same(a, b, "includes");
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a.row_words(i);
    auto y = b.row_words(i);
    for (std::size_t w = 0; w < x.size(); ++w) {
      if (x[w] & ~y[w]) return false;
    }
  }
  return true;
}

bool is_symmetric(const BooleanRelation& a) { return a == transpose(a); }

BooleanRelation attribute_to_diagonal(const AttributeVector& v) {
  BooleanRelation out(v.actors, v.label);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.values[i]) out.set(i, i);
  }
  return out;
}

DiagonalKind classify_diagonal(const BooleanRelation& a) {
  std::size_t on_diagonal = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a.get(i, j)) continue;
      if (i != j) return DiagonalKind::non_diagonal;
      ++on_diagonal;
    }
  }
  if (on_diagonal == 0) return DiagonalKind::null;
  if (on_diagonal == a.size()) return DiagonalKind::identity;
  return DiagonalKind::mixed;
}

std::string_view to_string(DiagonalKind kind) {
  switch (kind) {
    case DiagonalKind::identity: return "identity";
    case DiagonalKind::null: return "null";
    case DiagonalKind::mixed: return "mixed";
    case DiagonalKind::non_diagonal: return "non-diagonal";
  }
  return "unknown";
}

}  // namespace cequiv
