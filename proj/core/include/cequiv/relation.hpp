// Boolean relation algebra over a fixed actor set.
//
// A BooleanRelation is a square 0/1 matrix stored as one bitset per row, so
// composition and the lattice operations run word-wide. Relations are values:
// once built they are only read, and the free functions below return new
// relations.

#ifndef CEQUIV_RELATION_HPP
#define CEQUIV_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cequiv {

/// Raised for any input that violates an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of distinct actor names. Indices are stable for the lifetime
/// of the set.
class ActorSet {
 public:
  explicit ActorSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws InputError naming the unknown label.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const ActorSet& a, const ActorSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ActorSetPtr = std::shared_ptr<const ActorSet>;

ActorSetPtr make_actor_set(std::vector<std::string> labels);

/// True when both pointers refer to the same set or to sets with equal labels.
bool same_actors(const ActorSetPtr& a, const ActorSetPtr& b);

/// Fixed-length bitset; used for role-relation columns and other vectors
/// indexed by strings or actors.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void set(std::size_t i, bool value = true);

  bool any() const noexcept;
  std::size_t count() const noexcept;
  /// Componentwise this <= other.
  bool subset_of(const BitVector& other) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

class BooleanRelation {
 public:
  /// Null relation over `actors`.
  explicit BooleanRelation(ActorSetPtr actors, std::string label = {});

  static BooleanRelation null(ActorSetPtr actors, std::string label = {});
  static BooleanRelation identity(ActorSetPtr actors, std::string label = {});
  static BooleanRelation universal(ActorSetPtr actors, std::string label = {});
  /// Builds from nested 0/1 rows; the shape must be n x n.
  static BooleanRelation from_rows(
      ActorSetPtr actors,
      std::initializer_list<std::initializer_list<int>> rows,
      std::string label = {});
  static BooleanRelation from_rows(ActorSetPtr actors,
                                   const std::vector<std::vector<int>>& rows,
                                   std::string label = {});

  std::size_t size() const noexcept { return n_; }
  const ActorSetPtr& actors() const noexcept { return actors_; }
  const std::string& label() const noexcept { return label_; }
  BooleanRelation with_label(std::string label) const;

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<std::uint64_t> row_words(std::size_t i) {
    return {bits_.data() + i * stride_, stride_};
  }
  std::size_t stride() const noexcept { return stride_; }

  BitVector row(std::size_t i) const;
  BitVector column(std::size_t j) const;
  bool row_empty(std::size_t i) const;

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::size_t hash() const noexcept;

  /// Cellwise equality over the same actor set; labels are ignored.
  friend bool operator==(const BooleanRelation& a, const BooleanRelation& b);

 private:
  ActorSetPtr actors_;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

struct RelationHash {
  std::size_t operator()(const BooleanRelation& r) const noexcept {
    return r.hash();
  }
};

struct AttributeVector {
  ActorSetPtr actors;
  std::vector<bool> values;
  std::string label;

  AttributeVector(ActorSetPtr actor_set, std::vector<bool> vals,
                  std::string name = {});
  std::size_t size() const noexcept { return values.size(); }
};

// Boolean product: result(i,j) = OR_m a(i,m) AND b(m,j).
BooleanRelation compose(const BooleanRelation& a, const BooleanRelation& b);
BooleanRelation unite(const BooleanRelation& a, const BooleanRelation& b);
BooleanRelation intersect(const BooleanRelation& a, const BooleanRelation& b);
BooleanRelation transpose(const BooleanRelation& a);

/// True iff a(i,j) <= b(i,j) for every cell.
bool includes(const BooleanRelation& a, const BooleanRelation& b);

bool is_symmetric(const BooleanRelation& a);

/// Diagonal matrix with a(i,i) = v(i).
BooleanRelation attribute_to_diagonal(const AttributeVector& v);

enum class DiagonalKind { identity, null, mixed, non_diagonal };

/// Whether a relation acts as a neutral element, an annihilator, a
/// structuring attribute (mixed diagonal), or is not diagonal at all.
DiagonalKind classify_diagonal(const BooleanRelation& a);

std::string_view to_string(DiagonalKind kind);

}  // namespace cequiv

#endif  // CEQUIV_RELATION_HPP
