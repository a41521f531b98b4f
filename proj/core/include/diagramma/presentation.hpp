#pragma once

// Alphabets, words and semigroup presentations <Σ | R>.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace diagramma {

using Letter = std::uint32_t;
using RelationId = std::uint32_t;

/// A word over an alphabet, stored as letter ids. Words appearing in
/// presentations and as diagram frames are always nonempty.
using Word = std::vector<Letter>;

struct Relation {
  RelationId id;
  Word lhs;
  Word rhs;
};

/// Which way a transistor uses its relation: forward reads the relation's
/// left side on top and its right side on the bottom.
enum class Direction : std::uint8_t { forward, backward };

constexpr Direction flip(Direction d) noexcept {
  return d == Direction::forward ? Direction::backward : Direction::forward;
}

class Presentation {
 public:
  /// Builds and validates a presentation. Relation words are given as
  /// sequences of letter names; relation ids follow declaration order.
  static Presentation make(
      std::vector<std::string> names,
      const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
          relations);

  /// Same, for relations already expressed over letter ids.
  static Presentation from_ids(std::vector<std::string> names,
                               std::vector<std::pair<Word, Word>> relations);

  std::size_t letter_count() const noexcept { return names_.size(); }
  std::size_t relation_count() const noexcept { return relations_.size(); }

  const std::string& name(Letter letter) const { return names_.at(letter); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Letter> find_letter(std::string_view name) const;

  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const Relation& relation(RelationId id) const { return relations_.at(id); }

  /// Top and bottom words of a transistor using `id` in direction `d`.
  const Word& top_of(RelationId id, Direction d) const;
  const Word& bottom_of(RelationId id, Direction d) const;

  /// Finds the relation (and direction) turning `top` into `bottom`.
  std::optional<std::pair<RelationId, Direction>> find_relation(const Word& top,
                                                                const Word& bottom) const;

  /// Space separated letter names.
  std::string format_word(const Word& word) const;
  /// Inverse of format_word; throws UnknownLetter or EmptyWord.
  Word parse_word(std::string_view text) const;
  Word word_from_names(const std::vector<std::string>& names) const;

  bool contains(const Word& word) const noexcept;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    if (a.names_ != b.names_ || a.relations_.size() != b.relations_.size()) return false;
    for (std::size_t i = 0; i < a.relations_.size(); ++i) {
      if (a.relations_[i].lhs != b.relations_[i].lhs ||
          a.relations_[i].rhs != b.relations_[i].rhs) {
        return false;
      }
    }
    return true;
  }

 private:
  Presentation() = default;
  void validate();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<Relation> relations_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

inline PresentationPtr share(Presentation p) {
  return std::make_shared<const Presentation>(std::move(p));
}

/// P_n = <x1..xn | xi xj = xj xi, i < j>. One orientation per unordered pair.
Presentation commuting_presentation(std::size_t n);

/// Id of the relation x_i x_j = x_j x_i (1-based, i < j) in commuting_presentation(n).
RelationId commuting_relation_id(std::size_t n, std::size_t i, std::size_t j);

/// P_C = <x1..xn, a_I (I in C) | x_{i1}...x_{ik} = a_I>. Letter x_i has id
/// i-1, letter a_I for the k-th subset has id n+k, and its relation has id k.
/// Subsets are 1-based; they are sorted before use.
Presentation graph_product_presentation(std::size_t n,
                                        const std::vector<std::vector<std::size_t>>& subsets);

/// Q = <Σ ⊔ {a_s, b_s, c_s} | R ⊔ {s=a_s, a_s=b_s, b_s=c_s, c_s=s}>. The base
/// letters and relations keep their ids; see CombinationLayout for the rest.
Presentation combination_presentation(const Presentation& base);

/// Id layout of combination_presentation(base).
struct CombinationLayout {
  std::size_t base_letters;
  std::size_t base_relations;

  Letter a(Letter s) const { return static_cast<Letter>(base_letters + 3 * s); }
  Letter b(Letter s) const { return a(s) + 1; }
  Letter c(Letter s) const { return a(s) + 2; }
  /// step 0: s=a_s, 1: a_s=b_s, 2: b_s=c_s, 3: c_s=s.
  RelationId gadget_relation(Letter s, int step) const {
    return static_cast<RelationId>(base_relations + 4 * s + step);
  }
  bool is_gadget_relation(RelationId id) const { return id >= base_relations; }
  /// Base letter owning a gadget letter or relation.
  Letter owner_of_letter(Letter l) const {
    return l < base_letters ? l : static_cast<Letter>((l - base_letters) / 3);
  }
  Letter owner_of_relation(RelationId id) const {
    return static_cast<Letter>((id - base_relations) / 4);
  }
  int step_of_relation(RelationId id) const {
    return static_cast<int>((id - base_relations) % 4);
  }
};

/// Text format: `letters: a b c` then `rel: u = v` lines (words are space
/// separated letter names). Blank lines and `#` comments are ignored.
Presentation read_presentation(std::istream& in);
Presentation read_presentation_file(const std::string& path);
void write_presentation(std::ostream& out, const Presentation& p);

}  // namespace diagramma
