// Finite groups given by multiplication tables.
//
// Elements are indices 0..order-1 and index 0 is always the identity. Group
// values are immutable and share their table, so copies are cheap and safe to
// read concurrently.

#ifndef CIRCORD_GROUP_HPP_
#define CIRCORD_GROUP_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circord/errors.hpp"

namespace circord {

using Element = int;
using Table = std::vector<std::vector<int>>;

class GroupError : public InvalidInput {
 public:
  enum class Kind { InvalidTable, InvalidElement, NotSubgroup, NotNormal, Overflow, InvalidArgument };
  GroupError(Kind kind, const std::string& what) : InvalidInput(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates closure, the Latin-square property, identity and associativity.
  // If the identity is not at index 0 the elements are re-indexed by swapping
  // it with index 0 (names follow their elements). Empty names default to the
  // decimal index.
  static FiniteGroup from_table(std::string name, const Table& table,
                                std::vector<std::string> names = {});

  int order() const { return d_->n; }
  Element identity() const { return 0; }
  Element mul(Element g, Element h) const { return d_->table[static_cast<std::size_t>(g * d_->n + h)]; }
  Element inv(Element g) const { return d_->inverse[static_cast<std::size_t>(g)]; }
  Element pow(Element g, long long t) const;
  // g^-1 h, used constantly by the ordering formulas.
  Element ldiv(Element g, Element h) const { return mul(inv(g), h); }

  bool contains(Element g) const { return g >= 0 && g < d_->n; }
  void check_element(Element g) const;

  const std::string& name() const { return d_->name; }
  const std::string& element_name(Element g) const { return d_->names[static_cast<std::size_t>(g)]; }
  const std::vector<std::string>& element_names() const { return d_->names; }
  Table table() const;
  bool is_abelian() const;

  // Same order and identical tables; names are ignored.
  bool same_table(const FiniteGroup& other) const;

 private:
  struct Data {
    std::string name;
    int n = 1;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<std::string> names;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> map;

  // Throws GroupError if map is not a homomorphism source -> target.
  static GroupHom make(FiniteGroup source, FiniteGroup target, std::vector<Element> map);

  Element operator()(Element g) const { return map[static_cast<std::size_t>(g)]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
  std::vector<Element> kernel() const;
};

struct ProductGroup {
  FiniteGroup group;
  GroupHom first_projection, second_projection;
  GroupHom first_inclusion, second_inclusion;
};

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;
  // representatives[i] is the least element of the i-th coset.
  std::vector<Element> representatives;
};

struct Subgroup {
  FiniteGroup group;
  GroupHom embedding;
};

FiniteGroup cyclic_group(int k);

// (g, h) is indexed as g * |H| + h.
ProductGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

QuotientGroup quotient(const FiniteGroup& g, std::span<const Element> normal_subgroup);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> generators);

// Sorted element set of the subgroup generated by gens.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens);

// Greedy generating set: scan elements in index order, keep each one that is
// not already generated.
std::vector<Element> generating_set(const FiniteGroup& g);

int element_order(const FiniteGroup& g, Element x);
int exponent(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, std::span<const Element> s);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> s);
bool is_central_subset(const FiniteGroup& g, std::span<const Element> s);
std::vector<Element> center(const FiniteGroup& g);

// Enumerates every subgroup as a sorted element set, in order of discovery
// (breadth-first from the trivial subgroup). Intended for small groups.
std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g);

inline constexpr int kDefaultIsomorphismBound = 24;

// Backtracking over generator images, candidates tried in increasing index and
// filtered by element order. Returns the first isomorphism found.
std::optional<GroupHom> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                         int order_bound = kDefaultIsomorphismBound);

}  // namespace circord

#endif  // CIRCORD_GROUP_HPP_
