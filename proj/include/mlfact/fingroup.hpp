#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfact::grp {

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group given by its full multiplication table; identity is index 0.
/// The group axioms are checked on construction.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::string> labels = {});

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b);
  /// Builds the group generated by the given permutations of {0..deg-1}.
  static FiniteGroup from_permutations(
      std::size_t degree, std::vector<std::vector<std::size_t>> gens);

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return table_[i * order_ + j];
  }
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  std::size_t conj(std::size_t g, std::size_t x) const {
    return mul(mul(g, x), inv(g));
  }
  std::size_t element_order(std::size_t i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool same_table(const FiniteGroup& o) const;
  bool is_abelian() const;

  std::string describe() const;

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

using GrpObjPtr = std::shared_ptr<const FiniteGroup>;

struct GroupHom {
  GrpObjPtr domain;
  GrpObjPtr codomain;
  std::vector<std::size_t> map;
};

/// Subgroup as a sorted index set inside an ambient group.
struct Subgroup {
  GrpObjPtr ambient;
  std::vector<std::size_t> elements;
};

/// A subgroup repackaged as a group in its own right, with its inclusion.
struct SubgroupObject {
  GrpObjPtr group;
  GroupHom inclusion;
  std::vector<std::size_t> elements;  // indices in the ambient group
};

struct GrpQuotient {
  GrpObjPtr quotient;
  GroupHom projection;
};

struct GrpPullback {
  GrpObjPtr object;
  GroupHom p1;
  GroupHom p2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // element i = pairs[i]
};

bool is_hom(const GroupHom& f);
void validate(const GroupHom& f);
bool hom_equal(const GroupHom& f, const GroupHom& g);
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom identity_hom(const GrpObjPtr& g);
GroupHom trivial_hom(const GrpObjPtr& a, const GrpObjPtr& b);
bool is_trivial_hom(const GroupHom& f);
bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_iso_hom(const GroupHom& f);

Subgroup subgroup_closure(const GrpObjPtr& g,
                          const std::vector<std::size_t>& seed);
Subgroup normal_closure(const GrpObjPtr& g,
                        const std::vector<std::size_t>& seed);
bool is_subgroup(const Subgroup& h);
bool is_normal(const Subgroup& h);
Subgroup trivial_subgroup(const GrpObjPtr& g);
Subgroup full_subgroup(const GrpObjPtr& g);

SubgroupObject subgroup_object(const Subgroup& h);

GrpQuotient quotient(const GrpObjPtr& g, const Subgroup& n);

Subgroup commutator_subgroup(const Subgroup& h);
/// G ⊇ G' ⊇ G'' ⊇ ..., ending at the perfect radical.
std::vector<Subgroup> derived_series(const GrpObjPtr& g);
bool is_perfect(const GrpObjPtr& g);
bool is_solvable(const GrpObjPtr& g);

Subgroup kernel_subgroup(const GroupHom& f);
Subgroup image_subgroup(const GroupHom& f);
GrpQuotient cokernel(const GroupHom& f);

GrpPullback pullback(const GroupHom& f, const GroupHom& g);
GroupHom into_pullback(const GrpPullback& pb, const GroupHom& u,
                       const GroupHom& v);

/// A small generating set, found greedily.
std::vector<std::size_t> generating_set(const GrpObjPtr& g);

/// All homomorphisms A -> B via generator-image search; `gens` must generate
/// A (defaults to generating_set).
std::vector<GroupHom> enumerate_homs(const GrpObjPtr& a, const GrpObjPtr& b,
                                     std::vector<std::size_t> gens = {});

std::optional<GroupHom> find_isomorphism(const GrpObjPtr& a,
                                         const GrpObjPtr& b);

/// All subgroups (resp. all normal subgroups) of g.
std::vector<Subgroup> all_subgroups(const GrpObjPtr& g);
std::vector<Subgroup> normal_subgroups(const GrpObjPtr& g);

}  // namespace mlfact::grp
