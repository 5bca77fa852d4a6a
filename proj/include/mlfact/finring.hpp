#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfact::ring {

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite commutative ring (a unit is not required) given by addition and
/// multiplication tables; zero is index 0. Ring axioms are checked on
/// construction.
class FiniteCommRing {
 public:
  FiniteCommRing(std::vector<std::vector<std::size_t>> add,
                 std::vector<std::vector<std::size_t>> mul);

  static FiniteCommRing zmod(std::size_t n);
  /// Ring with the given additive group and all products zero.
  static FiniteCommRing zero_multiplication(std::size_t n);
  static FiniteCommRing direct_product(const FiniteCommRing& a,
                                       const FiniteCommRing& b);
  /// The field with four elements.
  static FiniteCommRing gf4();

  std::size_t order() const { return order_; }
  std::size_t add(std::size_t i, std::size_t j) const {
    return add_[i * order_ + j];
  }
  std::size_t mul(std::size_t i, std::size_t j) const {
    return mul_[i * order_ + j];
  }
  std::size_t neg(std::size_t i) const { return neg_[i]; }

  bool same_tables(const FiniteCommRing& o) const;
  bool is_nilpotent_element(std::size_t i) const;

  std::string describe() const;

 private:
  std::size_t order_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> neg_;
};

using RingObjPtr = std::shared_ptr<const FiniteCommRing>;

struct RingHom {
  RingObjPtr domain;
  RingObjPtr codomain;
  std::vector<std::size_t> map;
};

struct Ideal {
  RingObjPtr ambient;
  std::vector<std::size_t> elements;  // sorted
};

/// An ideal (or subring) repackaged as a ring, with its inclusion.
struct SubringObject {
  RingObjPtr ring;
  RingHom inclusion;
  std::vector<std::size_t> elements;
};

struct RingQuotient {
  RingObjPtr quotient;
  RingHom projection;
};

struct RingPullback {
  RingObjPtr object;
  RingHom p1;
  RingHom p2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

bool is_ring_hom(const RingHom& f);
void validate(const RingHom& f);
bool hom_equal(const RingHom& f, const RingHom& g);
RingHom compose(const RingHom& g, const RingHom& f);
RingHom identity_hom(const RingObjPtr& r);
RingHom zero_hom(const RingObjPtr& a, const RingObjPtr& b);
bool is_zero_hom(const RingHom& f);
bool is_injective(const RingHom& f);
bool is_surjective(const RingHom& f);
bool is_iso_hom(const RingHom& f);

bool is_subring(const RingObjPtr& r, const std::vector<std::size_t>& elems);
bool is_ideal(const Ideal& i);
Ideal zero_ideal(const RingObjPtr& r);
Ideal full_ideal(const RingObjPtr& r);
/// Smallest ideal containing the seed elements.
Ideal ideal_generated_by(const RingObjPtr& r,
                         const std::vector<std::size_t>& seed);

Ideal nilradical(const RingObjPtr& r);
bool is_reduced(const RingObjPtr& r);
/// Every element nilpotent (equivalent to nilpotency for finite commutative
/// rings).
bool is_nil(const RingObjPtr& r);

SubringObject subring_object(const RingObjPtr& r,
                             const std::vector<std::size_t>& elems);

RingQuotient quotient_ring(const RingObjPtr& r, const Ideal& i);

Ideal kernel_ideal(const RingHom& f);
std::vector<std::size_t> image_elements(const RingHom& f);
RingQuotient cokernel(const RingHom& f);

RingPullback pullback(const RingHom& f, const RingHom& g);
RingHom into_pullback(const RingPullback& pb, const RingHom& u,
                      const RingHom& v);

/// All ring homomorphisms A -> B by exhaustive search with incremental
/// additive-closure pruning.
std::vector<RingHom> enumerate_ring_homs(const RingObjPtr& a,
                                         const RingObjPtr& b);

std::optional<RingHom> find_isomorphism(const RingObjPtr& a,
                                        const RingObjPtr& b);

/// All ideals of r.
std::vector<Ideal> all_ideals(const RingObjPtr& r);

}  // namespace mlfact::ring
