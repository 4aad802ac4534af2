#pragma once

#include "noet/cert.hpp"
#include "noet/space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace noet {

// Backing representation of a relation. Images are returned sorted and
// duplicate-free. Implementations only ever see arguments already checked to
// belong to the source space.
class RelationImpl {
public:
  virtual ~RelationImpl() = default;
  virtual ValueList image(const Value& a) const = 0;
  virtual bool contains(const Value& a, const Value& b) const;
  virtual bool in_domain(const Value& a) const;
  virtual bool extensional() const { return false; }
};

// A relation from a source space to a target space (the same space for the
// homogeneous relations most operations work on). Either extensional (an
// explicit pair set) or intensional (an image function with finite images).
// Immutable; copies share the representation.
class Relation {
public:
  using ImageFn = std::function<ValueList(const Value&)>;
  using DomainFn = std::function<bool(const Value&)>;
  using PairPredicate = std::function<bool(const Value&, const Value&)>;

  static Relation extensional(const Space& space, std::vector<ValuePair> pairs);
  static Relation extensional(const Space& source, const Space& target, std::vector<ValuePair> pairs);
  // `domain_hint`, when given, must agree with "image is non-empty".
  static Relation from_image(const Space& source, const Space& target, ImageFn image,
                             DomainFn domain_hint = {});
  // Pairs of an enumerable space satisfying `holds`.
  static Relation from_predicate(const Space& space, PairPredicate holds);
  static Relation from_impl(const Space& source, const Space& target,
                            std::shared_ptr<const RelationImpl> impl);
  static Relation identity(const Space& space);
  static Relation empty(const Space& space);

  const Space& space() const { return source_; }
  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  bool homogeneous() const { return source_ == target_; }
  bool is_extensional() const { return impl_->extensional(); }

  // Throws ValueOutsideSpace when `a` is not in the source space.
  ValueList image(const Value& a) const;
  bool contains(const Value& a, const Value& b) const;
  bool in_domain(const Value& a) const;

  // Every pair, sorted canonically. Requires an enumerable source space.
  std::vector<ValuePair> pairs() const;
  std::size_t pair_count() const;
  // Extensional copy (the certificate is kept).
  Relation materialize() const;

  const std::optional<NoetherianCert>& cert() const { return cert_; }
  Relation with_cert(NoetherianCert cert) const;
  Relation without_cert() const;

  // Same spaces and same pair sets.
  friend bool operator==(const Relation& a, const Relation& b);

private:
  Relation(Space source, Space target, std::shared_ptr<const RelationImpl> impl)
      : source_(std::move(source)), target_(std::move(target)), impl_(std::move(impl)) {}

  Space source_;
  Space target_;
  std::shared_ptr<const RelationImpl> impl_;
  std::optional<NoetherianCert> cert_;
};

// r(a): the set of a' with [a, a'] in r.
ValueList image(const Relation& r, const Value& a);

struct DomainRange {
  ValueList domain;
  ValueList range;
};
DomainRange domain_range(const Relation& r);

// Requires an extensional relation (RequiresExtensional otherwise).
Relation inverse(const Relation& r);

// r ; s = { [a, c] | [a, b] in r and [b, c] in s }.
Relation compose(const Relation& r, const Relation& s);

// C : r, the pairs of r whose first element lies in C. C must be a subset of
// the source space.
Relation restrict(const Space& c, const Relation& r);
Relation restrict(const ValueList& c, const Relation& r);

// The relation r ∩ (sub × sub) as a relation on `sub`, which must be a
// subset of r's space. Certificate-free; the catalog adds RESTRICT.
Relation restrict_to(const Relation& r, const Space& sub);

// r^0 = Id, r^(n+1) = r ; r^n.
Relation power(const Relation& r, std::size_t n);

struct Closures {
  Relation plus;
  Relation star;
};
// Union of the positive powers, iterated until a power adds no new pair.
Closures closures(const Relation& r);

struct Classification {
  bool acyclic = false;
  bool irreflexive = false;
  bool transitive = false;
  bool asymmetric = false;
  bool order = false;
  bool function = false;
};
Classification classify(const Relation& r);

bool subset_of(const Relation& r, const Relation& s);

std::string to_string(const Relation& r);  // {[a, a'], ...}

} // namespace noet
