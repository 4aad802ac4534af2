#include "noet/relation.hpp"

#include "noet/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace noet {

bool RelationImpl::contains(const Value& a, const Value& b) const {
  return sorted_contains(image(a), b);
}

bool RelationImpl::in_domain(const Value& a) const { return !image(a).empty(); }

namespace {

class ExtensionalImpl final : public RelationImpl {
public:
  explicit ExtensionalImpl(std::map<Value, ValueList> succ) : succ_(std::move(succ)) {}

  ValueList image(const Value& a) const override {
    auto it = succ_.find(a);
    return it == succ_.end() ? ValueList{} : it->second;
  }
  bool contains(const Value& a, const Value& b) const override {
    auto it = succ_.find(a);
    return it != succ_.end() && sorted_contains(it->second, b);
  }
  bool in_domain(const Value& a) const override { return succ_.count(a) != 0; }
  bool extensional() const override { return true; }

private:
  std::map<Value, ValueList> succ_;
};

class ImageImpl final : public RelationImpl {
public:
  ImageImpl(Relation::ImageFn image, Relation::DomainFn domain)
      : image_(std::move(image)), domain_(std::move(domain)) {}

  ValueList image(const Value& a) const override {
    auto out = image_(a);
    normalize(out);
    return out;
  }
  bool in_domain(const Value& a) const override {
    return domain_ ? domain_(a) : !image(a).empty();
  }

private:
  Relation::ImageFn image_;
  Relation::DomainFn domain_;
};

class PredicateImpl final : public RelationImpl {
public:
  PredicateImpl(Space space, Relation::PairPredicate holds)
      : space_(std::move(space)), holds_(std::move(holds)) {}

  ValueList image(const Value& a) const override {
    ValueList out;
    for (const auto& b : space_.values())
      if (holds_(a, b)) out.push_back(b);
    return out;
  }
  bool contains(const Value& a, const Value& b) const override {
    return space_.contains(b) && holds_(a, b);
  }
  bool in_domain(const Value& a) const override {
    return std::any_of(space_.values().begin(), space_.values().end(),
                       [&](const Value& b) { return holds_(a, b); });
  }

private:
  Space space_;
  Relation::PairPredicate holds_;
};

class DomainRestrictImpl final : public RelationImpl {
public:
  DomainRestrictImpl(Space keep, Relation inner) : keep_(std::move(keep)), inner_(std::move(inner)) {}

  ValueList image(const Value& a) const override {
    return keep_.contains(a) ? inner_.image(a) : ValueList{};
  }
  bool contains(const Value& a, const Value& b) const override {
    return keep_.contains(a) && inner_.contains(a, b);
  }
  bool in_domain(const Value& a) const override { return keep_.contains(a) && inner_.in_domain(a); }

private:
  Space keep_;
  Relation inner_;
};

class SubspaceImpl final : public RelationImpl {
public:
  SubspaceImpl(Space sub, Relation inner) : sub_(std::move(sub)), inner_(std::move(inner)) {}

  ValueList image(const Value& a) const override {
    ValueList out;
    for (auto& b : inner_.image(a))
      if (sub_.contains(b)) out.push_back(std::move(b));
    return out;
  }
  bool contains(const Value& a, const Value& b) const override {
    return sub_.contains(b) && inner_.contains(a, b);
  }

private:
  Space sub_;
  Relation inner_;
};

std::map<Value, ValueList> group_pairs(const Space& source, const Space& target,
                                       std::vector<ValuePair> pairs) {
  std::map<Value, ValueList> succ;
  for (auto& [a, b] : pairs) {
    if (!source.contains(a))
      throw Error(ErrorCode::ValueOutsideSpace, "pair member " + to_string(a) + " is outside the space",
                  to_string(a));
    if (!target.contains(b))
      throw Error(ErrorCode::ValueOutsideSpace, "pair member " + to_string(b) + " is outside the space",
                  to_string(b));
    succ[std::move(a)].push_back(std::move(b));
  }
  for (auto& [a, bs] : succ) normalize(bs);
  return succ;
}

// Dense index form of a homogeneous relation over an enumerable space, used
// by the closure machinery.
struct IndexGraph {
  std::vector<std::vector<std::uint32_t>> succ;
};

IndexGraph to_graph(const Relation& r) {
  const auto& vs = r.space().values();
  IndexGraph g;
  g.succ.resize(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& b : r.image(vs[i])) g.succ[i].push_back(static_cast<std::uint32_t>(*r.target().index_of(b)));
  return g;
}

Relation from_graph(const Space& space, const IndexGraph& g) {
  const auto& vs = space.values();
  std::map<Value, ValueList> succ;
  for (std::size_t i = 0; i < g.succ.size(); ++i) {
    if (g.succ[i].empty()) continue;
    auto& row = succ[vs[i]];
    for (auto j : g.succ[i]) row.push_back(vs[j]);
  }
  return Relation::from_impl(space, space, std::make_shared<ExtensionalImpl>(std::move(succ)));
}

IndexGraph compose_graphs(const IndexGraph& r, const IndexGraph& s) {
  const std::size_t n = r.succ.size();
  IndexGraph out;
  out.succ.resize(n);
  std::vector<char> mark(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    auto& row = out.succ[a];
    for (auto b : r.succ[a])
      for (auto c : s.succ[b])
        if (!mark[c]) {
          mark[c] = 1;
          row.push_back(c);
        }
    for (auto c : row) mark[c] = 0;
    std::sort(row.begin(), row.end());
  }
  return out;
}

void require_homogeneous(const Relation& r, const char* op) {
  if (!r.homogeneous())
    throw Error(ErrorCode::SpaceMismatch, std::string(op) + " needs a relation on a single space");
}

} // namespace

Relation Relation::extensional(const Space& space, std::vector<ValuePair> pairs) {
  return extensional(space, space, std::move(pairs));
}

Relation Relation::extensional(const Space& source, const Space& target, std::vector<ValuePair> pairs) {
  auto succ = group_pairs(source, target, std::move(pairs));
  return Relation(source, target, std::make_shared<ExtensionalImpl>(std::move(succ)));
}

Relation Relation::from_image(const Space& source, const Space& target, ImageFn image,
                              DomainFn domain_hint) {
  return Relation(source, target, std::make_shared<ImageImpl>(std::move(image), std::move(domain_hint)));
}

Relation Relation::from_predicate(const Space& space, PairPredicate holds) {
  return Relation(space, space, std::make_shared<PredicateImpl>(space, std::move(holds)));
}

Relation Relation::from_impl(const Space& source, const Space& target,
                             std::shared_ptr<const RelationImpl> impl) {
  return Relation(source, target, std::move(impl));
}

Relation Relation::identity(const Space& space) {
  std::map<Value, ValueList> succ;
  for (const auto& v : space.values()) succ[v] = ValueList{v};
  return Relation(space, space, std::make_shared<ExtensionalImpl>(std::move(succ)));
}

Relation Relation::empty(const Space& space) {
  return Relation(space, space, std::make_shared<ExtensionalImpl>(std::map<Value, ValueList>{}));
}

ValueList Relation::image(const Value& a) const {
  if (!source_.contains(a))
    throw Error(ErrorCode::ValueOutsideSpace, to_string(a) + " is outside the relation's space",
                to_string(a));
  return impl_->image(a);
}

bool Relation::contains(const Value& a, const Value& b) const {
  return source_.contains(a) && target_.contains(b) && impl_->contains(a, b);
}

bool Relation::in_domain(const Value& a) const {
  if (!source_.contains(a))
    throw Error(ErrorCode::ValueOutsideSpace, to_string(a) + " is outside the relation's space",
                to_string(a));
  return impl_->in_domain(a);
}

std::vector<ValuePair> Relation::pairs() const {
  std::vector<ValuePair> out;
  for (const auto& a : source_.values())
    for (auto& b : impl_->image(a)) out.emplace_back(a, std::move(b));
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (const auto& a : source_.values()) n += impl_->image(a).size();
  return n;
}

Relation Relation::materialize() const {
  if (is_extensional()) return *this;
  std::map<Value, ValueList> succ;
  for (const auto& a : source_.values()) {
    auto img = impl_->image(a);
    if (!img.empty()) succ.emplace(a, std::move(img));
  }
  Relation out(source_, target_, std::make_shared<ExtensionalImpl>(std::move(succ)));
  out.cert_ = cert_;
  return out;
}

Relation Relation::with_cert(NoetherianCert cert) const {
  Relation out = *this;
  out.cert_ = std::move(cert);
  return out;
}

Relation Relation::without_cert() const {
  Relation out = *this;
  out.cert_.reset();
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  for (const auto& v : a.source_.values())
    if (a.impl_->image(v) != b.impl_->image(v)) return false;
  return true;
}

ValueList image(const Relation& r, const Value& a) { return r.image(a); }

DomainRange domain_range(const Relation& r) {
  DomainRange out;
  for (const auto& a : r.source().values()) {
    auto img = r.image(a);
    if (img.empty()) continue;
    out.domain.push_back(a);
    out.range.insert(out.range.end(), img.begin(), img.end());
  }
  normalize(out.range);
  return out;
}

Relation inverse(const Relation& r) {
  if (!r.is_extensional())
    throw Error(ErrorCode::RequiresExtensional, "inverse needs an extensional relation; materialize it first");
  std::vector<ValuePair> swapped;
  for (auto& [a, b] : r.pairs()) swapped.emplace_back(std::move(b), std::move(a));
  return Relation::extensional(r.target(), r.source(), std::move(swapped));
}

Relation compose(const Relation& r, const Relation& s) {
  if (!(r.target() == s.source()))
    throw Error(ErrorCode::SpaceMismatch, "compose: target of the first relation differs from source of the second");
  if (r.homogeneous() && s.homogeneous()) return from_graph(r.space(), compose_graphs(to_graph(r), to_graph(s)));
  std::vector<ValuePair> out;
  for (const auto& a : r.source().values()) {
    ValueList row;
    for (const auto& b : r.image(a))
      for (auto& c : s.image(b)) row.push_back(std::move(c));
    normalize(row);
    for (auto& c : row) out.emplace_back(a, std::move(c));
  }
  return Relation::extensional(r.source(), s.target(), std::move(out));
}

Relation restrict(const Space& c, const Relation& r) {
  if (c.enumerable())
    for (const auto& v : c.values())
      if (!r.source().contains(v))
        throw Error(ErrorCode::ValueOutsideSpace, "restriction set member " + to_string(v) + " is outside the space",
                    to_string(v));
  if (r.is_extensional()) {
    std::vector<ValuePair> kept;
    for (auto& p : r.pairs())
      if (c.contains(p.first)) kept.push_back(std::move(p));
    return Relation::extensional(r.source(), r.target(), std::move(kept));
  }
  return Relation::from_impl(r.source(), r.target(), std::make_shared<DomainRestrictImpl>(c, r));
}

Relation restrict(const ValueList& c, const Relation& r) {
  return restrict(Space::explicit_values(c), r);
}

Relation restrict_to(const Relation& r, const Space& sub) {
  require_homogeneous(r, "restrict_to");
  if (sub.enumerable())
    for (const auto& v : sub.values())
      if (!r.space().contains(v))
        throw Error(ErrorCode::ValueOutsideSpace, "subspace member " + to_string(v) + " is outside the space",
                    to_string(v));
  if (r.is_extensional()) {
    std::vector<ValuePair> kept;
    for (auto& p : r.pairs())
      if (sub.contains(p.first) && sub.contains(p.second)) kept.push_back(std::move(p));
    return Relation::extensional(sub, std::move(kept));
  }
  return Relation::from_impl(sub, sub, std::make_shared<SubspaceImpl>(sub, r));
}

Relation power(const Relation& r, std::size_t n) {
  require_homogeneous(r, "power");
  if (n == 0) return Relation::identity(r.space());
  auto base = to_graph(r);
  auto acc = base;
  for (std::size_t i = 1; i < n; ++i) acc = compose_graphs(base, acc);
  return from_graph(r.space(), acc);
}

Closures closures(const Relation& r) {
  require_homogeneous(r, "closures");
  const auto base = to_graph(r);
  const std::size_t n = base.succ.size();

  // plus accumulates the union of r^1 .. r^k; once r^(k+1) adds nothing, no
  // later power can either.
  std::vector<std::vector<char>> in_plus(n, std::vector<char>(n, 0));
  IndexGraph plus = base;
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : base.succ[a]) in_plus[a][b] = 1;
  IndexGraph pw = base;
  for (std::size_t iter = 0; iter <= n; ++iter) {
    pw = compose_graphs(base, pw);
    bool grew = false;
    for (std::size_t a = 0; a < n; ++a)
      for (auto c : pw.succ[a])
        if (!in_plus[a][c]) {
          in_plus[a][c] = 1;
          plus.succ[a].push_back(c);
          grew = true;
        }
    if (!grew) break;
  }
  IndexGraph star = plus;
  for (std::size_t a = 0; a < n; ++a) {
    std::sort(plus.succ[a].begin(), plus.succ[a].end());
    if (!in_plus[a][a]) star.succ[a].push_back(static_cast<std::uint32_t>(a));
    std::sort(star.succ[a].begin(), star.succ[a].end());
  }
  return {from_graph(r.space(), plus), from_graph(r.space(), star)};
}

Classification classify(const Relation& r) {
  require_homogeneous(r, "classify");
  const auto g = to_graph(r);
  const auto plus = to_graph(closures(r).plus);
  const std::size_t n = g.succ.size();
  auto has = [&](const IndexGraph& graph, std::size_t a, std::uint32_t b) {
    return std::binary_search(graph.succ[a].begin(), graph.succ[a].end(), b);
  };

  Classification c;
  c.acyclic = c.irreflexive = c.transitive = c.asymmetric = c.function = true;
  for (std::size_t a = 0; a < n; ++a) {
    const auto ai = static_cast<std::uint32_t>(a);
    if (has(plus, a, ai)) c.acyclic = false;
    if (has(g, a, ai)) c.irreflexive = false;
    if (g.succ[a].size() > 1) c.function = false;
    for (auto b : g.succ[a]) {
      if (b != ai && has(g, b, ai)) c.asymmetric = false;
      if (b == ai) c.asymmetric = false;
      for (auto d : g.succ[b])
        if (!has(g, a, d)) c.transitive = false;
    }
  }
  c.order = c.irreflexive && c.transitive;
  return c;
}

bool subset_of(const Relation& r, const Relation& s) {
  for (const auto& a : r.source().values())
    for (const auto& b : r.image(a))
      if (!s.contains(a, b)) return false;
  return true;
}

std::string to_string(const Relation& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) os << ", ";
    first = false;
    os << '[' << to_string(a) << ", " << to_string(b) << ']';
  }
  os << '}';
  return os.str();
}

} // namespace noet
