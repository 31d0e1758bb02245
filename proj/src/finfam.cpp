#include "coarsedim/finfam.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "coarsedim/error.hpp"

namespace coarsedim {

FinSet::FinSet(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidArgument("FinSet must be nonempty");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() == 0) throw InvalidArgument("FinSet elements must be positive");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw InvalidArgument("FinSet elements must be distinct");
}

bool FinSet::contains(Element a) const { return std::binary_search(elements_.begin(), elements_.end(), a); }

std::string FinSet::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

ExplicitFamily::ExplicitFamily(std::vector<FinSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExplicitFamily::contains(const FinSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::vector<Element> ExplicitFamily::ground() const {
  std::set<Element> all;
  for (const auto& m : members_) all.insert(m.elements().begin(), m.elements().end());
  return {all.begin(), all.end()};
}

std::size_t ExplicitFamily::maxCardinality() const {
  std::size_t best = 0;
  for (const auto& m : members_) best = std::max(best, m.size());
  return best;
}

std::string ExplicitFamily::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += members_[i].toString();
  }
  return out + "}";
}

ExplicitFamily familyUnion(const ExplicitFamily& a, const ExplicitFamily& b) {
  std::vector<FinSet> all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return ExplicitFamily(std::move(all));
}

ExplicitFamily derive(const ExplicitFamily& family, const FinSet& sigma) {
  std::vector<FinSet> out;
  for (const auto& m : family.members()) {
    if (m.size() <= sigma.size()) continue;
    if (!std::includes(m.elements().begin(), m.elements().end(), sigma.elements().begin(), sigma.elements().end()))
      continue;
    std::vector<Element> rest;
    std::set_difference(m.elements().begin(), m.elements().end(), sigma.elements().begin(), sigma.elements().end(),
                        std::back_inserter(rest));
    out.emplace_back(std::move(rest));
  }
  return ExplicitFamily(std::move(out));
}

namespace {

using Mask = std::uint64_t;
using MaskFamily = std::vector<Mask>;  // sorted, unique, no zero entries

// Ord over families encoded as bitmasks on a compressed ground set. The memo
// is keyed by the canonical encoding of each derived family.
class OrdEvaluator {
 public:
  std::uint64_t evaluate(const MaskFamily& family) {
    if (family.empty()) return 0;
    if (auto it = memo_.find(family); it != memo_.end()) return it->second;

    Mask ground = 0;
    for (Mask m : family) ground |= m;
    std::uint64_t best = 0;
    for (Mask rest = ground; rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      MaskFamily derived;
      for (Mask m : family)
        if ((m & bit) && m != bit) derived.push_back(m & ~bit);
      std::sort(derived.begin(), derived.end());
      derived.erase(std::unique(derived.begin(), derived.end()), derived.end());
      best = std::max(best, evaluate(derived));
    }
    // Off the ground set every derivation is empty, so those a contribute Ord {} = 0.
    const std::uint64_t value = 1 + best;
    memo_.emplace(family, value);
    return value;
  }

 private:
  std::map<MaskFamily, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t ord(const ExplicitFamily& family) {
  const std::vector<Element> ground = family.ground();
  if (ground.size() > 64) throw InvalidArgument("ord: ground set larger than 64 elements");
  MaskFamily masks;
  masks.reserve(family.size());
  for (const auto& m : family.members()) {
    Mask mask = 0;
    for (Element e : m.elements()) {
      const auto pos = std::lower_bound(ground.begin(), ground.end(), e) - ground.begin();
      mask |= Mask{1} << pos;
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return OrdEvaluator{}.evaluate(masks);
}

bool isInclusive(const ExplicitFamily& family) {
  // Checking the one-element-smaller subsets suffices: they are members, so
  // their own subsets get checked in turn.
  for (const auto& m : family.members()) {
    if (m.size() == 1) continue;
    for (std::size_t drop = 0; drop < m.size(); ++drop) {
      std::vector<Element> sub;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != drop) sub.push_back(m[i]);
      if (!family.contains(FinSet(std::move(sub)))) return false;
    }
  }
  return true;
}

ExplicitFamily inclusiveClosure(const ExplicitFamily& family) {
  std::set<FinSet> all;
  for (const auto& m : family.members()) {
    if (m.size() > 24) throw InvalidArgument("inclusiveClosure: member too large to expand");
    const Mask full = (Mask{1} << m.size()) - 1;
    for (Mask sub = full; sub != 0; sub = (sub - 1) & full) {
      std::vector<Element> elems;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (sub & (Mask{1} << i)) elems.push_back(m[i]);
      all.emplace(std::move(elems));
    }
  }
  return ExplicitFamily(std::vector<FinSet>(all.begin(), all.end()));
}

ExplicitFamily reindex(const ExplicitFamily& family, std::span<const Element> targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] == 0) throw InvalidArgument("reindex: targets must be positive");
    if (i > 0 && targets[i] <= targets[i - 1]) throw InvalidArgument("reindex: targets must be strictly increasing");
  }
  std::vector<FinSet> out;
  for (const auto& m : family.members()) {
    if (m.max() > targets.size())
      throw InvalidArgument("reindex: target sequence of length " + std::to_string(targets.size()) +
                            " too short for element " + std::to_string(m.max()));
    std::vector<Element> image;
    for (Element e : m.elements()) image.push_back(targets[e - 1]);
    out.emplace_back(std::move(image));
  }
  return ExplicitFamily(std::move(out));
}

ExplicitFamily powerFamily(unsigned n) {
  if (n > 20) throw InvalidArgument("powerFamily: n must be at most 20");
  std::vector<FinSet> out;
  for (Mask sub = 1; sub < (Mask{1} << n); ++sub) {
    std::vector<Element> elems;
    for (unsigned i = 0; i < n; ++i)
      if (sub & (Mask{1} << i)) elems.push_back(i + 1);
    out.emplace_back(std::move(elems));
  }
  return ExplicitFamily(std::move(out));
}

}  // namespace coarsedim
