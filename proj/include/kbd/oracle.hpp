#ifndef KBD_ORACLE_HPP
#define KBD_ORACLE_HPP

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <variant>
#include <vector>

#include "core.hpp"

/** \file
 * Brute-force ground truth: breadth-first exploration of the configurations
 * reachable with transient keys, under a cap on intermediate sizes.
 */
namespace kbd {

/// Orders words by length, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const
  {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLex>;

struct LanguageSample {
  WordSet words;
  std::map<Word, std::vector<Key>, ShortLex> witnesses; ///< one accepting execution per word
  std::size_t max_len = 0;
  std::size_t size_cap = 0;
  bool complete = false;
};

/// Default intermediate-size cap for a given word-length bound.
inline std::size_t default_cap(const Keyboard& k, std::size_t max_len) { return max_len + 2 * k.norm_inf(); }

namespace oracle_detail {

struct Node {
  Configuration config;
  std::size_t parent;
  std::size_t key; // index into transient(); meaningless for the root
};

/// BFS over transient keys; nodes are in discovery order, root first.
class Explorer {
public:
  Explorer(const Keyboard& k, std::size_t cap) : k_(k), cap_(cap)
  {
    nodes_.push_back({Configuration{}, 0, 0});
    index_.emplace(nodes_[0].config, 0);
  }

  /// Expands the next node; false when the frontier is exhausted.
  bool expand_next()
  {
    if (next_ >= nodes_.size())
      return false;
    const std::size_t id = next_++;
    for (std::size_t i = 0; i < k_.transient().size(); ++i) {
      Configuration c = kbd::apply(nodes_[id].config, k_.transient()[i]);
      if (c.size() > cap_)
        continue;
      if (index_.contains(c))
        continue;
      index_.emplace(c, nodes_.size());
      nodes_.push_back({std::move(c), id, i});
    }
    return true;
  }

  void expand_all()
  {
    while (expand_next()) {
    }
  }

  std::size_t processed() const { return next_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::vector<Key> path_to(std::size_t id) const
  {
    std::vector<Key> keys;
    while (id != 0) {
      keys.push_back(k_.transient()[nodes_[id].key]);
      id = nodes_[id].parent;
    }
    return {keys.rbegin(), keys.rend()};
  }

private:
  const Keyboard& k_;
  std::size_t cap_;
  std::vector<Node> nodes_;
  std::unordered_map<Configuration, std::size_t> index_;
  std::size_t next_ = 0;
};

} // namespace oracle_detail

/// Least fixpoint of the transient keys from ⟨ε|ε⟩, dropping configurations larger than `size_cap`.
inline std::set<Configuration> reachable_configs(const Keyboard& k, std::size_t size_cap)
{
  oracle_detail::Explorer ex(k, size_cap);
  ex.expand_all();
  std::set<Configuration> out;
  for (const auto& n : ex.nodes())
    out.insert(n.config);
  return out;
}

/**
 * Words of length ≤ max_len produced by one final key applied to a reachable
 * configuration. `certified` marks a caller-supplied cap known to be
 * sufficient; otherwise completeness is claimed only for backspace-free
 * keyboards, whose configuration sizes never decrease.
 */
inline LanguageSample enumerate(const Keyboard& k, std::size_t max_len, std::size_t size_cap,
                                bool certified = false)
{
  if (size_cap < max_len)
    throw KeyboardError("size cap must be at least the maximal word length");
  oracle_detail::Explorer ex(k, size_cap);
  ex.expand_all();

  LanguageSample s;
  s.max_len = max_len;
  s.size_cap = size_cap;
  s.complete = certified || !k.uses(OpKind::Backspace);
  const auto& nodes = ex.nodes();
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (const auto& f : k.final_keys()) {
      const Configuration c = kbd::apply(nodes[id].config, f);
      if (c.size() > max_len)
        continue;
      Word w = c.word();
      if (s.words.insert(w).second) {
        auto keys = ex.path_to(id);
        keys.push_back(f);
        s.witnesses.emplace(std::move(w), std::move(keys));
      }
    }
  }
  return s;
}

inline LanguageSample enumerate(const Keyboard& k, std::size_t max_len)
{
  return enumerate(k, max_len, default_cap(k, max_len));
}

struct NotFoundWithinCap {};

struct FoundExecution {
  std::vector<Key> keys;
};

using SemiDecision = std::variant<FoundExecution, NotFoundWithinCap>;

/// Searches for an accepting execution producing `word`; a miss is not a refutation.
inline SemiDecision member_semidecide(const Keyboard& k, const Word& word, std::size_t size_cap)
{
  oracle_detail::Explorer ex(k, size_cap);
  std::size_t checked = 0;
  auto check_new = [&]() -> std::optional<FoundExecution> {
    const auto& nodes = ex.nodes();
    for (; checked < nodes.size(); ++checked)
      for (const auto& f : k.final_keys())
        if (kbd::apply(nodes[checked].config, f).word() == word) {
          auto keys = ex.path_to(checked);
          keys.push_back(f);
          return FoundExecution{std::move(keys)};
        }
    return std::nullopt;
  };
  do {
    if (auto found = check_new())
      return *found;
  } while (ex.expand_next());
  return NotFoundWithinCap{};
}

} // namespace kbd

#endif // KBD_ORACLE_HPP
